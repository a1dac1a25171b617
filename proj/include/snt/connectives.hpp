/*
 * Copyright 2026 The snt authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <algorithm>
#include <charconv>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace snt {

using UnaryFn = std::function<double(double)>;
using BinaryFn = std::function<double(double, double)>;

namespace detail {

/// Shortest decimal form that parses back to the same double ("0.3", "1e-06").
inline std::string format_param(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, end);
}

}  // namespace detail

/// Classification metadata for t-norms and t-conorms. Flags are declared by
/// constructors, never inferred; continuity in particular is metadata only.
struct ConnectiveFlags {
  bool continuous = false;
  bool idempotent = false;
  bool strict = false;
  bool positive = false;
};

/// A t-norm as a first-class value: an evaluable function on [0,1]^2 together
/// with a display name and declared classification flags. Immutable after
/// construction; evaluation is pure and reentrant.
class TNorm {
 public:
  TNorm(std::string name, BinaryFn fn, ConnectiveFlags flags)
      : name_(std::move(name)), fn_(std::move(fn)), flags_(flags) {}

  double operator()(double x, double y) const { return fn_(x, y); }
  const std::string& name() const { return name_; }
  const ConnectiveFlags& flags() const { return flags_; }
  const BinaryFn& fn() const { return fn_; }

 private:
  std::string name_;
  BinaryFn fn_;
  ConnectiveFlags flags_;
};

/// A t-conorm value; same shape as TNorm but a distinct type so that argument
/// slots cannot be confused.
class TConorm {
 public:
  TConorm(std::string name, BinaryFn fn, ConnectiveFlags flags)
      : name_(std::move(name)), fn_(std::move(fn)), flags_(flags) {}

  double operator()(double x, double y) const { return fn_(x, y); }
  const std::string& name() const { return name_; }
  const ConnectiveFlags& flags() const { return flags_; }
  const BinaryFn& fn() const { return fn_; }

 private:
  std::string name_;
  BinaryFn fn_;
  ConnectiveFlags flags_;
};

struct NegationFlags {
  bool strict = false;       ///< strictly decreasing and continuous
  bool strong = false;       ///< involutive: N(N(x)) = x
  bool non_filling = false;  ///< N(x) = 1 only at x = 0
  bool crisp = false;        ///< values in {0,1} only
};

/// A fuzzy negation value. Crisp members keep their threshold so closed forms
/// and sample sets can use exact comparisons against it.
class Negation {
 public:
  Negation(std::string name, UnaryFn fn, NegationFlags flags,
           std::optional<double> alpha = std::nullopt,
           std::optional<double> lambda = std::nullopt)
      : name_(std::move(name)),
        fn_(std::move(fn)),
        flags_(flags),
        alpha_(alpha),
        lambda_(lambda) {}

  double operator()(double x) const { return fn_(x); }
  const std::string& name() const { return name_; }
  const NegationFlags& flags() const { return flags_; }
  const UnaryFn& fn() const { return fn_; }

  /// Threshold of the crisp families, if any.
  std::optional<double> alpha() const { return alpha_; }
  /// Sugeno parameter, if any.
  std::optional<double> lambda() const { return lambda_; }

  /// Points every scan should visit for this negation: the crisp threshold
  /// and its +-1e-6 neighbours, clipped to [0,1].
  std::vector<double> critical_points() const {
    std::vector<double> pts;
    if (alpha_) {
      const double a = *alpha_;
      pts = {a, std::max(0.0, a - 1e-6), std::min(1.0, a + 1e-6)};
    }
    return pts;
  }

 private:
  std::string name_;
  UnaryFn fn_;
  NegationFlags flags_;
  std::optional<double> alpha_;
  std::optional<double> lambda_;
};

// ---------------------------------------------------------------------------
// Basic families
// ---------------------------------------------------------------------------

inline TNorm tnorm_min() {
  return TNorm("min", [](double x, double y) { return std::min(x, y); },
               {.continuous = true, .idempotent = true, .strict = false, .positive = true});
}

inline TNorm tnorm_product() {
  return TNorm("prod", [](double x, double y) { return x * y; },
               {.continuous = true, .idempotent = false, .strict = true, .positive = true});
}

inline TNorm tnorm_lukasiewicz() {
  return TNorm("luk", [](double x, double y) { return std::max(x + y - 1.0, 0.0); },
               {.continuous = true});
}

/// Drastic product: 0 on [0,1[^2, min on the boundary lines x=1 / y=1.
inline TNorm tnorm_drastic() {
  return TNorm("drastic",
               [](double x, double y) {
                 return (x == 1.0 || y == 1.0) ? std::min(x, y) : 0.0;
               },
               {});
}

inline std::vector<TNorm> basic_tnorms() {
  return {tnorm_min(), tnorm_product(), tnorm_lukasiewicz(), tnorm_drastic()};
}

inline TConorm tconorm_max() {
  return TConorm("max", [](double x, double y) { return std::max(x, y); },
                 {.continuous = true, .idempotent = true, .strict = false, .positive = true});
}

inline TConorm tconorm_probsum() {
  return TConorm("probsum", [](double x, double y) { return x + y - x * y; },
                 {.continuous = true, .idempotent = false, .strict = true, .positive = true});
}

inline TConorm tconorm_lukasiewicz() {
  return TConorm("luk", [](double x, double y) { return std::min(x + y, 1.0); },
                 {.continuous = true});
}

/// Drastic sum: 1 on ]0,1]^2, max on the boundary lines x=0 / y=0. Note
/// S_D(x,y)=1 with both arguments interior, so it is not positive.
inline TConorm tconorm_drastic() {
  return TConorm("drastic",
                 [](double x, double y) {
                   return (x == 0.0 || y == 0.0) ? std::max(x, y) : 1.0;
                 },
                 {});
}

inline std::vector<TConorm> basic_tconorms() {
  return {tconorm_max(), tconorm_probsum(), tconorm_lukasiewicz(), tconorm_drastic()};
}

inline Negation negation_standard() {
  return Negation("std", [](double x) { return 1.0 - x; },
                  {.strict = true, .strong = true, .non_filling = true, .crisp = false});
}

/// N_alpha: 1 for x <= alpha, 0 otherwise; alpha in [0,1). N_0 is the bottom
/// negation and the only non-filling member of the family.
inline Negation negation_alpha_lower(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("negation_alpha_lower: alpha must lie in [0,1)");
  }
  NegationFlags flags{.crisp = true};
  flags.non_filling = (alpha == 0.0);
  return Negation("nalpha:" + detail::format_param(alpha),
                  [alpha](double x) { return x <= alpha ? 1.0 : 0.0; }, flags, alpha);
}

/// N^alpha: 1 for x < alpha, 0 otherwise; alpha in (0,1]. N^1 is the top
/// negation. Every member fills on (0,alpha), so none is non-filling.
inline Negation negation_alpha_upper(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("negation_alpha_upper: alpha must lie in (0,1]");
  }
  return Negation("nupper:" + detail::format_param(alpha),
                  [alpha](double x) { return x < alpha ? 1.0 : 0.0; },
                  {.crisp = true}, alpha);
}

/// Sugeno family (1-x)/(1+lambda*x), lambda > -1; strong for every lambda and
/// equal to the standard negation at lambda = 0.
inline Negation negation_sugeno(double lambda) {
  if (!(lambda > -1.0)) {
    throw std::invalid_argument("negation_sugeno: lambda must be > -1");
  }
  return Negation("sugeno:" + detail::format_param(lambda),
                  [lambda](double x) { return (1.0 - x) / (1.0 + lambda * x); },
                  {.strict = true, .strong = true, .non_filling = true, .crisp = false},
                  std::nullopt, lambda);
}

// ---------------------------------------------------------------------------
// Duality
// ---------------------------------------------------------------------------

/// N-dual t-conorm of T: S(x,y) = N(T(N(x),N(y))). With the standard negation
/// this is 1 - T(1-x,1-y). The negation must be strong (involutive), or the
/// result would not invert back.
inline TConorm dual_tconorm_of(const TNorm& t, const Negation& n = negation_standard()) {
  if (!n.flags().strong) {
    throw std::invalid_argument("dual_tconorm_of: negation must be strong");
  }
  BinaryFn tf = t.fn();
  UnaryFn nf = n.fn();
  return TConorm("dual(" + t.name() + "," + n.name() + ")",
                 [tf, nf](double x, double y) { return nf(tf(nf(x), nf(y))); },
                 t.flags());
}

/// N-dual t-norm of S: T(x,y) = N(S(N(x),N(y))).
inline TNorm dual_tnorm_of(const TConorm& s, const Negation& n = negation_standard()) {
  if (!n.flags().strong) {
    throw std::invalid_argument("dual_tnorm_of: negation must be strong");
  }
  BinaryFn sf = s.fn();
  UnaryFn nf = n.fn();
  return TNorm("dual(" + s.name() + "," + n.name() + ")",
               [sf, nf](double x, double y) { return nf(sf(nf(x), nf(y))); },
               s.flags());
}

}  // namespace snt
