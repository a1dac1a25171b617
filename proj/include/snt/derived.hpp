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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "snt/properties.hpp"

namespace snt {

/// How a DerivedConnective was built from an snt-implication I and an
/// auxiliary negation N'.
enum class DerivedConstruction {
  s_from_impl,  ///< S(x,y) = I(N'(x), y)
  t_from_impl,  ///< T(x,y) = N'(I(x, N'(y)))
  t_tilde,      ///< T(x,y) = 1 - I(N'(1-x), 1-y), the dual of s_from_impl
  s_tilde,      ///< S(x,y) = 1 - N'(I(1-x, N'(1-y))), the dual of t_from_impl
};

inline const char* to_string(DerivedConstruction c) {
  switch (c) {
    case DerivedConstruction::s_from_impl: return "deriveS";
    case DerivedConstruction::t_from_impl: return "deriveT";
    case DerivedConstruction::t_tilde: return "deriveTt";
    case DerivedConstruction::s_tilde: return "deriveSt";
  }
  return "?";
}

inline bool is_conorm_side(DerivedConstruction c) {
  return c == DerivedConstruction::s_from_impl || c == DerivedConstruction::s_tilde;
}

/// A binary function built from an snt-implication. It always satisfies its
/// construction's unconditional boundary and monotonicity facts; the full
/// t-norm/t-conorm axiom suites hold only under extra hypotheses (S=max,
/// T=min, N=N' strong) and must be checked before promotion.
class DerivedConnective {
 public:
  DerivedConnective(DerivedConstruction c, Implication source, Negation nprime,
                    BinaryFn fn)
      : construction_(c),
        source_(std::move(source)),
        nprime_(std::move(nprime)),
        fn_(std::move(fn)),
        name_(std::string(to_string(c)) + "(" + source_.name() + "," +
              nprime_.name() + ")") {}

  double operator()(double x, double y) const { return fn_(x, y); }
  DerivedConstruction construction() const { return construction_; }
  const Implication& source() const { return source_; }
  const Negation& nprime() const { return nprime_; }
  const BinaryFn& fn() const { return fn_; }
  const std::string& name() const { return name_; }

  std::vector<double> critical_points() const {
    std::vector<double> pts = source_.critical_points();
    const auto extra = nprime_.critical_points();
    pts.insert(pts.end(), extra.begin(), extra.end());
    return pts;
  }

 private:
  DerivedConstruction construction_;
  Implication source_;
  Negation nprime_;
  BinaryFn fn_;
  std::string name_;
};

namespace detail {

inline void require_snt(const Implication& i, const char* who) {
  if (i.recipe() != Recipe::snt) {
    throw std::invalid_argument(std::string(who) + ": implication must have an snt recipe");
  }
}

}  // namespace detail

/// S(x,y) = I(N'(x), y).
inline DerivedConnective derive_tconorm(const Implication& i, const Negation& nprime) {
  detail::require_snt(i, "derive_tconorm");
  BinaryFn f = i.fn();
  UnaryFn np = nprime.fn();
  return DerivedConnective(DerivedConstruction::s_from_impl, i, nprime,
                           [f, np](double x, double y) { return f(np(x), y); });
}

/// T(x,y) = N'(I(x, N'(y))).
inline DerivedConnective derive_tnorm(const Implication& i, const Negation& nprime) {
  detail::require_snt(i, "derive_tnorm");
  BinaryFn f = i.fn();
  UnaryFn np = nprime.fn();
  return DerivedConnective(DerivedConstruction::t_from_impl, i, nprime,
                           [f, np](double x, double y) { return np(f(x, np(y))); });
}

/// T(x,y) = 1 - I(N'(1-x), 1-y), the standard-negation dual of derive_tconorm.
inline DerivedConnective derive_tnorm_tilde(const Implication& i, const Negation& nprime) {
  detail::require_snt(i, "derive_tnorm_tilde");
  BinaryFn f = i.fn();
  UnaryFn np = nprime.fn();
  return DerivedConnective(
      DerivedConstruction::t_tilde, i, nprime,
      [f, np](double x, double y) { return 1.0 - f(np(1.0 - x), 1.0 - y); });
}

/// S(x,y) = 1 - N'(I(1-x, N'(1-y))), the standard-negation dual of
/// derive_tnorm.
inline DerivedConnective derive_tconorm_tilde(const Implication& i,
                                              const Negation& nprime) {
  detail::require_snt(i, "derive_tconorm_tilde");
  BinaryFn f = i.fn();
  UnaryFn np = nprime.fn();
  return DerivedConnective(
      DerivedConstruction::s_tilde, i, nprime,
      [f, np](double x, double y) { return 1.0 - np(f(1.0 - x, np(1.0 - y))); });
}

/// Full axiom suite for the side the construction targets (S1-S8 or T1-T8).
inline std::vector<PropertyReport> check_derived_axioms(
    const DerivedConnective& d, const SampleSet& samples,
    double tol = kDefaultTolerance) {
  const SampleSet local = samples.with_extra_critical(d.critical_points());
  return is_conorm_side(d.construction()) ? check_tconorm_axioms(d.fn(), local, tol)
                                          : check_tnorm_axioms(d.fn(), local, tol);
}

/// The unconditional facts only: boundary (S5-style for the conorm side,
/// T5-style for the norm side) and monotonicity. These hold for every snt
/// source and every N'.
inline std::vector<PropertyReport> check_derived_unconditional(
    const DerivedConnective& d, const SampleSet& samples,
    double tol = kDefaultTolerance) {
  const SampleSet local = samples.with_extra_critical(d.critical_points());
  const BinaryFn& f = d.fn();
  std::vector<PropertyReport> out;
  if (is_conorm_side(d.construction())) {
    out.push_back(detail::scan_axis(PropertyId::S5, local, tol, ReportRole::property,
                                    [&](double x) {
                                      const double pt[] = {x};
                                      return axiom_violation_at(PropertyId::S5, f, pt);
                                    }));
    out.push_back(detail::scan_adjacent_lines(
        PropertyId::S3, local, tol, ReportRole::property, /*line_first=*/false,
        [&](double a, double b, double t) {
          const double pt[] = {a, b, t};
          return axiom_violation_at(PropertyId::S3, f, pt);
        }));
  } else {
    out.push_back(detail::scan_axis(PropertyId::T5, local, tol, ReportRole::property,
                                    [&](double x) {
                                      const double pt[] = {x};
                                      return axiom_violation_at(PropertyId::T5, f, pt);
                                    }));
    out.push_back(detail::scan_adjacent_lines(
        PropertyId::T3, local, tol, ReportRole::property, /*line_first=*/false,
        [&](double a, double b, double t) {
          const double pt[] = {a, b, t};
          return axiom_violation_at(PropertyId::T3, f, pt);
        }));
  }
  return out;
}

namespace detail {

inline bool all_pass(const std::vector<PropertyReport>& reports) {
  for (const auto& r : reports) {
    if (r.falsified()) return false;
  }
  return true;
}

/// Idempotence is the one flag that can be confirmed exactly on samples.
inline bool idempotent_on(const BinaryFn& f, const SampleSet& samples) {
  for (double x : samples.axis()) {
    if (f(x, x) != x) return false;
  }
  return true;
}

}  // namespace detail

/// Promote to a TConorm after the full axiom suite passes; nullopt otherwise.
/// Promoted flags are all false except idempotent when verified exactly.
inline std::optional<TConorm> promote_tconorm(const DerivedConnective& d,
                                              const SampleSet& samples,
                                              double tol = kDefaultTolerance) {
  if (!is_conorm_side(d.construction())) {
    throw std::invalid_argument("promote_tconorm: construction yields a t-norm");
  }
  if (!detail::all_pass(check_derived_axioms(d, samples, tol))) return std::nullopt;
  ConnectiveFlags flags;
  flags.idempotent = detail::idempotent_on(d.fn(), samples);
  return TConorm(d.name(), d.fn(), flags);
}

/// Promote to a TNorm after the full axiom suite passes; nullopt otherwise.
inline std::optional<TNorm> promote_tnorm(const DerivedConnective& d,
                                          const SampleSet& samples,
                                          double tol = kDefaultTolerance) {
  if (is_conorm_side(d.construction())) {
    throw std::invalid_argument("promote_tnorm: construction yields a t-conorm");
  }
  if (!detail::all_pass(check_derived_axioms(d, samples, tol))) return std::nullopt;
  ConnectiveFlags flags;
  flags.idempotent = detail::idempotent_on(d.fn(), samples);
  return TNorm(d.name(), d.fn(), flags);
}

}  // namespace snt
