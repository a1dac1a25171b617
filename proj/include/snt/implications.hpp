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

#include "snt/connectives.hpp"
#include "snt/samples.hpp"

namespace snt {

/// How an Implication was built. Property checkers use this to decide which
/// result suites apply and to reach the generating connectives.
enum class Recipe {
  sn,           ///< S(N(x), y)
  tn,           ///< N(T(x, N(y)))
  snt,          ///< S(N(T(x, N(y))), N(x))
  crisp_lower,  ///< 1 if x <= alpha or y > alpha, else 0
  crisp_upper,  ///< 1 if x < alpha or y >= alpha, else 0
  derived,      ///< wrapped function without stored components
};

inline const char* to_string(Recipe r) {
  switch (r) {
    case Recipe::sn: return "sn";
    case Recipe::tn: return "tn";
    case Recipe::snt: return "snt";
    case Recipe::crisp_lower: return "crisplow";
    case Recipe::crisp_upper: return "crispup";
    case Recipe::derived: return "derived";
  }
  return "?";
}

/// A fuzzy implication value on [0,1]^2. Evaluation composes the stored
/// connective evaluations with no algebraic simplification; closed forms are
/// separate values to be tested against, never substituted in.
class Implication {
 public:
  double operator()(double x, double y) const { return fn_(x, y); }
  const std::string& name() const { return name_; }
  Recipe recipe() const { return recipe_; }
  const BinaryFn& fn() const { return fn_; }

  /// Generating connectives, when the recipe stores them.
  const TConorm* conorm() const { return s_ ? &*s_ : nullptr; }
  const TNorm* norm() const { return t_ ? &*t_ : nullptr; }
  const Negation* negation() const { return n_ ? &*n_ : nullptr; }
  /// Threshold of the crisp closed forms.
  std::optional<double> alpha() const { return alpha_; }

  /// Critical sample points contributed by the components (crisp thresholds
  /// and their +-1e-6 neighbours).
  std::vector<double> critical_points() const {
    std::vector<double> pts;
    if (n_) pts = n_->critical_points();
    if (alpha_) {
      const double a = *alpha_;
      pts.push_back(a);
      pts.push_back(std::max(0.0, a - 1e-6));
      pts.push_back(std::min(1.0, a + 1e-6));
    }
    return pts;
  }

  static Implication make(std::string name, BinaryFn fn, Recipe recipe,
                          std::optional<TConorm> s = std::nullopt,
                          std::optional<Negation> n = std::nullopt,
                          std::optional<TNorm> t = std::nullopt,
                          std::optional<double> alpha = std::nullopt) {
    Implication i;
    i.name_ = std::move(name);
    i.fn_ = std::move(fn);
    i.recipe_ = recipe;
    i.s_ = std::move(s);
    i.n_ = std::move(n);
    i.t_ = std::move(t);
    i.alpha_ = alpha;
    return i;
  }

 private:
  Implication() = default;

  std::string name_;
  BinaryFn fn_;
  Recipe recipe_ = Recipe::derived;
  std::optional<TConorm> s_;
  std::optional<Negation> n_;
  std::optional<TNorm> t_;
  std::optional<double> alpha_;
};

/// (S,N)-implication I(x,y) = S(N(x), y), the fuzzy material implication.
inline Implication build_sn(const TConorm& s, const Negation& n) {
  BinaryFn sf = s.fn();
  UnaryFn nf = n.fn();
  return Implication::make(
      "sn(" + s.name() + "," + n.name() + ")",
      [sf, nf](double x, double y) { return sf(nf(x), y); }, Recipe::sn, s, n);
}

/// (T,N)-implication I(x,y) = N(T(x, N(y))), the negated-conjunction form.
inline Implication build_tn(const TNorm& t, const Negation& n) {
  BinaryFn tf = t.fn();
  UnaryFn nf = n.fn();
  return Implication::make(
      "tn(" + t.name() + "," + n.name() + ")",
      [tf, nf](double x, double y) { return nf(tf(x, nf(y))); }, Recipe::tn,
      std::nullopt, n, t);
}

/// (S,N,T)-implication I(x,y) = S(N(T(x, N(y))), N(x)), the fuzzy form of
/// p -> q == not(p and not q) or not p.
inline Implication build_snt(const TConorm& s, const Negation& n, const TNorm& t) {
  BinaryFn sf = s.fn();
  BinaryFn tf = t.fn();
  UnaryFn nf = n.fn();
  return Implication::make(
      "snt(" + s.name() + "," + n.name() + "," + t.name() + ")",
      [sf, tf, nf](double x, double y) { return sf(nf(tf(x, nf(y))), nf(x)); },
      Recipe::snt, s, n, t);
}

/// Two-valued implication equal to every (S,N_alpha,T)-implication:
/// 1 if x <= alpha or y > alpha, else 0. alpha in [0,1).
inline Implication closed_crisp_lower(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("closed_crisp_lower: alpha must lie in [0,1)");
  }
  return Implication::make(
      "crisplow:" + detail::format_param(alpha),
      [alpha](double x, double y) { return (x <= alpha || y > alpha) ? 1.0 : 0.0; },
      Recipe::crisp_lower, std::nullopt, std::nullopt, std::nullopt, alpha);
}

/// Two-valued implication equal to every (S,N^alpha,T)-implication:
/// 1 if x < alpha or y >= alpha, else 0. alpha in (0,1].
inline Implication closed_crisp_upper(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("closed_crisp_upper: alpha must lie in (0,1]");
  }
  return Implication::make(
      "crispup:" + detail::format_param(alpha),
      [alpha](double x, double y) { return (x < alpha || y >= alpha) ? 1.0 : 0.0; },
      Recipe::crisp_upper, std::nullopt, std::nullopt, std::nullopt, alpha);
}

/// Wrap an arbitrary binary function as an Implication so it can be run
/// through the axiom checkers (nothing about it is assumed).
inline Implication implication_from_function(std::string name, BinaryFn fn) {
  return Implication::make(std::move(name), std::move(fn), Recipe::derived);
}

/// Natural negation x -> I(x,0). Returned as a plain function, not a
/// Negation: for snt recipes it equals S(N(x),N(x)), which need not satisfy
/// the negation axioms for arbitrary S. Use promote_natural_negation to get a
/// checked Negation value.
inline UnaryFn natural_negation(const Implication& i) {
  BinaryFn f = i.fn();
  return [f](double x) { return f(x, 0.0); };
}

/// Checks N1 exactly and N2 on the sample axis before wrapping the natural
/// negation as a Negation (all flags false). Returns nullopt if either fails.
inline std::optional<Negation> promote_natural_negation(
    const Implication& i, const SampleSet& samples, double tol = kDefaultTolerance) {
  UnaryFn f = natural_negation(i);
  if (f(0.0) != 1.0 || f(1.0) != 0.0) return std::nullopt;
  const SampleSet local = samples.with_extra_critical(i.critical_points());
  const auto& axis = local.axis();
  for (std::size_t k = 0; k + 1 < axis.size(); ++k) {
    if (f(axis[k + 1]) - f(axis[k]) > tol) return std::nullopt;
  }
  return Negation("natneg(" + i.name() + ")", f, NegationFlags{});
}

}  // namespace snt
