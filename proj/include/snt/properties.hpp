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
#include <array>
#include <cmath>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "snt/implications.hpp"
#include "snt/report.hpp"
#include "snt/samples.hpp"

namespace snt {

// ---------------------------------------------------------------------------
// Single-point violation magnitudes.
//
// Every scan below offers exactly these residuals, so a falsified report can
// always be replayed: re-evaluating the same id at the stored witness tuple
// reproduces a violation exceeding the tolerance.
// ---------------------------------------------------------------------------

/// Axiom residual for a binary connective candidate. Tuple layouts:
/// T1/S1 (x,y); T2/S2 (x,y,z); T3/S3 (a,b,t) with a<=b, worst violation over
/// both argument positions; T4..T6/S4..S6 (x); T7/T8/S7/S8 (x,y).
inline double axiom_violation_at(PropertyId id, const BinaryFn& f,
                                 std::span<const double> pt) {
  switch (id) {
    case PropertyId::T1:
    case PropertyId::S1:
      return std::fabs(f(pt[0], pt[1]) - f(pt[1], pt[0]));
    case PropertyId::T2:
    case PropertyId::S2:
      return std::fabs(f(pt[0], f(pt[1], pt[2])) - f(f(pt[0], pt[1]), pt[2]));
    case PropertyId::T3:
    case PropertyId::S3: {
      const double a = pt[0], b = pt[1], t = pt[2];
      return std::max({f(a, t) - f(b, t), f(t, a) - f(t, b), 0.0});
    }
    case PropertyId::T4:
      return std::fabs(f(pt[0], 1.0) - pt[0]);
    case PropertyId::S4:
      return std::fabs(f(pt[0], 0.0) - pt[0]);
    case PropertyId::T5:
      return std::max(std::fabs(f(0.0, pt[0])), std::fabs(f(pt[0], 0.0)));
    case PropertyId::S5:
      return std::max(std::fabs(f(1.0, pt[0]) - 1.0), std::fabs(f(pt[0], 1.0) - 1.0));
    case PropertyId::T6:
      return std::fabs(f(1.0, pt[0]) - pt[0]);
    case PropertyId::S6:
      return std::fabs(f(0.0, pt[0]) - pt[0]);
    case PropertyId::T7:
      return std::max(f(pt[0], pt[1]) - pt[0], 0.0);
    case PropertyId::S7:
      return std::max(pt[0] - f(pt[0], pt[1]), 0.0);
    case PropertyId::T8:
      return std::max(f(pt[0], pt[1]) - pt[1], 0.0);
    case PropertyId::S8:
      return std::max(pt[1] - f(pt[0], pt[1]), 0.0);
    default:
      throw std::invalid_argument("axiom_violation_at: not a binary-connective axiom");
  }
}

/// Negation axiom residual. N1 ignores the tuple (it names the corners);
/// N2 takes (a,b) with a<=b; N5/N7 take (x); N6 takes (x) and needs the
/// tolerance to decide "N(x)=1".
inline double negation_violation_at(PropertyId id, const UnaryFn& n,
                                    std::span<const double> pt,
                                    double tol = kDefaultTolerance) {
  switch (id) {
    case PropertyId::N1:
      return std::max(std::fabs(n(0.0) - 1.0), std::fabs(n(1.0)));
    case PropertyId::N2:
      return std::max(n(pt[1]) - n(pt[0]), 0.0);
    case PropertyId::N5:
      return std::fabs(n(n(pt[0])) - pt[0]);
    case PropertyId::N6:
      return (n(pt[0]) >= 1.0 - tol && pt[0] > tol) ? pt[0] : 0.0;
    case PropertyId::N7: {
      const double v = n(pt[0]);
      return std::min(std::fabs(v), std::fabs(v - 1.0));
    }
    default:
      throw std::invalid_argument("negation_violation_at: not a negation axiom");
  }
}

/// Implication axiom/property residual. Tuple layouts: I1 (a,b,z) with a<=b;
/// I2 (x,a,b) with a<=b; I3/I4/I5 ignore the tuple; I6/NP/IP (single value);
/// I7 (x); two-variable properties (x,y); EP (x,y,z). ROP and OP need the
/// tolerance to decide "I(x,y)=1"; CP/LCP/RCP need the negation.
inline double property_violation_at(PropertyId id, const Implication& i,
                                    std::span<const double> pt,
                                    double tol = kDefaultTolerance,
                                    const Negation* n = nullptr) {
  auto need_n = [&]() -> const Negation& {
    if (n == nullptr) {
      throw std::invalid_argument(
          std::string("property ") + to_string(id) + " requires a negation");
    }
    return *n;
  };
  switch (id) {
    case PropertyId::I1:
      return std::max(i(pt[1], pt[2]) - i(pt[0], pt[2]), 0.0);
    case PropertyId::I2:
      return std::max(i(pt[0], pt[1]) - i(pt[0], pt[2]), 0.0);
    case PropertyId::I3:
      return std::fabs(i(0.0, 0.0) - 1.0);
    case PropertyId::I4:
      return std::fabs(i(1.0, 1.0) - 1.0);
    case PropertyId::I5:
      return std::fabs(i(1.0, 0.0));
    case PropertyId::I6:
      return std::fabs(i(0.0, pt[0]) - 1.0);
    case PropertyId::I7:
      return std::fabs(i(pt[0], 1.0) - 1.0);
    case PropertyId::I8:
      return std::max(i(pt[0], 0.0) - i(pt[0], pt[1]), 0.0);
    case PropertyId::I9:
      return std::max(i(1.0, pt[1]) - i(pt[0], pt[1]), 0.0);
    case PropertyId::NP:
      return std::fabs(i(1.0, pt[0]) - pt[0]);
    case PropertyId::EP:
      return std::fabs(i(pt[0], i(pt[1], pt[2])) - i(pt[1], i(pt[0], pt[2])));
    case PropertyId::IP:
      return std::fabs(i(pt[0], pt[0]) - 1.0);
    case PropertyId::LOP:
      return pt[0] <= pt[1] ? std::fabs(i(pt[0], pt[1]) - 1.0) : 0.0;
    case PropertyId::ROP:
      return (std::fabs(i(pt[0], pt[1]) - 1.0) <= tol && pt[0] - pt[1] > tol)
                 ? pt[0] - pt[1]
                 : 0.0;
    case PropertyId::OP:
      return std::max(property_violation_at(PropertyId::LOP, i, pt, tol),
                      property_violation_at(PropertyId::ROP, i, pt, tol));
    case PropertyId::CB:
      return std::max(pt[1] - i(pt[0], pt[1]), 0.0);
    case PropertyId::SIB:
      return std::max(i(pt[0], pt[1]) - i(pt[0], i(pt[0], pt[1])), 0.0);
    case PropertyId::IB:
      return std::fabs(i(pt[0], i(pt[0], pt[1])) - i(pt[0], pt[1]));
    case PropertyId::CP: {
      const Negation& neg = need_n();
      return std::fabs(i(pt[0], pt[1]) - i(neg(pt[1]), neg(pt[0])));
    }
    case PropertyId::LCP: {
      const Negation& neg = need_n();
      return std::fabs(i(neg(pt[0]), pt[1]) - i(neg(pt[1]), pt[0]));
    }
    case PropertyId::RCP: {
      const Negation& neg = need_n();
      return std::fabs(i(pt[0], neg(pt[1])) - i(pt[1], neg(pt[0])));
    }
    default:
      throw std::invalid_argument("property_violation_at: not an implication property");
  }
}

/// Law-of-contradiction residual: T(N(x), x) itself.
inline double lc_violation_at(const TNorm& t, const Negation& n, double x) {
  return std::fabs(t(n(x), x));
}

/// Duality residual at (x,y): NDUAL_T_S is |N(T)-S(N,N)|, NDUAL_S_T is
/// |N(S)-T(N,N)|, DEMORGAN the worse of the two.
inline double duality_violation_at(PropertyId id, const TNorm& t, const TConorm& s,
                                   const Negation& n, std::span<const double> pt) {
  const double x = pt[0], y = pt[1];
  switch (id) {
    case PropertyId::NDUAL_T_S:
      return std::fabs(n(t(x, y)) - s(n(x), n(y)));
    case PropertyId::NDUAL_S_T:
      return std::fabs(n(s(x, y)) - t(n(x), n(y)));
    case PropertyId::DEMORGAN:
      return std::max(duality_violation_at(PropertyId::NDUAL_T_S, t, s, n, pt),
                      duality_violation_at(PropertyId::NDUAL_S_T, t, s, n, pt));
    default:
      throw std::invalid_argument("duality_violation_at: not a duality id");
  }
}

// ---------------------------------------------------------------------------
// Scan engines
// ---------------------------------------------------------------------------

namespace detail {

/// Keeps the lexicographically smallest violating tuple seen so far, so
/// reports are identical across runs and scan partitionings.
class WitnessTracker {
 public:
  void offer(std::initializer_list<double> pt, double residual, double tol) {
    if (!(residual > tol)) return;
    if (found_ && !std::lexicographical_compare(pt.begin(), pt.end(),
                                                point_.begin(), point_.end())) {
      return;
    }
    point_.assign(pt.begin(), pt.end());
    residual_ = residual;
    found_ = true;
  }

  PropertyReport report(PropertyId id, long long checked, ReportRole role,
                        std::string note = "") const {
    PropertyReport r;
    r.id = id;
    r.samples_checked = checked;
    r.role = role;
    r.note = std::move(note);
    if (found_) {
      r.verdict = Verdict::falsified;
      r.witness = Witness{point_, residual_};
    }
    return r;
  }

 private:
  std::vector<double> point_;
  double residual_ = 0.0;
  bool found_ = false;
};

template <class F>  // F(x) -> residual
PropertyReport scan_axis(PropertyId id, const SampleSet& s, double tol,
                         ReportRole role, F f, std::string note = "") {
  WitnessTracker tr;
  long long checked = 0;
  for (double x : s.axis()) {
    tr.offer({x}, f(x), tol);
    ++checked;
  }
  for (double x : s.random_points()) {
    tr.offer({x}, f(x), tol);
    ++checked;
  }
  return tr.report(id, checked, role, std::move(note));
}

template <class F>  // F(x,y) -> residual
PropertyReport scan_pairs(PropertyId id, const SampleSet& s, double tol,
                          ReportRole role, F f, std::string note = "") {
  WitnessTracker tr;
  long long checked = 0;
  for (double x : s.axis()) {
    for (double y : s.axis()) {
      tr.offer({x, y}, f(x, y), tol);
      ++checked;
    }
  }
  for (const auto& p : s.random_pairs()) {
    tr.offer({p[0], p[1]}, f(p[0], p[1]), tol);
    ++checked;
  }
  return tr.report(id, checked, role, std::move(note));
}

template <class F>  // F(x,y,z) -> residual, on the coarse triple grid
PropertyReport scan_triples(PropertyId id, const SampleSet& s, double tol,
                            ReportRole role, F f, std::string note = "") {
  WitnessTracker tr;
  long long checked = 0;
  for (double x : s.triple_axis()) {
    for (double y : s.triple_axis()) {
      for (double z : s.triple_axis()) {
        tr.offer({x, y, z}, f(x, y, z), tol);
        ++checked;
      }
    }
  }
  for (const auto& p : s.random_triples()) {
    tr.offer({p[0], p[1], p[2]}, f(p[0], p[1], p[2]), tol);
    ++checked;
  }
  return tr.report(id, checked, role, std::move(note));
}

/// Monotonicity along grid lines: every adjacent axis pair (a,b) against
/// every line coordinate t. The witness tuple is stored pair-first {a,b,t}
/// or line-first {t,a,b} to match the id's replay layout.
template <class F>  // F(a,b,t) -> residual
PropertyReport scan_adjacent_lines(PropertyId id, const SampleSet& s, double tol,
                                   ReportRole role, bool line_first, F f,
                                   std::string note = "") {
  WitnessTracker tr;
  long long checked = 0;
  const auto& axis = s.axis();
  for (double t : axis) {
    for (std::size_t k = 0; k + 1 < axis.size(); ++k) {
      const double a = axis[k], b = axis[k + 1];
      const double residual = f(a, b, t);
      if (line_first) {
        tr.offer({t, a, b}, residual, tol);
      } else {
        tr.offer({a, b, t}, residual, tol);
      }
      ++checked;
    }
  }
  return tr.report(id, checked, role, std::move(note));
}

/// Adjacent-pair scan for unary monotonicity (N2) over the sorted union of
/// the axis and the random samples.
template <class F>  // F(a,b) -> residual
PropertyReport scan_adjacent(PropertyId id, const SampleSet& s, double tol,
                             ReportRole role, F f, std::string note = "") {
  WitnessTracker tr;
  long long checked = 0;
  std::vector<double> line = s.axis();
  line.insert(line.end(), s.random_points().begin(), s.random_points().end());
  std::sort(line.begin(), line.end());
  line.erase(std::unique(line.begin(), line.end()), line.end());
  for (std::size_t k = 0; k + 1 < line.size(); ++k) {
    tr.offer({line[k], line[k + 1]}, f(line[k], line[k + 1]), tol);
    ++checked;
  }
  return tr.report(id, checked, role, std::move(note));
}

/// Fixed-point check (corner axioms I3..I5).
inline PropertyReport check_at_point(PropertyId id, std::initializer_list<double> pt,
                                     double residual, double tol, ReportRole role) {
  WitnessTracker tr;
  tr.offer(pt, residual, tol);
  return tr.report(id, 1, role);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Axiom suites
// ---------------------------------------------------------------------------

/// T1-T8 for an arbitrary binary function (promotion candidates included).
inline std::vector<PropertyReport> check_tnorm_axioms(
    const BinaryFn& f, const SampleSet& samples, double tol = kDefaultTolerance) {
  using detail::scan_adjacent_lines;
  using detail::scan_axis;
  using detail::scan_pairs;
  using detail::scan_triples;
  auto at = [&f](PropertyId id, std::initializer_list<double> pt) {
    return axiom_violation_at(id, f, pt);
  };
  std::vector<PropertyReport> out;
  out.push_back(scan_pairs(PropertyId::T1, samples, tol, ReportRole::axiom,
                           [&](double x, double y) { return at(PropertyId::T1, {x, y}); }));
  out.push_back(scan_triples(PropertyId::T2, samples, tol, ReportRole::axiom,
                             [&](double x, double y, double z) {
                               return at(PropertyId::T2, {x, y, z});
                             }));
  out.push_back(scan_adjacent_lines(PropertyId::T3, samples, tol, ReportRole::axiom,
                                    /*line_first=*/false,
                                    [&](double a, double b, double t) {
                                      return at(PropertyId::T3, {a, b, t});
                                    }));
  out.push_back(scan_axis(PropertyId::T4, samples, tol, ReportRole::axiom,
                          [&](double x) { return at(PropertyId::T4, {x}); }));
  out.push_back(scan_axis(PropertyId::T5, samples, tol, ReportRole::axiom,
                          [&](double x) { return at(PropertyId::T5, {x}); }));
  out.push_back(scan_axis(PropertyId::T6, samples, tol, ReportRole::axiom,
                          [&](double x) { return at(PropertyId::T6, {x}); }));
  out.push_back(scan_pairs(PropertyId::T7, samples, tol, ReportRole::axiom,
                           [&](double x, double y) { return at(PropertyId::T7, {x, y}); }));
  out.push_back(scan_pairs(PropertyId::T8, samples, tol, ReportRole::axiom,
                           [&](double x, double y) { return at(PropertyId::T8, {x, y}); }));
  return out;
}

/// S1-S8 for an arbitrary binary function.
inline std::vector<PropertyReport> check_tconorm_axioms(
    const BinaryFn& f, const SampleSet& samples, double tol = kDefaultTolerance) {
  using detail::scan_adjacent_lines;
  using detail::scan_axis;
  using detail::scan_pairs;
  using detail::scan_triples;
  auto at = [&f](PropertyId id, std::initializer_list<double> pt) {
    return axiom_violation_at(id, f, pt);
  };
  std::vector<PropertyReport> out;
  out.push_back(scan_pairs(PropertyId::S1, samples, tol, ReportRole::axiom,
                           [&](double x, double y) { return at(PropertyId::S1, {x, y}); }));
  out.push_back(scan_triples(PropertyId::S2, samples, tol, ReportRole::axiom,
                             [&](double x, double y, double z) {
                               return at(PropertyId::S2, {x, y, z});
                             }));
  out.push_back(scan_adjacent_lines(PropertyId::S3, samples, tol, ReportRole::axiom,
                                    /*line_first=*/false,
                                    [&](double a, double b, double t) {
                                      return at(PropertyId::S3, {a, b, t});
                                    }));
  out.push_back(scan_axis(PropertyId::S4, samples, tol, ReportRole::axiom,
                          [&](double x) { return at(PropertyId::S4, {x}); }));
  out.push_back(scan_axis(PropertyId::S5, samples, tol, ReportRole::axiom,
                          [&](double x) { return at(PropertyId::S5, {x}); }));
  out.push_back(scan_axis(PropertyId::S6, samples, tol, ReportRole::axiom,
                          [&](double x) { return at(PropertyId::S6, {x}); }));
  out.push_back(scan_pairs(PropertyId::S7, samples, tol, ReportRole::axiom,
                           [&](double x, double y) { return at(PropertyId::S7, {x, y}); }));
  out.push_back(scan_pairs(PropertyId::S8, samples, tol, ReportRole::axiom,
                           [&](double x, double y) { return at(PropertyId::S8, {x, y}); }));
  return out;
}

inline std::vector<PropertyReport> check_axioms(const TNorm& t, const SampleSet& samples,
                                                double tol = kDefaultTolerance) {
  return check_tnorm_axioms(t.fn(), samples, tol);
}

inline std::vector<PropertyReport> check_axioms(const TConorm& s, const SampleSet& samples,
                                                double tol = kDefaultTolerance) {
  return check_tconorm_axioms(s.fn(), samples, tol);
}

/// N1 (exact), N2, plus N5/N6/N7 scans for whichever classes the flags claim.
inline std::vector<PropertyReport> check_axioms(const Negation& n, const SampleSet& samples,
                                                double tol = kDefaultTolerance) {
  const SampleSet local = samples.with_extra_critical(n.critical_points());
  const UnaryFn& f = n.fn();
  std::vector<PropertyReport> out;
  out.push_back(detail::check_at_point(
      PropertyId::N1, {0.0, 1.0},
      negation_violation_at(PropertyId::N1, f, {}, tol), 0.0, ReportRole::axiom));
  out.back().note = "boundary values compared exactly";
  out.push_back(detail::scan_adjacent(
      PropertyId::N2, local, tol, ReportRole::axiom, [&](double a, double b) {
        const double pt[] = {a, b};
        return negation_violation_at(PropertyId::N2, f, pt, tol);
      }));
  auto scan_flagged = [&](PropertyId id) {
    out.push_back(detail::scan_axis(id, local, tol, ReportRole::axiom, [&](double x) {
      const double pt[] = {x};
      return negation_violation_at(id, f, pt, tol);
    }, std::string("declared by flag: ") + to_string(id)));
  };
  if (n.flags().strong) scan_flagged(PropertyId::N5);
  if (n.flags().non_filling) scan_flagged(PropertyId::N6);
  if (n.flags().crisp) scan_flagged(PropertyId::N7);
  return out;
}

/// One report per counterexample scan of a single implication property or
/// axiom. CP/LCP/RCP require the negation argument.
inline PropertyReport check_property(PropertyId id, const Implication& i,
                                     const SampleSet& samples,
                                     double tol = kDefaultTolerance,
                                     const Negation* n = nullptr) {
  SampleSet local = samples.with_extra_critical(i.critical_points());
  if (n != nullptr) local = local.with_extra_critical(n->critical_points());
  auto at1 = [&](double x) {
    const double pt[] = {x};
    return property_violation_at(id, i, pt, tol, n);
  };
  auto at2 = [&](double x, double y) {
    const double pt[] = {x, y};
    return property_violation_at(id, i, pt, tol, n);
  };
  auto at3 = [&](double x, double y, double z) {
    const double pt[] = {x, y, z};
    return property_violation_at(id, i, pt, tol, n);
  };
  switch (id) {
    case PropertyId::I1:
      return detail::scan_adjacent_lines(id, local, tol, ReportRole::axiom,
                                         /*line_first=*/false,
                                         [&](double a, double b, double t) {
                                           const double pt[] = {a, b, t};
                                           return property_violation_at(id, i, pt, tol, n);
                                         });
    case PropertyId::I2:
      return detail::scan_adjacent_lines(id, local, tol, ReportRole::axiom,
                                         /*line_first=*/true,
                                         [&](double a, double b, double t) {
                                           const double pt[] = {t, a, b};
                                           return property_violation_at(id, i, pt, tol, n);
                                         });
    case PropertyId::I3:
      return detail::check_at_point(id, {0.0, 0.0}, at2(0.0, 0.0), tol, ReportRole::axiom);
    case PropertyId::I4:
      return detail::check_at_point(id, {1.0, 1.0}, at2(1.0, 1.0), tol, ReportRole::axiom);
    case PropertyId::I5:
      return detail::check_at_point(id, {1.0, 0.0}, at2(1.0, 0.0), tol, ReportRole::axiom);
    case PropertyId::I6:
    case PropertyId::I7:
      return detail::scan_axis(id, local, tol, ReportRole::axiom, at1);
    case PropertyId::I8:
    case PropertyId::I9:
      return detail::scan_pairs(id, local, tol, ReportRole::axiom, at2);
    case PropertyId::NP:
    case PropertyId::IP:
      return detail::scan_axis(id, local, tol, ReportRole::property, at1);
    case PropertyId::EP:
      return detail::scan_triples(id, local, tol, ReportRole::property, at3);
    case PropertyId::LOP:
    case PropertyId::ROP:
    case PropertyId::OP:
    case PropertyId::CB:
    case PropertyId::SIB:
    case PropertyId::IB:
    case PropertyId::CP:
    case PropertyId::LCP:
    case PropertyId::RCP:
      return detail::scan_pairs(id, local, tol, ReportRole::property, at2);
    default:
      throw std::invalid_argument(std::string("check_property: unsupported id ") +
                                  to_string(id));
  }
}

/// I1-I9 for an implication.
inline std::vector<PropertyReport> check_axioms(const Implication& i,
                                                const SampleSet& samples,
                                                double tol = kDefaultTolerance) {
  std::vector<PropertyReport> out;
  for (PropertyId id : {PropertyId::I1, PropertyId::I2, PropertyId::I3, PropertyId::I4,
                        PropertyId::I5, PropertyId::I6, PropertyId::I7, PropertyId::I8,
                        PropertyId::I9}) {
    out.push_back(check_property(id, i, samples, tol));
  }
  return out;
}

/// Law of contradiction T(N(x), x) = 0 over the 1-D samples.
inline PropertyReport check_lc(const TNorm& t, const Negation& n,
                               const SampleSet& samples,
                               double tol = kDefaultTolerance) {
  const SampleSet local = samples.with_extra_critical(n.critical_points());
  return detail::scan_axis(PropertyId::LC, local, tol, ReportRole::property,
                           [&](double x) { return lc_violation_at(t, n, x); });
}

/// Both duality equations plus their conjunction. The DEMORGAN verdict
/// reflects the numeric conjunction; Def 2.8 also wants N strict, which is
/// metadata, so the note records whether the triple is certified.
inline std::array<PropertyReport, 3> check_duality(const TNorm& t, const TConorm& s,
                                                   const Negation& n,
                                                   const SampleSet& samples,
                                                   double tol = kDefaultTolerance) {
  const SampleSet local = samples.with_extra_critical(n.critical_points());
  auto scan = [&](PropertyId id, std::string note) {
    return detail::scan_pairs(id, local, tol, ReportRole::property,
                              [&](double x, double y) {
                                const double pt[] = {x, y};
                                return duality_violation_at(id, t, s, n, pt);
                              },
                              std::move(note));
  };
  PropertyReport ts = scan(PropertyId::NDUAL_T_S, "");
  PropertyReport st = scan(PropertyId::NDUAL_S_T, "");
  PropertyReport both = scan(
      PropertyId::DEMORGAN,
      n.flags().strict
          ? "negation is strict: equalities certify a De Morgan triple"
          : "negation lacks the strict flag: triple not certified even if the "
            "equalities hold");
  return {std::move(ts), std::move(st), std::move(both)};
}

// ---------------------------------------------------------------------------
// Pointwise comparisons (used by theorem suites and tests)
// ---------------------------------------------------------------------------

/// |f - g| <= tol at every 2-D sample.
inline PropertyReport check_pointwise_equal(PropertyId id, const BinaryFn& f,
                                            const BinaryFn& g, const SampleSet& samples,
                                            double tol = kDefaultTolerance,
                                            ReportRole role = ReportRole::property,
                                            std::string note = "") {
  return detail::scan_pairs(id, samples, tol, role,
                            [&](double x, double y) { return std::fabs(f(x, y) - g(x, y)); },
                            std::move(note));
}

/// f >= g - tol at every 2-D sample.
inline PropertyReport check_pointwise_geq(PropertyId id, const BinaryFn& f,
                                          const BinaryFn& g, const SampleSet& samples,
                                          double tol = kDefaultTolerance,
                                          ReportRole role = ReportRole::property,
                                          std::string note = "") {
  return detail::scan_pairs(id, samples, tol, role,
                            [&](double x, double y) {
                              return std::max(g(x, y) - f(x, y), 0.0);
                            },
                            std::move(note));
}

/// |f - g| <= tol at every 1-D sample.
inline PropertyReport check_unary_pointwise_equal(PropertyId id, const UnaryFn& f,
                                                  const UnaryFn& g,
                                                  const SampleSet& samples,
                                                  double tol = kDefaultTolerance,
                                                  ReportRole role = ReportRole::property,
                                                  std::string note = "") {
  return detail::scan_axis(id, samples, tol, role,
                           [&](double x) { return std::fabs(f(x) - g(x)); },
                           std::move(note));
}

}  // namespace snt
