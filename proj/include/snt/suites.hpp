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
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "snt/properties.hpp"

namespace snt {

/// Named result suites. Each suite scans its hypotheses where they are
/// numerically checkable (involution, crispness, LC, duality, pointwise
/// max/min equality), trusts flags where they are metadata-only (positivity,
/// strictness) and says so in the note, runs the conclusion scans, and emits
/// one theorem-role verdict per claimed item stating whether prediction and
/// scans agree. Negative claims ("does not satisfy NP") are confirmed by a
/// falsified conclusion scan.
enum class SuiteId {
  prop2_2,     ///< sn-implications: NP, EP, natural negation, contrapositives
  prop2_4,     ///< strong N recovers T from the tn-implication
  prop3_2,     ///< snt: NP iff strong; CB/SIB for strong; NATNEG/IP/LOP conditions
  crisp_prop,  ///< snt with crisp N: EP/IP/LOP hold, NP/ROP/OP fail
  prop3_3,     ///< snt vs sn/tn: dominance and composition identities
  thm3_1,      ///< positive S, non-filling N: IP iff LC
  cor3_1,      ///< strict S variant of thm3_1
  prop3_4,     ///< T N-dual to S, strong N: EP
  lemma3_1,    ///< S N-dual to T, strong N: I(N(x),y)=S(S(x,y),x)=S(S(x,x),y)
  prop3_5,     ///< S=max, T=min, strong N: L-CP(N)
};

struct SuiteInfo {
  SuiteId id;
  const char* name;    ///< CLI identifier
  const char* slots;   ///< input order, e.g. "S,N,T" or "T,S,N"
  const char* summary;
};

inline std::span<const SuiteInfo> suite_catalog() {
  static const SuiteInfo table[] = {
      {SuiteId::prop2_2, "Prop2.2", "S,N",
       "sn(S,N): NP, EP, natural negation = N, R-CP(N); CP(N) for strong N, "
       "L-CP for strict N"},
      {SuiteId::prop2_4, "Prop2.4", "T,N",
       "strong N: T(x,y) = N(tn(T,N)(x,N(y))) recovers the t-norm"},
      {SuiteId::prop3_2, "Prop3.2", "S,N,T",
       "snt(S,N,T): NP iff N strong; CB and SIB for strong N; natural "
       "negation = N for S=max or crisp N; IP and LOP for crisp N"},
      {SuiteId::crisp_prop, "CrispProp", "S,N,T",
       "crisp N: EP, IP, LOP hold; NP, ROP, OP are falsified"},
      {SuiteId::prop3_3, "Prop3.3", "S,N,T",
       "snt >= tn; snt(x,y) = sn(x, tn(x,y)) for strong N; both composition "
       "identities for a De Morgan triple"},
      {SuiteId::thm3_1, "Thm3.1", "T,S,N",
       "positive S, non-filling N: IP holds iff (T,N) satisfies the law of "
       "contradiction"},
      {SuiteId::cor3_1, "Cor3.1", "T,S,N",
       "strict S, non-filling N: IP holds iff (T,N) satisfies the law of "
       "contradiction"},
      {SuiteId::prop3_4, "Prop3.4", "S,N,T",
       "T N-dual to S, strong N: snt(S,N,T) satisfies EP"},
      {SuiteId::lemma3_1, "Lemma3.1", "S,N,T",
       "S N-dual to T, strong N: I(N(x),y) = S(S(x,y),x) = S(S(x,x),y)"},
      {SuiteId::prop3_5, "Prop3.5", "S,N,T",
       "S=max, T=min, strong N: snt satisfies L-CP(N)"},
  };
  return table;
}

inline std::optional<SuiteId> suite_from_string(std::string_view name) {
  auto eq = [](std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      char x = a[i], y = b[i];
      if (x >= 'A' && x <= 'Z') x = static_cast<char>(x - 'A' + 'a');
      if (y >= 'A' && y <= 'Z') y = static_cast<char>(y - 'A' + 'a');
      if (x != y) return false;
    }
    return true;
  };
  for (const SuiteInfo& info : suite_catalog()) {
    if (eq(name, info.name)) return info.id;
  }
  return std::nullopt;
}

/// Connectives a suite's hypotheses name, in the slots the suite uses.
struct SuiteInputs {
  std::optional<TConorm> s;
  std::optional<TNorm> t;
  std::optional<Negation> n;
};

namespace detail {

inline const TConorm& require_s(const SuiteInputs& in) {
  if (!in.s) throw std::invalid_argument("suite: missing t-conorm input");
  return *in.s;
}
inline const TNorm& require_t(const SuiteInputs& in) {
  if (!in.t) throw std::invalid_argument("suite: missing t-norm input");
  return *in.t;
}
inline const Negation& require_n(const SuiteInputs& in) {
  if (!in.n) throw std::invalid_argument("suite: missing negation input");
  return *in.n;
}

/// Verdict for "hypothesis => conclusion holds".
inline PropertyReport positive_verdict(PropertyId id, bool hyp_ok,
                                       const PropertyReport& conclusion,
                                       const std::string& hyp_desc) {
  PropertyReport v;
  v.id = id;
  v.role = ReportRole::theorem;
  v.samples_checked = conclusion.samples_checked;
  if (!hyp_ok) {
    v.note = "hypothesis not satisfied (" + hyp_desc + "); claim not exercised";
  } else if (!conclusion.falsified()) {
    v.note = "hypothesis holds (" + hyp_desc + "); no counterexample found";
  } else {
    v.verdict = Verdict::falsified;
    v.witness = conclusion.witness;
    v.note = "hypothesis holds (" + hyp_desc + ") but the conclusion is falsified; "
             "replay against " + std::string(to_string(conclusion.id));
  }
  return v;
}

/// Verdict for "hypothesis => conclusion is falsified".
inline PropertyReport negative_verdict(PropertyId id, bool hyp_ok,
                                       const PropertyReport& scan,
                                       const std::string& hyp_desc) {
  PropertyReport v;
  v.id = id;
  v.role = ReportRole::theorem;
  v.samples_checked = scan.samples_checked;
  if (!hyp_ok) {
    v.note = "hypothesis not satisfied (" + hyp_desc + "); claim not exercised";
  } else if (scan.falsified()) {
    v.witness = scan.witness;
    v.note = "predicted falsified under " + hyp_desc +
             "; the scan found a counterexample as predicted";
  } else {
    v.verdict = Verdict::falsified;
    v.note = "predicted falsified under " + hyp_desc +
             " but no counterexample was found on the samples";
  }
  return v;
}

/// Verdict for a biconditional checked on one instance: the hypothesis-side
/// scan and the conclusion-side scan must agree.
inline PropertyReport biconditional_verdict(PropertyId id, bool aux_ok,
                                            const PropertyReport& lhs,
                                            const PropertyReport& rhs,
                                            const std::string& desc) {
  PropertyReport v;
  v.id = id;
  v.role = ReportRole::theorem;
  v.samples_checked = lhs.samples_checked + rhs.samples_checked;
  if (!aux_ok) {
    v.note = "auxiliary hypothesis not satisfied (" + desc + "); claim not exercised";
    return v;
  }
  const bool lhs_holds = !lhs.falsified();
  const bool rhs_holds = !rhs.falsified();
  if (lhs_holds == rhs_holds) {
    v.note = std::string(to_string(lhs.id)) + (lhs_holds ? " holds" : " fails") +
             " and " + to_string(rhs.id) + (rhs_holds ? " holds" : " fails") +
             ": both directions consistent (" + desc + ")";
  } else {
    v.verdict = Verdict::falsified;
    v.witness = lhs.falsified() ? lhs.witness : rhs.witness;
    v.note = "biconditional violated: " + std::string(to_string(lhs.id)) +
             (lhs_holds ? " holds" : " fails") + " but " + to_string(rhs.id) +
             (rhs_holds ? " holds" : " fails") + "; replay against " +
             (lhs.falsified() ? to_string(lhs.id) : to_string(rhs.id));
  }
  return v;
}

inline PropertyReport as_role(PropertyReport r, ReportRole role) {
  r.role = role;
  return r;
}

inline PropertyReport scan_strong(const Negation& n, const SampleSet& samples,
                                  double tol) {
  const SampleSet local = samples.with_extra_critical(n.critical_points());
  return scan_axis(PropertyId::N5, local, tol, ReportRole::hypothesis, [&](double x) {
    const double pt[] = {x};
    return negation_violation_at(PropertyId::N5, n.fn(), pt, tol);
  }, "N strong (involution scan)");
}

inline PropertyReport scan_crisp(const Negation& n, const SampleSet& samples,
                                 double tol) {
  const SampleSet local = samples.with_extra_critical(n.critical_points());
  return scan_axis(PropertyId::N7, local, tol, ReportRole::hypothesis, [&](double x) {
    const double pt[] = {x};
    return negation_violation_at(PropertyId::N7, n.fn(), pt, tol);
  }, "N crisp (two-valued scan)");
}

inline PropertyReport scan_non_filling(const Negation& n, const SampleSet& samples,
                                       double tol) {
  const SampleSet local = samples.with_extra_critical(n.critical_points());
  return scan_axis(PropertyId::N6, local, tol, ReportRole::hypothesis, [&](double x) {
    const double pt[] = {x};
    return negation_violation_at(PropertyId::N6, n.fn(), pt, tol);
  }, "N non-filling (N(x)=1 only at 0)");
}

inline PropertyReport scan_s_eq_max(const TConorm& s, const SampleSet& samples,
                                    double tol) {
  const TConorm m = tconorm_max();
  return check_pointwise_equal(PropertyId::S_EQ_MAX, s.fn(), m.fn(), samples, tol,
                               ReportRole::hypothesis, "S = max (pointwise scan)");
}

inline PropertyReport scan_t_eq_min(const TNorm& t, const SampleSet& samples,
                                    double tol) {
  const TNorm m = tnorm_min();
  return check_pointwise_equal(PropertyId::T_EQ_MIN, t.fn(), m.fn(), samples, tol,
                               ReportRole::hypothesis, "T = min (pointwise scan)");
}

}  // namespace detail

inline std::vector<PropertyReport> run_theorem_suite(SuiteId id, const SuiteInputs& in,
                                                     const SampleSet& samples,
                                                     double tol = kDefaultTolerance) {
  using namespace detail;
  std::vector<PropertyReport> out;

  switch (id) {
    case SuiteId::prop2_2: {
      const TConorm& s = require_s(in);
      const Negation& n = require_n(in);
      const Implication i = build_sn(s, n);
      const SampleSet local = samples.with_extra_critical(n.critical_points());

      const PropertyReport np = check_property(PropertyId::NP, i, samples, tol);
      out.push_back(as_role(np, ReportRole::conclusion));
      out.push_back(positive_verdict(PropertyId::NP, true, np, "unconditional"));

      const PropertyReport ep = check_property(PropertyId::EP, i, samples, tol);
      out.push_back(as_role(ep, ReportRole::conclusion));
      out.push_back(positive_verdict(PropertyId::EP, true, ep, "unconditional"));

      const PropertyReport nat = check_unary_pointwise_equal(
          PropertyId::NATNEG, natural_negation(i), n.fn(), local, tol,
          ReportRole::conclusion, "natural negation of sn(S,N) vs N");
      out.push_back(nat);
      out.push_back(positive_verdict(PropertyId::NATNEG, true, nat, "unconditional"));

      const PropertyReport rcp = check_property(PropertyId::RCP, i, samples, tol, &n);
      out.push_back(as_role(rcp, ReportRole::conclusion));
      out.push_back(positive_verdict(PropertyId::RCP, true, rcp, "unconditional"));

      const PropertyReport strong = scan_strong(n, samples, tol);
      out.push_back(strong);
      const bool is_strong = !strong.falsified();

      PropertyReport lcp = check_property(PropertyId::LCP, i, samples, tol, &n);
      lcp.role = ReportRole::conclusion;
      lcp.note = "checked with N^-1 = N; valid when N is involutive";
      out.push_back(lcp);
      out.push_back(positive_verdict(
          PropertyId::LCP, n.flags().strict && is_strong, lcp,
          "N strict (flag) and involutive, so N^-1 = N"));

      const PropertyReport cp = check_property(PropertyId::CP, i, samples, tol, &n);
      out.push_back(as_role(cp, ReportRole::conclusion));
      out.push_back(positive_verdict(PropertyId::CP, is_strong, cp, "N strong"));
      break;
    }

    case SuiteId::prop2_4: {
      const TNorm& t = require_t(in);
      const Negation& n = require_n(in);
      const PropertyReport strong = scan_strong(n, samples, tol);
      out.push_back(strong);
      const Implication itn = build_tn(t, n);
      BinaryFn recovered = [itn, n](double x, double y) { return n(itn(x, n(y))); };
      const SampleSet local = samples.with_extra_critical(n.critical_points());
      const PropertyReport eq =
          check_pointwise_equal(PropertyId::PROP24, t.fn(), recovered, local, tol,
                                ReportRole::conclusion, "T(x,y) vs N(I(x,N(y)))");
      out.push_back(eq);
      out.push_back(positive_verdict(PropertyId::PROP24, !strong.falsified(), eq,
                                     "N strong"));
      break;
    }

    case SuiteId::prop3_2: {
      const TConorm& s = require_s(in);
      const Negation& n = require_n(in);
      const TNorm& t = require_t(in);
      const Implication i = build_snt(s, n, t);
      const SampleSet local = samples.with_extra_critical(n.critical_points());

      const PropertyReport strong = scan_strong(n, samples, tol);
      const PropertyReport crisp = scan_crisp(n, samples, tol);
      const PropertyReport smax = scan_s_eq_max(s, samples, tol);
      out.push_back(strong);
      out.push_back(crisp);
      out.push_back(smax);
      const bool is_strong = !strong.falsified();
      const bool is_crisp = !crisp.falsified();
      const bool is_smax = !smax.falsified();

      const PropertyReport np = check_property(PropertyId::NP, i, samples, tol);
      out.push_back(as_role(np, ReportRole::conclusion));
      out.push_back(biconditional_verdict(PropertyId::NP, true, strong, np,
                                          "NP iff N strong"));

      const PropertyReport cb = check_property(PropertyId::CB, i, samples, tol);
      out.push_back(as_role(cb, ReportRole::conclusion));
      out.push_back(positive_verdict(PropertyId::CB, is_strong, cb, "N strong"));

      const PropertyReport sib = check_property(PropertyId::SIB, i, samples, tol);
      out.push_back(as_role(sib, ReportRole::conclusion));
      out.push_back(positive_verdict(PropertyId::SIB, is_strong, sib, "N strong"));

      const PropertyReport nat = check_unary_pointwise_equal(
          PropertyId::NATNEG, natural_negation(i), n.fn(), local, tol,
          ReportRole::conclusion, "natural negation of snt(S,N,T) vs N");
      out.push_back(nat);
      out.push_back(positive_verdict(PropertyId::NATNEG, is_smax || is_crisp, nat,
                                     "S = max or N crisp"));

      const PropertyReport ip = check_property(PropertyId::IP, i, samples, tol);
      out.push_back(as_role(ip, ReportRole::conclusion));
      out.push_back(positive_verdict(PropertyId::IP, is_crisp, ip, "N crisp"));

      const PropertyReport lop = check_property(PropertyId::LOP, i, samples, tol);
      out.push_back(as_role(lop, ReportRole::conclusion));
      out.push_back(positive_verdict(PropertyId::LOP, is_crisp, lop, "N crisp"));
      break;
    }

    case SuiteId::crisp_prop: {
      const TConorm& s = require_s(in);
      const Negation& n = require_n(in);
      const TNorm& t = require_t(in);
      const Implication i = build_snt(s, n, t);

      const PropertyReport crisp = scan_crisp(n, samples, tol);
      out.push_back(crisp);
      const bool is_crisp = !crisp.falsified();

      auto positive = [&](PropertyId pid) {
        const PropertyReport scan = check_property(pid, i, samples, tol);
        out.push_back(as_role(scan, ReportRole::conclusion));
        out.push_back(positive_verdict(pid, is_crisp, scan, "N crisp"));
      };
      auto negative = [&](PropertyId pid) {
        const PropertyReport scan = check_property(pid, i, samples, tol);
        out.push_back(as_role(scan, ReportRole::conclusion));
        out.push_back(negative_verdict(pid, is_crisp, scan, "N crisp"));
      };
      positive(PropertyId::EP);
      negative(PropertyId::NP);
      positive(PropertyId::IP);
      positive(PropertyId::LOP);
      negative(PropertyId::ROP);
      negative(PropertyId::OP);
      break;
    }

    case SuiteId::prop3_3: {
      const TConorm& s = require_s(in);
      const Negation& n = require_n(in);
      const TNorm& t = require_t(in);
      const Implication isnt = build_snt(s, n, t);
      const Implication isn = build_sn(s, n);
      const Implication itn = build_tn(t, n);
      const SampleSet local = samples.with_extra_critical(n.critical_points());

      const PropertyReport dom =
          check_pointwise_geq(PropertyId::PROP33i, isnt.fn(), itn.fn(), local, tol,
                              ReportRole::conclusion, "snt(S,N,T) >= tn(T,N)");
      out.push_back(dom);
      out.push_back(positive_verdict(PropertyId::PROP33i, true, dom, "unconditional"));

      const PropertyReport strong = scan_strong(n, samples, tol);
      out.push_back(strong);
      BinaryFn mixed = [isn, itn](double x, double y) { return isn(x, itn(x, y)); };
      const PropertyReport comp = check_pointwise_equal(
          PropertyId::PROP33ii, isnt.fn(), mixed, local, tol, ReportRole::conclusion,
          "snt(x,y) vs sn(x, tn(x,y))");
      out.push_back(comp);
      out.push_back(positive_verdict(PropertyId::PROP33ii, !strong.falsified(), comp,
                                     "N strong"));

      auto duality = check_duality(t, s, n, samples, tol);
      for (auto& r : duality) out.push_back(as_role(r, ReportRole::hypothesis));
      const bool de_morgan = !duality[2].falsified() && n.flags().strict;
      const std::string dm_desc = "(T,S,N) De Morgan triple; strictness from flags";

      BinaryFn twice_sn = [isn](double x, double y) { return isn(x, isn(x, y)); };
      const PropertyReport ca = check_pointwise_equal(
          PropertyId::PROP33iii_a, isnt.fn(), twice_sn, local, tol,
          ReportRole::conclusion, "snt(x,y) vs sn(x, sn(x,y))");
      out.push_back(ca);
      out.push_back(positive_verdict(PropertyId::PROP33iii_a, de_morgan, ca, dm_desc));

      BinaryFn twice_tn = [itn](double x, double y) { return itn(x, itn(x, y)); };
      const PropertyReport cb2 = check_pointwise_equal(
          PropertyId::PROP33iii_b, isnt.fn(), twice_tn, local, tol,
          ReportRole::conclusion, "snt(x,y) vs tn(x, tn(x,y))");
      out.push_back(cb2);
      out.push_back(positive_verdict(PropertyId::PROP33iii_b, de_morgan, cb2, dm_desc));
      break;
    }

    case SuiteId::thm3_1:
    case SuiteId::cor3_1: {
      const TNorm& t = require_t(in);
      const TConorm& s = require_s(in);
      const Negation& n = require_n(in);
      const Implication i = build_snt(s, n, t);

      const bool flag_ok =
          id == SuiteId::thm3_1 ? s.flags().positive : s.flags().strict;
      const std::string flag_desc =
          id == SuiteId::thm3_1 ? "S positive (taken from flags)"
                                : "S strict (taken from flags)";

      const PropertyReport nonfill = scan_non_filling(n, samples, tol);
      out.push_back(nonfill);
      const bool nf_ok = n.flags().non_filling && !nonfill.falsified();

      const PropertyReport lc = as_role(check_lc(t, n, samples, tol),
                                        ReportRole::hypothesis);
      out.push_back(lc);
      const PropertyReport ip = as_role(check_property(PropertyId::IP, i, samples, tol),
                                        ReportRole::conclusion);
      out.push_back(ip);

      out.push_back(biconditional_verdict(
          PropertyId::IP, flag_ok && nf_ok, lc, ip,
          "IP iff LC; " + flag_desc + ", N non-filling"));
      break;
    }

    case SuiteId::prop3_4: {
      const TConorm& s = require_s(in);
      const Negation& n = require_n(in);
      const TNorm& t = require_t(in);
      const Implication i = build_snt(s, n, t);

      const PropertyReport strong = scan_strong(n, samples, tol);
      out.push_back(strong);
      const SampleSet local = samples.with_extra_critical(n.critical_points());
      PropertyReport dual = detail::scan_pairs(
          PropertyId::NDUAL_T_S, local, tol, ReportRole::hypothesis,
          [&](double x, double y) {
            const double pt[] = {x, y};
            return duality_violation_at(PropertyId::NDUAL_T_S, t, s, n, pt);
          },
          "T is N-dual to S: N(T(x,y)) = S(N(x),N(y))");
      out.push_back(dual);

      const PropertyReport ep = as_role(check_property(PropertyId::EP, i, samples, tol),
                                        ReportRole::conclusion);
      out.push_back(ep);
      out.push_back(positive_verdict(PropertyId::EP,
                                     !strong.falsified() && !dual.falsified(), ep,
                                     "N strong and T N-dual to S"));
      break;
    }

    case SuiteId::lemma3_1: {
      const TConorm& s = require_s(in);
      const Negation& n = require_n(in);
      const TNorm& t = require_t(in);
      const Implication i = build_snt(s, n, t);
      const SampleSet local = samples.with_extra_critical(n.critical_points());

      const PropertyReport strong = scan_strong(n, samples, tol);
      out.push_back(strong);
      PropertyReport dual = detail::scan_pairs(
          PropertyId::NDUAL_S_T, local, tol, ReportRole::hypothesis,
          [&](double x, double y) {
            const double pt[] = {x, y};
            return duality_violation_at(PropertyId::NDUAL_S_T, t, s, n, pt);
          },
          "S is N-dual to T: N(S(x,y)) = T(N(x),N(y))");
      out.push_back(dual);
      const bool hyp_ok = !strong.falsified() && !dual.falsified();

      BinaryFn lhs = [i, n](double x, double y) { return i(n(x), y); };
      BinaryFn rhs_a = [s](double x, double y) { return s(s(x, y), x); };
      BinaryFn rhs_b = [s](double x, double y) { return s(s(x, x), y); };
      PropertyReport eq_a =
          check_pointwise_equal(PropertyId::LEMMA31, lhs, rhs_a, local, tol,
                                ReportRole::conclusion, "I(N(x),y) vs S(S(x,y),x)");
      PropertyReport eq_b =
          check_pointwise_equal(PropertyId::LEMMA31, lhs, rhs_b, local, tol,
                                ReportRole::conclusion, "I(N(x),y) vs S(S(x,x),y)");
      out.push_back(eq_a);
      out.push_back(eq_b);

      PropertyReport verdict = positive_verdict(
          PropertyId::LEMMA31, hyp_ok, eq_a.falsified() ? eq_a : eq_b,
          "N strong and S N-dual to T");
      verdict.samples_checked = eq_a.samples_checked + eq_b.samples_checked;
      out.push_back(verdict);
      break;
    }

    case SuiteId::prop3_5: {
      const TConorm& s = require_s(in);
      const Negation& n = require_n(in);
      const TNorm& t = require_t(in);
      const Implication i = build_snt(s, n, t);

      const PropertyReport smax = scan_s_eq_max(s, samples, tol);
      const PropertyReport tmin = scan_t_eq_min(t, samples, tol);
      const PropertyReport strong = scan_strong(n, samples, tol);
      out.push_back(smax);
      out.push_back(tmin);
      out.push_back(strong);
      const bool hyp_ok =
          !smax.falsified() && !tmin.falsified() && !strong.falsified();

      const PropertyReport lcp = as_role(
          check_property(PropertyId::LCP, i, samples, tol, &n), ReportRole::conclusion);
      out.push_back(lcp);
      out.push_back(positive_verdict(PropertyId::LCP, hyp_ok, lcp,
                                     "S = max, T = min, N strong"));
      break;
    }
  }
  return out;
}

}  // namespace snt
