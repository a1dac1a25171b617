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
#include <string_view>
#include <vector>

namespace snt {

/// Identifiers for every axiom, property, and named result the checkers can
/// report on. Serialized names match to_string(PropertyId) one to one.
enum class PropertyId {
  // t-norm axioms and their consequences
  T1, T2, T3, T4, T5, T6, T7, T8,
  // t-conorm axioms and their consequences
  S1, S2, S3, S4, S5, S6, S7, S8,
  // negation axioms and optional classes
  N1, N2, N5, N6, N7,
  // implication axioms and their consequences
  I1, I2, I3, I4, I5, I6, I7, I8, I9,
  // implication properties
  NP, EP, IP, LOP, ROP, OP, CB, SIB, IB, CP, LCP, RCP,
  // pair/triple relations
  LC, NDUAL_T_S, NDUAL_S_T, DEMORGAN,
  // named results
  NATNEG,             ///< natural negation equals the generating N pointwise
  CRISP_CLOSED_FORM,  ///< snt with a crisp negation equals the two-valued closed form
  LEMMA31, PROP33i, PROP33ii, PROP33iii_a, PROP33iii_b, PROP24,
  // hypothesis scans
  S_EQ_MAX, T_EQ_MIN,
};

inline const char* to_string(PropertyId id) {
  switch (id) {
    case PropertyId::T1: return "T1";
    case PropertyId::T2: return "T2";
    case PropertyId::T3: return "T3";
    case PropertyId::T4: return "T4";
    case PropertyId::T5: return "T5";
    case PropertyId::T6: return "T6";
    case PropertyId::T7: return "T7";
    case PropertyId::T8: return "T8";
    case PropertyId::S1: return "S1";
    case PropertyId::S2: return "S2";
    case PropertyId::S3: return "S3";
    case PropertyId::S4: return "S4";
    case PropertyId::S5: return "S5";
    case PropertyId::S6: return "S6";
    case PropertyId::S7: return "S7";
    case PropertyId::S8: return "S8";
    case PropertyId::N1: return "N1";
    case PropertyId::N2: return "N2";
    case PropertyId::N5: return "N5";
    case PropertyId::N6: return "N6";
    case PropertyId::N7: return "N7";
    case PropertyId::I1: return "I1";
    case PropertyId::I2: return "I2";
    case PropertyId::I3: return "I3";
    case PropertyId::I4: return "I4";
    case PropertyId::I5: return "I5";
    case PropertyId::I6: return "I6";
    case PropertyId::I7: return "I7";
    case PropertyId::I8: return "I8";
    case PropertyId::I9: return "I9";
    case PropertyId::NP: return "NP";
    case PropertyId::EP: return "EP";
    case PropertyId::IP: return "IP";
    case PropertyId::LOP: return "LOP";
    case PropertyId::ROP: return "ROP";
    case PropertyId::OP: return "OP";
    case PropertyId::CB: return "CB";
    case PropertyId::SIB: return "SIB";
    case PropertyId::IB: return "IB";
    case PropertyId::CP: return "CP";
    case PropertyId::LCP: return "LCP";
    case PropertyId::RCP: return "RCP";
    case PropertyId::LC: return "LC";
    case PropertyId::NDUAL_T_S: return "NDUAL_T_S";
    case PropertyId::NDUAL_S_T: return "NDUAL_S_T";
    case PropertyId::DEMORGAN: return "DEMORGAN";
    case PropertyId::NATNEG: return "NATNEG";
    case PropertyId::CRISP_CLOSED_FORM: return "CRISP_CLOSED_FORM";
    case PropertyId::LEMMA31: return "LEMMA31";
    case PropertyId::PROP33i: return "PROP33i";
    case PropertyId::PROP33ii: return "PROP33ii";
    case PropertyId::PROP33iii_a: return "PROP33iii_a";
    case PropertyId::PROP33iii_b: return "PROP33iii_b";
    case PropertyId::PROP24: return "PROP24";
    case PropertyId::S_EQ_MAX: return "S_EQ_MAX";
    case PropertyId::T_EQ_MIN: return "T_EQ_MIN";
  }
  return "?";
}

/// A finite scan can only refute; "pass" is the absence of a counterexample
/// on the declared samples, never a proof.
enum class Verdict { no_counterexample, falsified };

inline const char* to_string(Verdict v) {
  return v == Verdict::no_counterexample ? "no_counterexample" : "falsified";
}

/// What a report is about within a run: a plain axiom/property scan, a
/// theorem suite's hypothesis or conclusion scan, or the suite's verdict that
/// the theorem's prediction matched the scans.
enum class ReportRole { axiom, property, hypothesis, conclusion, theorem };

inline const char* to_string(ReportRole r) {
  switch (r) {
    case ReportRole::axiom: return "axiom";
    case ReportRole::property: return "property";
    case ReportRole::hypothesis: return "hypothesis";
    case ReportRole::conclusion: return "conclusion";
    case ReportRole::theorem: return "theorem";
  }
  return "?";
}

/// The lexicographically smallest violating sample tuple and the violation
/// magnitude there. Monotonicity witnesses carry the adjacent pair plus the
/// line coordinate.
struct Witness {
  std::vector<double> point;
  double residual = 0.0;

  bool operator==(const Witness&) const = default;
};

struct PropertyReport {
  PropertyId id;
  Verdict verdict = Verdict::no_counterexample;
  std::optional<Witness> witness;
  long long samples_checked = 0;
  ReportRole role = ReportRole::property;
  std::string note;

  bool falsified() const { return verdict == Verdict::falsified; }
  bool operator==(const PropertyReport&) const = default;
};

/// Case-insensitive lookup, used by the CLI --props filter.
inline std::optional<PropertyId> property_id_from_string(std::string_view s) {
  auto eq = [](std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      char x = a[i], y = b[i];
      if (x >= 'a' && x <= 'z') x = static_cast<char>(x - 'a' + 'A');
      if (y >= 'a' && y <= 'z') y = static_cast<char>(y - 'a' + 'A');
      if (x != y) return false;
    }
    return true;
  };
  for (int k = 0; k <= static_cast<int>(PropertyId::T_EQ_MIN); ++k) {
    const auto id = static_cast<PropertyId>(k);
    if (eq(s, to_string(id))) return id;
  }
  return std::nullopt;
}

}  // namespace snt
