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

#include "snt/connectives.hpp"

namespace snt {

// The registry is fixed at build time; evaluation stays pure and auditable.

inline std::optional<TNorm> lookup_tnorm(std::string_view name) {
  if (name == "min") return tnorm_min();
  if (name == "prod") return tnorm_product();
  if (name == "luk") return tnorm_lukasiewicz();
  if (name == "drastic") return tnorm_drastic();
  return std::nullopt;
}

inline std::optional<TConorm> lookup_tconorm(std::string_view name) {
  if (name == "max") return tconorm_max();
  if (name == "probsum") return tconorm_probsum();
  if (name == "luk") return tconorm_lukasiewicz();
  if (name == "drastic") return tconorm_drastic();
  return std::nullopt;
}

inline bool is_negation_name(std::string_view name) {
  return name == "std" || name == "nalpha" || name == "nupper" || name == "sugeno";
}

/// Builds a registered negation; throws std::invalid_argument for an unknown
/// name, a missing/unexpected parameter, or a parameter out of range.
inline Negation make_negation(std::string_view name, std::optional<double> param) {
  if (name == "std") {
    if (param) throw std::invalid_argument("negation 'std' takes no parameter");
    return negation_standard();
  }
  if (name == "nalpha") {
    if (!param) throw std::invalid_argument("negation 'nalpha' needs ':<alpha>'");
    return negation_alpha_lower(*param);
  }
  if (name == "nupper") {
    if (!param) throw std::invalid_argument("negation 'nupper' needs ':<alpha>'");
    return negation_alpha_upper(*param);
  }
  if (name == "sugeno") {
    if (!param) throw std::invalid_argument("negation 'sugeno' needs ':<lambda>'");
    return negation_sugeno(*param);
  }
  throw std::invalid_argument("unknown negation '" + std::string(name) + "'");
}

struct RegistryEntry {
  std::string syntax;
  std::string kind;
  std::string description;
};

inline std::vector<RegistryEntry> registry_listing() {
  return {
      {"min", "t-norm", "minimum"},
      {"prod", "t-norm", "product x*y"},
      {"luk", "t-norm", "max{x+y-1, 0}"},
      {"drastic", "t-norm", "0 off the boundary lines x=1 / y=1"},
      {"max", "t-conorm", "maximum"},
      {"probsum", "t-conorm", "probabilistic sum x+y-x*y"},
      {"luk", "t-conorm", "min{x+y, 1}"},
      {"drastic", "t-conorm", "1 off the boundary lines x=0 / y=0"},
      {"std", "negation", "1-x (strict, strong, non-filling)"},
      {"nalpha:<a>", "negation", "crisp: 1 if x<=a else 0; a in [0,1)"},
      {"nupper:<a>", "negation", "crisp: 1 if x<a else 0; a in (0,1]"},
      {"sugeno:<l>", "negation", "(1-x)/(1+l*x); l > -1 (strict, strong)"},
      {"sn(<S>,<N>)", "implication", "S(N(x), y)"},
      {"tn(<T>,<N>)", "implication", "N(T(x, N(y)))"},
      {"snt(<S>,<N>,<T>)", "implication", "S(N(T(x, N(y))), N(x))"},
      {"crisplow:<a>", "implication", "1 if x<=a or y>a else 0; a in [0,1)"},
      {"crispup:<a>", "implication", "1 if x<a or y>=a else 0; a in (0,1]"},
      {"deriveS(<snt>,<N'>)", "derived t-conorm", "I(N'(x), y)"},
      {"deriveT(<snt>,<N'>)", "derived t-norm", "N'(I(x, N'(y)))"},
      {"deriveTt(<snt>,<N'>)", "derived t-norm", "1 - I(N'(1-x), 1-y)"},
      {"deriveSt(<snt>,<N'>)", "derived t-conorm", "1 - N'(I(1-x, N'(1-y)))"},
  };
}

}  // namespace snt
