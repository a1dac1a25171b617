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

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <random>

#include "snt/connectives.hpp"
#include "snt/properties.hpp"

using namespace snt;

namespace {

bool near(double a, double b, double tol = 1e-9) { return std::fabs(a - b) <= tol; }

SampleSet coarse() {
  SampleSet::Params p;
  p.grid_step = 0.05;
  p.triple_grid_step = 0.1;
  p.random_count = 64;
  return SampleSet(p);
}

bool all_pass(const std::vector<PropertyReport>& reports) {
  for (const auto& r : reports) {
    if (r.falsified()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("basic t-norm values") {
  const TNorm tl = tnorm_lukasiewicz();
  const TNorm td = tnorm_drastic();
  const TNorm tm = tnorm_min();
  const TNorm tp = tnorm_product();

  REQUIRE(near(tl(0.7, 0.5), 0.2));
  REQUIRE(tl(0.2, 0.3) == 0.0);
  REQUIRE(td(0.9, 0.9) == 0.0);
  REQUIRE(td(1.0, 0.3) == 0.3);
  REQUIRE(td(0.3, 1.0) == 0.3);
  REQUIRE(tp(0.5, 0.5) == 0.25);

  // boundary condition T(x,1) = x, exact for min
  const SampleSet s = coarse();
  for (double x : s.axis()) {
    REQUIRE(tm(x, 1.0) == x);
    REQUIRE(tp(x, 1.0) == x);
    REQUIRE(td(x, 1.0) == x);
    REQUIRE(near(tl(x, 1.0), x, 1e-15));
  }
}

TEST_CASE("basic t-conorm values") {
  const TConorm sl = tconorm_lukasiewicz();
  const TConorm sd = tconorm_drastic();
  const TConorm sp = tconorm_probsum();
  const TConorm sm = tconorm_max();

  REQUIRE(sl(0.7, 0.5) == 1.0);
  REQUIRE(sd(0.1, 0.2) == 1.0);
  REQUIRE(sd(0.0, 0.2) == 0.2);
  REQUIRE(near(sp(0.5, 0.5), 0.75));

  // boundary condition S(x,0) = x, exact for all four
  const SampleSet s = coarse();
  for (double x : s.axis()) {
    REQUIRE(sm(x, 0.0) == x);
    REQUIRE(sp(x, 0.0) == x);
    REQUIRE(sl(x, 0.0) == x);
    REQUIRE(sd(x, 0.0) == x);
  }
}

TEST_CASE("declared flags") {
  REQUIRE(tnorm_min().flags().idempotent);
  REQUIRE(tnorm_min().flags().positive);
  REQUIRE(tnorm_min().flags().continuous);
  REQUIRE_FALSE(tnorm_min().flags().strict);

  REQUIRE(tnorm_product().flags().strict);
  REQUIRE(tnorm_product().flags().positive);
  REQUIRE(tnorm_lukasiewicz().flags().continuous);
  REQUIRE_FALSE(tnorm_lukasiewicz().flags().positive);
  REQUIRE_FALSE(tnorm_drastic().flags().continuous);
  REQUIRE_FALSE(tnorm_drastic().flags().positive);

  REQUIRE(tconorm_max().flags().idempotent);
  REQUIRE(tconorm_max().flags().positive);
  REQUIRE(tconorm_probsum().flags().strict);
  REQUIRE(tconorm_probsum().flags().positive);
  REQUIRE_FALSE(tconorm_lukasiewicz().flags().positive);
  // S_D(0.1,0.2)=1 with both arguments interior, so it cannot be positive.
  REQUIRE_FALSE(tconorm_drastic().flags().positive);

  REQUIRE(negation_standard().flags().strong);
  REQUIRE(negation_standard().flags().strict);
  REQUIRE(negation_standard().flags().non_filling);
  REQUIRE(negation_alpha_lower(0.3).flags().crisp);
  REQUIRE_FALSE(negation_alpha_lower(0.3).flags().non_filling);
  REQUIRE(negation_alpha_lower(0.0).flags().non_filling);
  REQUIRE(negation_alpha_upper(0.3).flags().crisp);
  // N^a(x)=1 on (0,a), so the family is filling for every a.
  REQUIRE_FALSE(negation_alpha_upper(0.3).flags().non_filling);
  REQUIRE(negation_sugeno(1.5).flags().strong);
}

TEST_CASE("flag honesty on samples") {
  const SampleSet s = coarse();
  for (const TNorm& t : basic_tnorms()) {
    if (!t.flags().positive) continue;
    for (double x : s.axis()) {
      for (double y : s.axis()) {
        if (x > 0.0 && y > 0.0) REQUIRE(t(x, y) > 0.0);
      }
    }
  }
  for (const TConorm& c : basic_tconorms()) {
    if (!c.flags().positive) continue;
    for (double x : s.axis()) {
      for (double y : s.axis()) {
        if (x < 1.0 && y < 1.0) REQUIRE(c(x, y) < 1.0);
      }
    }
  }
  for (const TNorm& t : basic_tnorms()) {
    if (!t.flags().idempotent) continue;
    for (double x : s.axis()) REQUIRE(t(x, x) == x);
  }
}

TEST_CASE("axiom suites pass for the basic families") {
  const SampleSet s = coarse();
  for (const TNorm& t : basic_tnorms()) {
    INFO(t.name());
    REQUIRE(all_pass(check_axioms(t, s)));
  }
  for (const TConorm& c : basic_tconorms()) {
    INFO(c.name());
    REQUIRE(all_pass(check_axioms(c, s)));
  }
  for (const Negation& n :
       {negation_standard(), negation_alpha_lower(0.3), negation_alpha_lower(0.0),
        negation_alpha_upper(0.7), negation_alpha_upper(1.0), negation_sugeno(2.0),
        negation_sugeno(-0.5)}) {
    INFO(n.name());
    REQUIRE(all_pass(check_axioms(n, s)));
  }
}

TEST_CASE("negation families") {
  REQUIRE(negation_alpha_lower(0.3)(0.3) == 1.0);
  REQUIRE(negation_alpha_lower(0.3)(0.30000001) == 0.0);
  REQUIRE(negation_alpha_upper(0.3)(0.3) == 0.0);
  REQUIRE(negation_alpha_upper(0.3)(0.29999999) == 1.0);
  REQUIRE(negation_sugeno(0.0)(0.25) == 0.75);
  REQUIRE(near(negation_sugeno(1.0)(0.5), 1.0 / 3.0));

  // N_0 is the bottom negation, N^1 the top one
  REQUIRE(negation_alpha_lower(0.0)(0.0) == 1.0);
  REQUIRE(negation_alpha_lower(0.0)(1e-12) == 0.0);
  REQUIRE(negation_alpha_upper(1.0)(1.0) == 0.0);
  REQUIRE(negation_alpha_upper(1.0)(0.9999999) == 1.0);

  // crisp outputs are exactly two-valued and match the stored threshold form
  const SampleSet s = coarse();
  const Negation na = negation_alpha_lower(0.3);
  const Negation nu = negation_alpha_upper(0.3);
  for (double x : s.axis()) {
    REQUIRE(na(x) == (x <= 0.3 ? 1.0 : 0.0));
    REQUIRE(nu(x) == (x < 0.3 ? 1.0 : 0.0));
  }
  for (double x : s.random_points()) {
    REQUIRE((na(x) == 0.0 || na(x) == 1.0));
  }
}

TEST_CASE("parameter ranges are rejected") {
  REQUIRE_THROWS_AS(negation_alpha_lower(1.0), std::invalid_argument);
  REQUIRE_THROWS_AS(negation_alpha_lower(-0.1), std::invalid_argument);
  REQUIRE_THROWS_AS(negation_alpha_upper(0.0), std::invalid_argument);
  REQUIRE_THROWS_AS(negation_alpha_upper(1.1), std::invalid_argument);
  REQUIRE_THROWS_AS(negation_sugeno(-1.0), std::invalid_argument);
  REQUIRE_THROWS_AS(negation_sugeno(-2.0), std::invalid_argument);
}

TEST_CASE("duality constructors") {
  const SampleSet s = coarse();

  SECTION("dual of min is max, exactly on the axis") {
    const TConorm d = dual_tconorm_of(tnorm_min());
    for (double x : s.axis()) {
      for (double y : s.axis()) {
        REQUIRE(d(x, y) == std::max(x, y));
      }
    }
    REQUIRE(d.flags().idempotent);
  }

  SECTION("dual of product is the probabilistic sum") {
    const TConorm d = dual_tconorm_of(tnorm_product());
    const TConorm sp = tconorm_probsum();
    for (double x : s.axis()) {
      for (double y : s.axis()) {
        REQUIRE(near(d(x, y), sp(x, y)));
      }
    }
  }

  SECTION("dual of the Lukasiewicz t-conorm: brute-force grid comparison") {
    const TNorm d = dual_tnorm_of(tconorm_lukasiewicz());
    const TNorm tl = tnorm_lukasiewicz();
    for (int i = 0; i <= 100; ++i) {
      for (int j = 0; j <= 100; ++j) {
        const double x = i / 100.0, y = j / 100.0;
        REQUIRE(near(d(x, y), tl(x, y)));
      }
    }
  }

  SECTION("double duality returns the original within tolerance") {
    for (const TNorm& t : basic_tnorms()) {
      for (const Negation& n : {negation_standard(), negation_sugeno(0.7)}) {
        const TNorm back = dual_tnorm_of(dual_tconorm_of(t, n), n);
        for (const auto& p : s.random_pairs()) {
          REQUIRE(near(back(p[0], p[1]), t(p[0], p[1])));
        }
      }
    }
  }

  SECTION("non-strong negations are rejected") {
    REQUIRE_THROWS_AS(dual_tconorm_of(tnorm_min(), negation_alpha_lower(0.3)),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(dual_tnorm_of(tconorm_max(), negation_alpha_upper(0.5)),
                      std::invalid_argument);
  }
}

TEST_CASE("basic_tnorms and basic_tconorms return the four families in order") {
  const auto ts = basic_tnorms();
  REQUIRE(ts.size() == 4);
  REQUIRE(ts[0].name() == "min");
  REQUIRE(ts[1].name() == "prod");
  REQUIRE(ts[2].name() == "luk");
  REQUIRE(ts[3].name() == "drastic");
  const auto ss = basic_tconorms();
  REQUIRE(ss.size() == 4);
  REQUIRE(ss[0].name() == "max");
  REQUIRE(ss[1].name() == "probsum");
  REQUIRE(ss[2].name() == "luk");
  REQUIRE(ss[3].name() == "drastic");
}
