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
#include <thread>

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

/// Re-evaluates a falsified report at its witness; the violation must
/// reproduce beyond the tolerance (reports are replayable).
void require_replayable(const PropertyReport& r, const Implication& i,
                        double tol = kDefaultTolerance, const Negation* n = nullptr) {
  REQUIRE(r.falsified());
  REQUIRE(r.witness.has_value());
  const double again = property_violation_at(r.id, i, r.witness->point, tol, n);
  REQUIRE(again > tol);
  REQUIRE(again == r.witness->residual);
}

}  // namespace

TEST_CASE("check_axioms accepts the Lukasiewicz t-norm on the default samples") {
  const SampleSet s;
  for (const auto& r : check_axioms(tnorm_lukasiewicz(), s)) {
    INFO(to_string(r.id));
    REQUIRE_FALSE(r.falsified());
    REQUIRE(r.samples_checked > 0);
  }
}

TEST_CASE("a plain product presented as an implication fails I3") {
  const Implication fake =
      implication_from_function("product", [](double x, double y) { return x * y; });
  const auto reports = check_axioms(fake, coarse());
  const PropertyReport& i3 = reports[2];
  REQUIRE(i3.id == PropertyId::I3);
  REQUIRE(i3.falsified());
  REQUIRE(i3.witness->point == std::vector<double>{0.0, 0.0});
  REQUIRE(i3.witness->residual == 1.0);
  // I1 fails as well: x*y increases in x
  REQUIRE(reports[0].id == PropertyId::I1);
  REQUIRE(reports[0].falsified());
  require_replayable(reports[0], fake);
}

TEST_CASE("snt implications pass I1-I9 for drastic crisp triples") {
  // S_D, N_0.3, T_D is as non-continuous as the catalog gets
  const Implication i =
      build_snt(tconorm_drastic(), negation_alpha_lower(0.3), tnorm_drastic());
  for (const auto& r : check_axioms(i, coarse(), 0.0)) {
    INFO(to_string(r.id));
    REQUIRE_FALSE(r.falsified());
  }
}

TEST_CASE("law of contradiction") {
  const SampleSet s;

  SECTION("Lukasiewicz with standard negation satisfies LC identically") {
    REQUIRE_FALSE(check_lc(tnorm_lukasiewicz(), negation_standard(), s).falsified());
  }

  SECTION("min with standard negation is falsified; residual 0.5 at x=0.5") {
    const PropertyReport r = check_lc(tnorm_min(), negation_standard(), s);
    REQUIRE(r.falsified());
    REQUIRE(r.witness.has_value());
    // the scan returns the lexicographically smallest violating sample;
    // the midpoint violation is confirmed by direct evaluation
    REQUIRE(lc_violation_at(tnorm_min(), negation_standard(), 0.5) == 0.5);
    const double replay =
        lc_violation_at(tnorm_min(), negation_standard(), r.witness->point[0]);
    REQUIRE(replay == r.witness->residual);
    REQUIRE(replay > kDefaultTolerance);
  }

  SECTION("product with the bottom negation satisfies LC on the 1-D scan") {
    REQUIRE_FALSE(check_lc(tnorm_product(), negation_alpha_lower(0.0), s).falsified());
    // independent 1-D oracle
    const Negation n0 = negation_alpha_lower(0.0);
    for (int k = 0; k <= 1000; ++k) {
      const double x = k / 1000.0;
      REQUIRE(tnorm_product()(n0(x), x) == 0.0);
    }
  }
}

TEST_CASE("duality checks") {
  const SampleSet s;

  SECTION("product pair is self-dual under the standard negation") {
    const auto reports =
        check_duality(tnorm_product(), tconorm_probsum(), negation_standard(), s);
    for (const auto& r : reports) REQUIRE_FALSE(r.falsified());
    REQUIRE(reports[2].id == PropertyId::DEMORGAN);
    REQUIRE(reports[2].note.find("De Morgan") != std::string::npos);
  }

  SECTION("min/max forms a De Morgan triple") {
    const auto reports = check_duality(tnorm_min(), tconorm_max(), negation_standard(), s);
    for (const auto& r : reports) REQUIRE_FALSE(r.falsified());
  }

  SECTION("min against probsum is not dual") {
    const auto reports =
        check_duality(tnorm_min(), tconorm_probsum(), negation_standard(), s);
    REQUIRE(reports[1].id == PropertyId::NDUAL_S_T);
    REQUIRE(reports[1].falsified());
    const double pt[] = {0.5, 0.5};
    REQUIRE(near(duality_violation_at(PropertyId::NDUAL_S_T, tnorm_min(),
                                      tconorm_probsum(), negation_standard(), pt),
                 0.25));
    REQUIRE(reports[2].falsified());  // conjunction fails with the same witness
    const double again = duality_violation_at(
        PropertyId::NDUAL_S_T, tnorm_min(), tconorm_probsum(), negation_standard(),
        reports[1].witness->point);
    REQUIRE(again == reports[1].witness->residual);
  }
}

TEST_CASE("check_property on crisp snt triples") {
  const SampleSet s;
  const Implication collapse = build_snt(tconorm_max(), negation_standard(), tnorm_min());
  const Implication crisp = build_snt(tconorm_max(), negation_alpha_lower(0.3), tnorm_min());

  SECTION("NP holds for the strong negation and fails for the crisp one") {
    REQUIRE_FALSE(check_property(PropertyId::NP, collapse, s).falsified());
    const PropertyReport r = check_property(PropertyId::NP, crisp, s);
    require_replayable(r, crisp);
    // e.g. I(1, 0.5) = 1 rather than 0.5
    REQUIRE(crisp(1.0, 0.5) == 1.0);
  }

  SECTION("ROP is falsified for the crisp triple") {
    const PropertyReport r = check_property(PropertyId::ROP, crisp, s);
    require_replayable(r, crisp);
    // e.g. I(0.9, 0.5) = 1 although 0.9 > 0.5
    REQUIRE(crisp(0.9, 0.5) == 1.0);
  }

  SECTION("LOP holds for a crisp product triple") {
    const Implication i =
        build_snt(tconorm_probsum(), negation_alpha_lower(0.3), tnorm_product());
    REQUIRE_FALSE(check_property(PropertyId::LOP, i, s).falsified());
  }

  SECTION("OP is the conjunction of LOP and ROP") {
    REQUIRE_FALSE(check_property(PropertyId::LOP, crisp, s).falsified());
    const PropertyReport op = check_property(PropertyId::OP, crisp, s);
    require_replayable(op, crisp);
  }

  SECTION("EP holds for crisp triples on the triple grid") {
    REQUIRE_FALSE(check_property(PropertyId::EP, crisp, s, 0.0).falsified());
  }

  SECTION("IB holds for the collapsed and the crisp triple") {
    REQUIRE_FALSE(check_property(PropertyId::IB, collapse, s, 0.0).falsified());
    REQUIRE_FALSE(check_property(PropertyId::IB, crisp, s, 0.0).falsified());
  }
}

TEST_CASE("EP holds for upper crisp negations across every basic pair") {
  const SampleSet s = coarse();
  const Negation n = negation_alpha_upper(0.7);
  for (const TConorm& sc : basic_tconorms()) {
    for (const TNorm& t : basic_tnorms()) {
      const Implication i = build_snt(sc, n, t);
      INFO(i.name());
      REQUIRE_FALSE(check_property(PropertyId::EP, i, s, 0.0).falsified());
      REQUIRE_FALSE(check_property(PropertyId::IP, i, s, 0.0).falsified());
      REQUIRE_FALSE(check_property(PropertyId::LOP, i, s, 0.0).falsified());
    }
  }
}

TEST_CASE("EP negative control: a non-dual triple is falsified") {
  // probsum/min and luk/min with the standard negation break the exchange
  // principle; luk/prod does not (its clamped form is symmetric in x and y).
  const SampleSet s;
  const Implication i =
      build_snt(tconorm_lukasiewicz(), negation_standard(), tnorm_min());
  const PropertyReport r = check_property(PropertyId::EP, i, s);
  require_replayable(r, i);

  // brute-force oracle: search the coarse lattice directly
  bool found = false;
  for (int a = 0; a <= 20 && !found; ++a) {
    for (int b = 0; b <= 20 && !found; ++b) {
      for (int c = 0; c <= 20 && !found; ++c) {
        const double x = a / 20.0, y = b / 20.0, z = c / 20.0;
        if (std::fabs(i(x, i(y, z)) - i(y, i(x, z))) > 1e-9) found = true;
      }
    }
  }
  REQUIRE(found);
}

TEST_CASE("contrapositive properties need a negation") {
  const Implication cf = closed_crisp_lower(0.3);
  const SampleSet s = coarse();
  REQUIRE_THROWS_AS(check_property(PropertyId::CP, cf, s), std::invalid_argument);
  REQUIRE_THROWS_AS(check_property(PropertyId::LCP, cf, s), std::invalid_argument);
  REQUIRE_THROWS_AS(check_property(PropertyId::RCP, cf, s), std::invalid_argument);

  // sn-implications satisfy R-CP(N) for any N and CP(N) for strong N
  const Negation n = negation_standard();
  const Implication i = build_sn(tconorm_probsum(), n);
  REQUIRE_FALSE(check_property(PropertyId::RCP, i, s, kDefaultTolerance, &n).falsified());
  REQUIRE_FALSE(check_property(PropertyId::CP, i, s, kDefaultTolerance, &n).falsified());
}

TEST_CASE("dominance: snt is at least tn for every basic triple") {
  const SampleSet s = coarse();
  const Negation n = negation_standard();
  for (const TConorm& sc : basic_tconorms()) {
    for (const TNorm& t : basic_tnorms()) {
      const Implication isnt = build_snt(sc, n, t);
      const Implication itn = build_tn(t, n);
      const PropertyReport r =
          check_pointwise_geq(PropertyId::PROP33i, isnt.fn(), itn.fn(), s);
      INFO(isnt.name());
      REQUIRE_FALSE(r.falsified());
    }
  }
}

TEST_CASE("composition identities") {
  const SampleSet s = coarse();
  const Negation n = negation_standard();

  SECTION("snt(x,y) = sn(x, tn(x,y)) for strong N") {
    for (const TConorm& sc : basic_tconorms()) {
      for (const TNorm& t : basic_tnorms()) {
        const Implication isnt = build_snt(sc, n, t);
        const Implication isn = build_sn(sc, n);
        const Implication itn = build_tn(t, n);
        BinaryFn mixed = [&](double x, double y) { return isn(x, itn(x, y)); };
        REQUIRE_FALSE(
            check_pointwise_equal(PropertyId::PROP33ii, isnt.fn(), mixed, s).falsified());
      }
    }
  }

  SECTION("De Morgan triples collapse to iterated sn / iterated tn") {
    struct Pair { TNorm t; TConorm s; };
    const Pair pairs[] = {{tnorm_min(), tconorm_max()},
                          {tnorm_product(), tconorm_probsum()}};
    for (const auto& p : pairs) {
      const Implication isnt = build_snt(p.s, n, p.t);
      const Implication isn = build_sn(p.s, n);
      const Implication itn = build_tn(p.t, n);
      BinaryFn twice_sn = [&](double x, double y) { return isn(x, isn(x, y)); };
      BinaryFn twice_tn = [&](double x, double y) { return itn(x, itn(x, y)); };
      REQUIRE_FALSE(check_pointwise_equal(PropertyId::PROP33iii_a, isnt.fn(), twice_sn, s)
                        .falsified());
      REQUIRE_FALSE(check_pointwise_equal(PropertyId::PROP33iii_b, isnt.fn(), twice_tn, s)
                        .falsified());
    }
  }
}

TEST_CASE("strong negations recover the t-norm from the tn-implication") {
  const SampleSet s = coarse();
  for (const TNorm& t : basic_tnorms()) {
    for (const Negation& n : {negation_standard(), negation_sugeno(1.0)}) {
      const Implication itn = build_tn(t, n);
      BinaryFn recovered = [&](double x, double y) { return n(itn(x, n(y))); };
      REQUIRE_FALSE(
          check_pointwise_equal(PropertyId::PROP24, t.fn(), recovered, s).falsified());
    }
  }
}

TEST_CASE("reports are deterministic") {
  const SampleSet s;
  const Implication crisp =
      build_snt(tconorm_lukasiewicz(), negation_alpha_lower(0.3), tnorm_product());
  const PropertyReport a = check_property(PropertyId::ROP, crisp, s);
  const PropertyReport b = check_property(PropertyId::ROP, crisp, s);
  REQUIRE(a == b);
  const auto ax1 = check_axioms(tnorm_drastic(), s);
  const auto ax2 = check_axioms(tnorm_drastic(), s);
  REQUIRE(ax1 == ax2);
}

TEST_CASE("connective values are shareable across threads") {
  const Implication i =
      build_snt(tconorm_probsum(), negation_sugeno(0.5), tnorm_lukasiewicz());
  const SampleSet s = coarse();
  std::vector<double> expected;
  for (double x : s.axis()) expected.push_back(i(x, 1.0 - x));

  std::vector<std::vector<double>> got(4);
  std::vector<std::thread> workers;
  for (auto& slot : got) {
    workers.emplace_back([&i, &s, &slot] {
      for (double x : s.axis()) slot.push_back(i(x, 1.0 - x));
    });
  }
  for (auto& w : workers) w.join();
  for (const auto& slot : got) REQUIRE(slot == expected);
}

TEST_CASE("witnesses are the lexicographically smallest violating samples") {
  const SampleSet s = coarse();
  const Implication crisp =
      build_snt(tconorm_max(), negation_alpha_lower(0.3), tnorm_min());
  const PropertyReport r = check_property(PropertyId::ROP, crisp, s);
  REQUIRE(r.falsified());
  // every sample tuple strictly smaller than the witness satisfies the property
  const SampleSet local = s.with_extra_critical(crisp.critical_points());
  const auto& w = r.witness->point;
  for (double x : local.axis()) {
    for (double y : local.axis()) {
      if (std::vector<double>{x, y} < w) {
        REQUIRE(property_violation_at(PropertyId::ROP, crisp, std::array{x, y}) <=
                kDefaultTolerance);
      }
    }
  }
}
