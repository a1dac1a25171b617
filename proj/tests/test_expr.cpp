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
#include <random>

#include "snt/expr.hpp"

using namespace snt;

TEST_CASE("parsing combinators") {
  const Expr e = parse_expr("snt(max,std,min)");
  REQUIRE(e.kind == Expr::Kind::snt);
  REQUIRE(e.args.size() == 3);
  REQUIRE(e.args[0].atom == "max");
  REQUIRE(e.args[1].atom == "std");
  REQUIRE(e.args[2].atom == "min");

  const Expr p = parse_expr("snt(max,nalpha:0.3,luk)");
  REQUIRE(p.args[1].kind == Expr::Kind::negation_atom);
  REQUIRE(p.args[1].param == 0.3);
  REQUIRE(p.args[2].kind == Expr::Kind::tnorm_atom);
  REQUIRE(p.args[2].atom == "luk");

  const Expr d = parse_expr("deriveS(snt(probsum,sugeno:1.5,prod),std)");
  REQUIRE(d.kind == Expr::Kind::derive_s);
  REQUIRE(d.args[0].kind == Expr::Kind::snt);
  REQUIRE(d.args[1].atom == "std");

  REQUIRE(parse_expr("crisplow:0.3").kind == Expr::Kind::crisp_lower);
  REQUIRE(parse_expr("crispup:1").param == 1.0);
  REQUIRE(parse_expr(" sn( max , std ) ").kind == Expr::Kind::sn);
}

TEST_CASE("slot kinds are enforced with positioned diagnostics") {
  try {
    parse_expr("snt(min,std,max)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    REQUIRE(std::string(e.what()).find("not a registered t-conorm") != std::string::npos);
    REQUIRE(e.token() == "min");
    REQUIRE(e.position() == 4);
  }

  REQUIRE_THROWS_AS(parse_expr("sn(max)"), ParseError);            // wrong arity
  REQUIRE_THROWS_AS(parse_expr("sn(max,std,min)"), ParseError);    // wrong arity
  REQUIRE_THROWS_AS(parse_expr("tn(max,std)"), ParseError);        // wrong slot kind
  REQUIRE_THROWS_AS(parse_expr("snt(max,prod,min)"), ParseError);  // negation slot
  REQUIRE_THROWS_AS(parse_expr("frob(max,std)"), ParseError);      // unknown identifier
  REQUIRE_THROWS_AS(parse_expr("snt(max,std,min) junk"), ParseError);
  REQUIRE_THROWS_AS(parse_expr(""), ParseError);
  REQUIRE_THROWS_AS(parse_expr("deriveS(sn(max,std),std)"), ParseError);
}

TEST_CASE("parameters are range-checked at parse time") {
  REQUIRE_THROWS_AS(parse_expr("nalpha:1.5"), ParseError);
  REQUIRE_THROWS_AS(parse_expr("nalpha:1"), ParseError);
  REQUIRE_THROWS_AS(parse_expr("nupper:0"), ParseError);
  REQUIRE_THROWS_AS(parse_expr("sugeno:-1"), ParseError);
  REQUIRE_THROWS_AS(parse_expr("crisplow:1"), ParseError);
  REQUIRE_THROWS_AS(parse_expr("crispup:0"), ParseError);
  REQUIRE_THROWS_AS(parse_expr("nalpha:"), ParseError);
  REQUIRE_THROWS_AS(parse_expr("std:0.5"), ParseError);
  REQUIRE_NOTHROW(parse_expr("sugeno:-0.99"));
  REQUIRE_NOTHROW(parse_expr("nalpha:0"));
  REQUIRE_NOTHROW(parse_expr("nupper:1"));
}

TEST_CASE("bare atoms resolve t-norm first") {
  REQUIRE(parse_expr("luk").kind == Expr::Kind::tnorm_atom);
  REQUIRE(parse_expr("drastic").kind == Expr::Kind::tnorm_atom);
  REQUIRE(parse_expr("max").kind == Expr::Kind::tconorm_atom);
  REQUIRE(parse_expr("std").kind == Expr::Kind::negation_atom);
  REQUIRE(parse_expr("sugeno:2").kind == Expr::Kind::negation_atom);
}

namespace {

Expr random_expr(std::mt19937_64& rng) {
  auto pick = [&rng](int n) { return static_cast<int>(rng() % n); };
  auto tnorm = [&] {
    static const char* names[] = {"min", "prod", "luk", "drastic"};
    return Expr{Expr::Kind::tnorm_atom, names[pick(4)], std::nullopt, {}};
  };
  auto tconorm = [&] {
    static const char* names[] = {"max", "probsum", "luk", "drastic"};
    return Expr{Expr::Kind::tconorm_atom, names[pick(4)], std::nullopt, {}};
  };
  auto param01 = [&](bool include0, bool include1) {
    while (true) {
      const double v = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (v == 0.0 && !include0) continue;
      if (v == 1.0 && !include1) continue;
      return v;
    }
  };
  auto negation = [&] {
    switch (pick(4)) {
      case 0: return Expr{Expr::Kind::negation_atom, "std", std::nullopt, {}};
      case 1: return Expr{Expr::Kind::negation_atom, "nalpha", param01(true, false), {}};
      case 2: return Expr{Expr::Kind::negation_atom, "nupper", param01(false, true), {}};
      default: return Expr{Expr::Kind::negation_atom, "sugeno", -0.5 + (rng() % 1000) / 100.0, {}};
    }
  };
  auto snt_expr = [&] {
    return Expr{Expr::Kind::snt, "", std::nullopt, {tconorm(), negation(), tnorm()}};
  };
  switch (pick(9)) {
    case 0: return tnorm();
    case 1: return tconorm();
    case 2: return negation();
    case 3: return Expr{Expr::Kind::sn, "", std::nullopt, {tconorm(), negation()}};
    case 4: return Expr{Expr::Kind::tn, "", std::nullopt, {tnorm(), negation()}};
    case 5: return snt_expr();
    case 6: return Expr{Expr::Kind::crisp_lower, "", param01(true, false), {}};
    case 7: return Expr{Expr::Kind::crisp_upper, "", param01(false, true), {}};
    default: {
      static const Expr::Kind kinds[] = {Expr::Kind::derive_s, Expr::Kind::derive_t,
                                         Expr::Kind::derive_t_tilde,
                                         Expr::Kind::derive_s_tilde};
      return Expr{kinds[pick(4)], "", std::nullopt, {snt_expr(), negation()}};
    }
  }
}

}  // namespace

TEST_CASE("print/parse round trip is structurally stable") {
  // parse -> print -> parse is the identity on parsed expressions; a bare
  // top-level 'luk'/'drastic' re-resolves the same way every time.
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 500; ++k) {
    const Expr parsed = parse_expr(to_string(random_expr(rng)));
    const std::string text = to_string(parsed);
    INFO(text);
    const Expr back = parse_expr(text);
    REQUIRE(back == parsed);
    REQUIRE(to_string(back) == text);
  }
}

TEST_CASE("compile realizes the right value kinds") {
  REQUIRE(std::holds_alternative<TNorm>(compile(parse_expr("luk")).value()));
  REQUIRE(std::holds_alternative<Negation>(compile(parse_expr("nalpha:0.3")).value()));
  REQUIRE(std::holds_alternative<Implication>(compile(parse_expr("sn(max,std)")).value()));
  REQUIRE(std::holds_alternative<DerivedConnective>(
      compile(parse_expr("deriveTt(snt(max,std,min),std)")).value()));

  const CompiledExpr ce = compile(parse_expr("snt(max,std,min)"));
  REQUIRE(ce.is_binary());
  REQUIRE(ce.eval(0.3, 0.8) == 0.8);
  REQUIRE(ce.name() == "snt(max,std,min)");
  REQUIRE_THROWS_AS(ce.eval(0.3), std::invalid_argument);

  const CompiledExpr neg = compile(parse_expr("std"));
  REQUIRE_FALSE(neg.is_binary());
  REQUIRE(neg.eval(0.25) == 0.75);
  REQUIRE_THROWS_AS(neg.eval(0.3, 0.8), std::invalid_argument);

  REQUIRE(compile(parse_expr("crisplow:0.3")).eval(0.9, 0.1) == 0.0);
}
