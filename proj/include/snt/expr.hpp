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

#include <charconv>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "snt/derived.hpp"
#include "snt/implications.hpp"
#include "snt/registry.hpp"

namespace snt {

// Expression grammar for the CLI:
//
//   top      := atom | impl | derive
//   impl     := "sn" "(" tconorm "," negation ")"
//             | "tn" "(" tnorm "," negation ")"
//             | "snt" "(" tconorm "," negation "," tnorm ")"
//             | "crisplow" ":" number | "crispup" ":" number
//   derive   := ("deriveS"|"deriveT"|"deriveTt"|"deriveSt") "(" snt-impl "," negation ")"
//   tnorm    := "min" | "prod" | "luk" | "drastic"
//   tconorm  := "max" | "probsum" | "luk" | "drastic"
//   negation := "std" | "nalpha" ":" number | "nupper" ":" number | "sugeno" ":" number
//
// Connective slots take registry atoms only; snt comes as (t-conorm,
// negation, t-norm), matching the reading order of S(N(T(x,N(y))),N(x)).
// A bare top-level atom resolves as t-norm first, then t-conorm, then
// negation (relevant for the shared names "luk" and "drastic").

struct Expr {
  enum class Kind {
    tnorm_atom,
    tconorm_atom,
    negation_atom,
    sn,
    tn,
    snt,
    crisp_lower,
    crisp_upper,
    derive_s,
    derive_t,
    derive_t_tilde,
    derive_s_tilde,
  };

  Kind kind;
  std::string atom;             // identifier, for atom kinds
  std::optional<double> param;  // nalpha/nupper/sugeno/crisplow/crispup
  std::vector<Expr> args;       // combinator children

  bool operator==(const Expr&) const = default;
};

/// Parse diagnostic: 0-based character position and the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t position, std::string token)
      : std::runtime_error(message + " (at position " + std::to_string(position) +
                           (token.empty() ? "" : ", near '" + token + "'") + ")"),
        position_(position),
        token_(std::move(token)) {}

  std::size_t position() const { return position_; }
  const std::string& token() const { return token_; }

 private:
  std::size_t position_;
  std::string token_;
};

namespace detail {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  Expr parse_top() {
    Expr e = parse_expr_any();
    skip_ws();
    if (pos_ != text_.size()) {
      fail("trailing input after expression", pos_);
    }
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::size_t at,
                         std::string tok = "") const {
    throw ParseError(msg, at, std::move(tok));
  }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (!eat(c)) {
      fail(std::string("expected '") + c + "'", pos_,
           pos_ < text_.size() ? std::string(1, text_[pos_]) : "");
    }
  }

  std::string ident() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           ((text_[pos_] >= 'a' && text_[pos_] <= 'z') ||
            (text_[pos_] >= 'A' && text_[pos_] <= 'Z') ||
            (text_[pos_] >= '0' && text_[pos_] <= '9' && pos_ > start) ||
            text_[pos_] == '_')) {
      ++pos_;
    }
    if (pos_ == start) {
      fail("expected an identifier", start,
           pos_ < text_.size() ? std::string(1, text_[pos_]) : "");
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  double number() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           ((text_[pos_] >= '0' && text_[pos_] <= '9') || text_[pos_] == '.' ||
            text_[pos_] == '-' || text_[pos_] == '+' || text_[pos_] == 'e' ||
            text_[pos_] == 'E')) {
      ++pos_;
    }
    const std::string_view tok = text_.substr(start, pos_ - start);
    double value = 0.0;
    const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || end != tok.data() + tok.size() || tok.empty()) {
      fail("expected a number", start, std::string(tok));
    }
    return value;
  }

  std::optional<double> optional_param() {
    if (eat(':')) return number();
    return std::nullopt;
  }

  /// Validates the parameter range at parse time by running the constructor.
  void validate(const std::string& what, std::size_t at, auto&& ctor) {
    try {
      ctor();
    } catch (const std::invalid_argument& e) {
      fail(e.what(), at, what);
    }
  }

  Expr parse_tnorm_slot() {
    skip_ws();
    const std::size_t at = pos_;
    const std::string name = ident();
    if (!lookup_tnorm(name)) {
      fail("'" + name + "' is not a registered t-norm", at, name);
    }
    return Expr{Expr::Kind::tnorm_atom, name, std::nullopt, {}};
  }

  Expr parse_tconorm_slot() {
    skip_ws();
    const std::size_t at = pos_;
    const std::string name = ident();
    if (!lookup_tconorm(name)) {
      fail("'" + name + "' is not a registered t-conorm", at, name);
    }
    return Expr{Expr::Kind::tconorm_atom, name, std::nullopt, {}};
  }

  Expr parse_negation_slot() {
    skip_ws();
    const std::size_t at = pos_;
    const std::string name = ident();
    if (!is_negation_name(name)) {
      fail("'" + name + "' is not a registered negation", at, name);
    }
    const std::optional<double> param = optional_param();
    validate(name, at, [&] { (void)make_negation(name, param); });
    return Expr{Expr::Kind::negation_atom, name, param, {}};
  }

  Expr parse_snt_combinator() {
    Expr e{Expr::Kind::snt, "", std::nullopt, {}};
    expect('(');
    e.args.push_back(parse_tconorm_slot());
    expect(',');
    e.args.push_back(parse_negation_slot());
    expect(',');
    e.args.push_back(parse_tnorm_slot());
    expect(')');
    return e;
  }

  Expr parse_expr_any() {
    skip_ws();
    const std::size_t at = pos_;
    const std::string head = ident();

    if (head == "sn") {
      Expr e{Expr::Kind::sn, "", std::nullopt, {}};
      expect('(');
      e.args.push_back(parse_tconorm_slot());
      expect(',');
      e.args.push_back(parse_negation_slot());
      expect(')');
      return e;
    }
    if (head == "tn") {
      Expr e{Expr::Kind::tn, "", std::nullopt, {}};
      expect('(');
      e.args.push_back(parse_tnorm_slot());
      expect(',');
      e.args.push_back(parse_negation_slot());
      expect(')');
      return e;
    }
    if (head == "snt") {
      return parse_snt_combinator();
    }
    if (head == "crisplow" || head == "crispup") {
      if (!eat(':')) fail("'" + head + "' needs ':<alpha>'", pos_);
      const double alpha = number();
      const bool lower = head == "crisplow";
      validate(head, at, [&] {
        lower ? (void)closed_crisp_lower(alpha) : (void)closed_crisp_upper(alpha);
      });
      return Expr{lower ? Expr::Kind::crisp_lower : Expr::Kind::crisp_upper, "", alpha, {}};
    }
    if (head == "deriveS" || head == "deriveT" || head == "deriveTt" ||
        head == "deriveSt") {
      Expr e{Expr::Kind::derive_s, "", std::nullopt, {}};
      if (head == "deriveT") e.kind = Expr::Kind::derive_t;
      if (head == "deriveTt") e.kind = Expr::Kind::derive_t_tilde;
      if (head == "deriveSt") e.kind = Expr::Kind::derive_s_tilde;
      expect('(');
      skip_ws();
      const std::size_t inner = pos_;
      const std::string sub = ident();
      if (sub != "snt") {
        fail("'" + head + "' needs an snt(...) implication", inner, sub);
      }
      e.args.push_back(parse_snt_combinator());
      expect(',');
      e.args.push_back(parse_negation_slot());
      expect(')');
      return e;
    }

    // Bare atom: t-norm first, then t-conorm, then negation.
    if (lookup_tnorm(head)) {
      return Expr{Expr::Kind::tnorm_atom, head, std::nullopt, {}};
    }
    if (lookup_tconorm(head)) {
      return Expr{Expr::Kind::tconorm_atom, head, std::nullopt, {}};
    }
    if (is_negation_name(head)) {
      const std::optional<double> param = optional_param();
      validate(head, at, [&] { (void)make_negation(head, param); });
      return Expr{Expr::Kind::negation_atom, head, param, {}};
    }
    fail("unknown identifier '" + head + "'", at, head);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Expr parse_expr(std::string_view text) {
  return detail::ExprParser(text).parse_top();
}

/// Canonical text form; parse(to_string(e)) is structurally identical to e.
inline std::string to_string(const Expr& e) {
  using Kind = Expr::Kind;
  auto with_param = [&](const std::string& head) {
    return e.param ? head + ":" + detail::format_param(*e.param) : head;
  };
  switch (e.kind) {
    case Kind::tnorm_atom:
    case Kind::tconorm_atom:
      return e.atom;
    case Kind::negation_atom:
      return with_param(e.atom);
    case Kind::crisp_lower:
      return "crisplow:" + detail::format_param(*e.param);
    case Kind::crisp_upper:
      return "crispup:" + detail::format_param(*e.param);
    case Kind::sn:
      return "sn(" + to_string(e.args[0]) + "," + to_string(e.args[1]) + ")";
    case Kind::tn:
      return "tn(" + to_string(e.args[0]) + "," + to_string(e.args[1]) + ")";
    case Kind::snt:
      return "snt(" + to_string(e.args[0]) + "," + to_string(e.args[1]) + "," +
             to_string(e.args[2]) + ")";
    case Kind::derive_s:
      return "deriveS(" + to_string(e.args[0]) + "," + to_string(e.args[1]) + ")";
    case Kind::derive_t:
      return "deriveT(" + to_string(e.args[0]) + "," + to_string(e.args[1]) + ")";
    case Kind::derive_t_tilde:
      return "deriveTt(" + to_string(e.args[0]) + "," + to_string(e.args[1]) + ")";
    case Kind::derive_s_tilde:
      return "deriveSt(" + to_string(e.args[0]) + "," + to_string(e.args[1]) + ")";
  }
  return "";
}

/// A realized expression: one of the five value kinds.
class CompiledExpr {
 public:
  using Value = std::variant<TNorm, TConorm, Negation, Implication, DerivedConnective>;

  explicit CompiledExpr(Value v) : value_(std::move(v)) {}

  const Value& value() const { return value_; }

  bool is_binary() const { return !std::holds_alternative<Negation>(value_); }

  double eval(double x, double y) const {
    return std::visit(
        [&](const auto& v) -> double {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, Negation>) {
            throw std::invalid_argument("negation takes one argument");
          } else {
            return v(x, y);
          }
        },
        value_);
  }

  double eval(double x) const {
    if (const auto* n = std::get_if<Negation>(&value_)) return (*n)(x);
    throw std::invalid_argument("expression takes two arguments");
  }

  std::string name() const {
    return std::visit([](const auto& v) { return v.name(); }, value_);
  }

  const char* kind_name() const {
    struct Visitor {
      const char* operator()(const TNorm&) const { return "t-norm"; }
      const char* operator()(const TConorm&) const { return "t-conorm"; }
      const char* operator()(const Negation&) const { return "negation"; }
      const char* operator()(const Implication&) const { return "implication"; }
      const char* operator()(const DerivedConnective&) const { return "derived"; }
    };
    return std::visit(Visitor{}, value_);
  }

 private:
  Value value_;
};

/// Realizes a parsed expression into evaluable values. Parameter ranges were
/// already validated at parse time; the constructors re-check them anyway.
inline CompiledExpr compile(const Expr& e) {
  using Kind = Expr::Kind;
  switch (e.kind) {
    case Kind::tnorm_atom:
      return CompiledExpr(*lookup_tnorm(e.atom));
    case Kind::tconorm_atom:
      return CompiledExpr(*lookup_tconorm(e.atom));
    case Kind::negation_atom:
      return CompiledExpr(make_negation(e.atom, e.param));
    case Kind::sn:
      return CompiledExpr(build_sn(*lookup_tconorm(e.args[0].atom),
                                   make_negation(e.args[1].atom, e.args[1].param)));
    case Kind::tn:
      return CompiledExpr(build_tn(*lookup_tnorm(e.args[0].atom),
                                   make_negation(e.args[1].atom, e.args[1].param)));
    case Kind::snt:
      return CompiledExpr(build_snt(*lookup_tconorm(e.args[0].atom),
                                    make_negation(e.args[1].atom, e.args[1].param),
                                    *lookup_tnorm(e.args[2].atom)));
    case Kind::crisp_lower:
      return CompiledExpr(closed_crisp_lower(*e.param));
    case Kind::crisp_upper:
      return CompiledExpr(closed_crisp_upper(*e.param));
    case Kind::derive_s:
    case Kind::derive_t:
    case Kind::derive_t_tilde:
    case Kind::derive_s_tilde: {
      const Expr& src = e.args[0];
      const Implication i =
          build_snt(*lookup_tconorm(src.args[0].atom),
                    make_negation(src.args[1].atom, src.args[1].param),
                    *lookup_tnorm(src.args[2].atom));
      const Negation nprime = make_negation(e.args[1].atom, e.args[1].param);
      switch (e.kind) {
        case Kind::derive_s:
          return CompiledExpr(derive_tconorm(i, nprime));
        case Kind::derive_t:
          return CompiledExpr(derive_tnorm(i, nprime));
        case Kind::derive_t_tilde:
          return CompiledExpr(derive_tnorm_tilde(i, nprime));
        default:
          return CompiledExpr(derive_tconorm_tilde(i, nprime));
      }
    }
  }
  throw std::logic_error("compile: unhandled expression kind");
}

}  // namespace snt
