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

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "snt/snt.hpp"

namespace {

// Exit codes: 0 = success / no counterexample, 1 = a property was falsified,
// 2 = usage error (bad arguments, unparseable expression, bad config).
constexpr int kExitOk = 0;
constexpr int kExitFalsified = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  double grid_step = 0.01;
  double triple_grid_step = 0.05;
  int random_count = 256;
  std::uint64_t seed = 42;
  double tolerance = snt::kDefaultTolerance;
  bool json = false;
};

/// Config knobs shared by the scanning subcommands. Precedence:
/// command-line flags > config file > SNT_SEED env var > built-in defaults.
struct ConfigOpts {
  double step = 0.01;
  double triple_step = 0.05;
  int random = 256;
  std::uint64_t seed = 42;
  double tol = snt::kDefaultTolerance;
  std::string config_path;
  bool json = false;
  CLI::Option* o_step = nullptr;
  CLI::Option* o_triple = nullptr;
  CLI::Option* o_random = nullptr;
  CLI::Option* o_seed = nullptr;
  CLI::Option* o_tol = nullptr;
};

void attach_config(CLI::App* cmd, ConfigOpts& c, bool with_json) {
  c.o_step = cmd->add_option("--step", c.step, "grid step (default 0.01)");
  c.o_triple =
      cmd->add_option("--triple-step", c.triple_step, "3-variable grid step (default 0.05)");
  c.o_random = cmd->add_option("--random", c.random, "random sample count (default 256)");
  c.o_seed = cmd->add_option("--seed", c.seed, "random seed (default 42)");
  c.o_tol = cmd->add_option("--tol", c.tol, "tolerance (default 1e-9)");
  cmd->add_option("--config", c.config_path, "JSON config file");
  if (with_json) cmd->add_flag("--json", c.json, "emit JSON reports");
}

void apply_config_file(RunConfig& r, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("config file '" + path + "': " + e.what());
  }
  if (!j.is_object()) throw UsageError("config file must hold a JSON object");
  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "grid_step") {
        r.grid_step = value.get<double>();
      } else if (key == "triple_grid_step") {
        r.triple_grid_step = value.get<double>();
      } else if (key == "random_count") {
        r.random_count = value.get<int>();
      } else if (key == "seed") {
        r.seed = value.get<std::uint64_t>();
      } else if (key == "tolerance") {
        r.tolerance = value.get<double>();
      } else if (key == "format") {
        const auto fmt = value.get<std::string>();
        if (fmt == "json") {
          r.json = true;
        } else if (fmt == "text") {
          r.json = false;
        } else {
          throw UsageError("config 'format' must be \"text\" or \"json\"");
        }
      } else {
        throw UsageError("config file: unknown key '" + key + "'");
      }
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("config key '" + key + "': " + e.what());
    }
  }
}

RunConfig resolve_config(const ConfigOpts& c) {
  RunConfig r;
  if (const char* env = std::getenv("SNT_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
      r.seed = v;
    } catch (const std::exception&) {
      throw UsageError(std::string("SNT_SEED is not an unsigned integer: '") + env + "'");
    }
  }
  if (!c.config_path.empty()) apply_config_file(r, c.config_path);
  if (c.o_step && c.o_step->count() > 0) r.grid_step = c.step;
  if (c.o_triple && c.o_triple->count() > 0) r.triple_grid_step = c.triple_step;
  if (c.o_random && c.o_random->count() > 0) r.random_count = c.random;
  if (c.o_seed && c.o_seed->count() > 0) r.seed = c.seed;
  if (c.o_tol && c.o_tol->count() > 0) r.tolerance = c.tol;
  if (c.json) r.json = true;

  if (!(r.grid_step > 0.0) || r.grid_step > 0.5) {
    throw UsageError("grid step must be in (0, 0.5]");
  }
  if (!(r.triple_grid_step > 0.0) || r.triple_grid_step > 0.5) {
    throw UsageError("triple grid step must be in (0, 0.5]");
  }
  if (r.random_count < 0) throw UsageError("random sample count must be >= 0");
  if (!(r.tolerance > 0.0)) throw UsageError("tolerance must be > 0");
  return r;
}

snt::SampleSet make_samples(const RunConfig& r) {
  snt::SampleSet::Params p;
  p.grid_step = r.grid_step;
  p.triple_grid_step = r.triple_grid_step;
  p.random_count = r.random_count;
  p.seed = r.seed;
  return snt::SampleSet(p);
}

snt::CompiledExpr compile_or_usage(const std::string& text) {
  try {
    return snt::compile(snt::parse_expr(text));
  } catch (const snt::ParseError& e) {
    throw UsageError(std::string("cannot parse '") + text + "': " + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("cannot build '") + text + "': " + e.what());
  }
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

int cmd_eval(const std::string& expr_text, double x, std::optional<double> y) {
  const snt::CompiledExpr ce = compile_or_usage(expr_text);
  auto in_range = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!in_range(x) || (y && !in_range(*y))) {
    throw UsageError("coordinates must lie in [0,1]");
  }
  double value = 0.0;
  if (ce.is_binary()) {
    if (!y) throw UsageError("expression takes two coordinates");
    value = ce.eval(x, *y);
  } else {
    if (y) throw UsageError("a negation takes one coordinate");
    value = ce.eval(x);
  }
  std::cout << snt::format_sig12(value) << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

int cmd_table(const std::string& expr_text, const RunConfig& cfg,
              const std::string& out_path) {
  const snt::CompiledExpr ce = compile_or_usage(expr_text);
  if (!ce.is_binary()) throw UsageError("table needs a binary expression");
  const std::vector<double> axis = snt::uniform_axis(cfg.grid_step);

  std::string csv;
  for (double yj : axis) {
    csv += ",";
    csv += snt::format_sig12(yj);
  }
  csv += "\n";
  for (double xi : axis) {
    csv += snt::format_sig12(xi);
    for (double yj : axis) {
      csv += ",";
      csv += snt::format_sig12(ce.eval(xi, yj));
    }
    csv += "\n";
  }

  if (out_path.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw UsageError("cannot open output file '" + out_path + "'");
    out << csv;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

std::vector<snt::PropertyId> parse_props(const std::string& list) {
  std::vector<snt::PropertyId> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = list.find(',', start);
    const std::string tok =
        list.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!tok.empty()) {
      const auto id = snt::property_id_from_string(tok);
      if (!id) throw UsageError("unknown property id '" + tok + "'");
      out.push_back(*id);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw UsageError("empty property list");
  return out;
}

int emit_reports(const std::vector<snt::PropertyReport>& reports, bool json,
                 bool theorem_roles_only_for_exit) {
  if (json) {
    std::cout << snt::to_json(reports) << "\n";
  } else {
    std::cout << snt::to_text_table(reports);
  }
  for (const auto& r : reports) {
    if (theorem_roles_only_for_exit && r.role != snt::ReportRole::theorem) continue;
    if (r.falsified()) return kExitFalsified;
  }
  return kExitOk;
}

int cmd_check(const std::string& expr_text, const std::string& props_text,
              const RunConfig& cfg) {
  using namespace snt;
  const CompiledExpr ce = compile_or_usage(expr_text);
  const SampleSet samples = make_samples(cfg);
  const double tol = cfg.tolerance;
  const bool all = props_text == "all";

  std::vector<PropertyReport> reports;
  if (const auto* t = std::get_if<TNorm>(&ce.value())) {
    reports = check_axioms(*t, samples, tol);
  } else if (const auto* s = std::get_if<TConorm>(&ce.value())) {
    reports = check_axioms(*s, samples, tol);
  } else if (const auto* n = std::get_if<Negation>(&ce.value())) {
    reports = check_axioms(*n, samples, tol);
  } else if (const auto* d = std::get_if<DerivedConnective>(&ce.value())) {
    reports = check_derived_axioms(*d, samples, tol);
  } else {
    const auto& impl = std::get<Implication>(ce.value());
    if (all) {
      reports = check_axioms(impl, samples, tol);
      for (PropertyId id : {PropertyId::NP, PropertyId::EP, PropertyId::IP,
                            PropertyId::LOP, PropertyId::ROP, PropertyId::OP,
                            PropertyId::CB, PropertyId::SIB, PropertyId::IB}) {
        reports.push_back(check_property(id, impl, samples, tol));
      }
      if (impl.negation() != nullptr) {
        for (PropertyId id : {PropertyId::CP, PropertyId::LCP, PropertyId::RCP}) {
          PropertyReport r = check_property(id, impl, samples, tol, impl.negation());
          r.note = "with respect to N = " + impl.negation()->name();
          reports.push_back(r);
        }
      }
    } else {
      for (PropertyId id : parse_props(props_text)) {
        try {
          PropertyReport r = check_property(id, impl, samples, tol, impl.negation());
          reports.push_back(std::move(r));
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
      }
    }
    return emit_reports(reports, cfg.json, false);
  }

  if (!all) {
    const auto wanted = parse_props(props_text);
    std::vector<PropertyReport> filtered;
    for (PropertyId id : wanted) {
      bool found = false;
      for (const auto& r : reports) {
        if (r.id == id) {
          filtered.push_back(r);
          found = true;
        }
      }
      if (!found) {
        throw UsageError(std::string("property ") + to_string(id) +
                         " does not apply to a " + ce.kind_name());
      }
    }
    reports = std::move(filtered);
  }
  return emit_reports(reports, cfg.json, false);
}

// ---------------------------------------------------------------------------
// suite
// ---------------------------------------------------------------------------

/// Splits on commas that are not nested inside parentheses.
std::vector<std::string> split_inputs(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  out.push_back(current);
  for (auto& s : out) {
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
  }
  return out;
}

int cmd_suite(const std::string& id_text, const std::string& inputs_text,
              const RunConfig& cfg) {
  using namespace snt;
  const auto id = suite_from_string(id_text);
  if (!id) {
    throw UsageError("unknown suite id '" + id_text + "' (see `snt list`)");
  }
  const SuiteInfo* info = nullptr;
  for (const auto& entry : suite_catalog()) {
    if (entry.id == *id) info = &entry;
  }
  const std::vector<std::string> slot_kinds = split_inputs(info->slots);
  const std::vector<std::string> inputs = split_inputs(inputs_text);
  if (inputs.size() != slot_kinds.size()) {
    throw UsageError("suite " + std::string(info->name) + " expects " +
                     std::to_string(slot_kinds.size()) + " inputs (" + info->slots +
                     "), got " + std::to_string(inputs.size()));
  }

  SuiteInputs in;
  for (std::size_t k = 0; k < slot_kinds.size(); ++k) {
    const std::string& kind = slot_kinds[k];
    const std::string& text = inputs[k];
    if (kind == "T") {
      auto t = lookup_tnorm(text);
      if (!t) {
        throw UsageError("'" + text + "' is not a registered t-norm (suite " +
                         info->name + " slot " + std::to_string(k + 1) + ")");
      }
      in.t = std::move(t);
    } else if (kind == "S") {
      auto s = lookup_tconorm(text);
      if (!s) {
        throw UsageError("'" + text + "' is not a registered t-conorm (suite " +
                         info->name + " slot " + std::to_string(k + 1) + ")");
      }
      in.s = std::move(s);
    } else {
      try {
        const Expr e = parse_expr(text);
        if (e.kind != Expr::Kind::negation_atom) {
          throw UsageError("'" + text + "' is not a registered negation (suite " +
                           info->name + " slot " + std::to_string(k + 1) + ")");
        }
        in.n = make_negation(e.atom, e.param);
      } catch (const ParseError& e) {
        throw UsageError(std::string("suite input '") + text + "': " + e.what());
      }
    }
  }

  const auto reports = run_theorem_suite(*id, in, make_samples(cfg), cfg.tolerance);
  // Exit status reflects the theorem verdicts: raw scans may be falsified by
  // design when a suite confirms a "does not satisfy" prediction.
  return emit_reports(reports, cfg.json, true);
}

// ---------------------------------------------------------------------------
// list
// ---------------------------------------------------------------------------

int cmd_list() {
  using namespace snt;
  std::cout << "Registered atoms and combinators:\n";
  for (const auto& e : registry_listing()) {
    std::cout << "  " << e.syntax;
    for (std::size_t pad = e.syntax.size(); pad < 22; ++pad) std::cout << ' ';
    std::cout << e.kind;
    for (std::size_t pad = e.kind.size(); pad < 18; ++pad) std::cout << ' ';
    std::cout << e.description << "\n";
  }
  std::cout << "\nBare atoms at top level resolve as t-norm, then t-conorm, then "
               "negation ('luk' and 'drastic' name both a t-norm and a t-conorm).\n";
  std::cout << "\nTheorem suites (run with: snt suite <id> --inputs <atoms>):\n";
  for (const auto& s : suite_catalog()) {
    std::cout << "  " << s.name;
    for (std::size_t pad = std::string(s.name).size(); pad < 11; ++pad) std::cout << ' ';
    std::cout << "inputs " << s.slots;
    for (std::size_t pad = std::string(s.slots).size(); pad < 7; ++pad) std::cout << ' ';
    std::cout << s.summary << "\n";
  }
  std::cout << "\nProperty ids for --props:\n  ";
  for (int k = 0; k <= static_cast<int>(PropertyId::T_EQ_MIN); ++k) {
    if (k > 0) std::cout << " ";
    std::cout << to_string(static_cast<PropertyId>(k));
  }
  std::cout << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fuzzy connective algebra: build implications from t-norms, "
               "t-conorms and negations, and falsify their properties on "
               "sampled points of the unit square"};
  app.require_subcommand(1);

  // eval
  std::string eval_expr;
  double eval_x = 0.0;
  std::optional<double> eval_y;
  CLI::App* eval = app.add_subcommand("eval", "evaluate an expression at a point");
  eval->add_option("expr", eval_expr, "expression, e.g. snt(max,std,min)")->required();
  eval->add_option("x", eval_x, "first coordinate in [0,1]")->required();
  eval->add_option("y", eval_y, "second coordinate in [0,1]");

  // table
  std::string table_expr;
  std::string table_out;
  ConfigOpts table_cfg;
  CLI::App* table = app.add_subcommand("table", "emit a CSV grid of values");
  table->add_option("expr", table_expr, "binary expression")->required();
  table->add_option("--out", table_out, "output file (default stdout)");
  attach_config(table, table_cfg, false);

  // check
  std::string check_expr;
  std::string check_props = "all";
  ConfigOpts check_cfg;
  CLI::App* check = app.add_subcommand("check", "scan axioms/properties for counterexamples");
  check->add_option("expr", check_expr, "expression to check")->required();
  check->add_option("--props", check_props, "comma-separated property ids, or 'all'");
  attach_config(check, check_cfg, true);

  // suite
  std::string suite_id;
  std::string suite_inputs;
  ConfigOpts suite_cfg;
  CLI::App* suite = app.add_subcommand("suite", "run a named theorem suite");
  suite->add_option("id", suite_id, "suite id, e.g. Thm3.1 (see `snt list`)")->required();
  suite->add_option("--inputs", suite_inputs, "comma-separated connective atoms")->required();
  attach_config(suite, suite_cfg, true);

  // list
  CLI::App* list = app.add_subcommand("list", "list atoms, combinators, and suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(eval_expr, eval_x, eval_y);
    if (table->parsed()) return cmd_table(table_expr, resolve_config(table_cfg), table_out);
    if (check->parsed()) return cmd_check(check_expr, check_props, resolve_config(check_cfg));
    if (suite->parsed()) return cmd_suite(suite_id, suite_inputs, resolve_config(suite_cfg));
    if (list->parsed()) return cmd_list();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
