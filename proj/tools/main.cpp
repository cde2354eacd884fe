// Copyright 2026 The bilogic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Talks to the library only through the C API.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bilogic/bilogic.h"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;

enum Exit : int { kOk = 0, kCountermodel = 1, kUsage = 2, kInvalidModel = 3, kBudget = 4 };

struct SessionDeleter {
  void operator()(bl_session* s) const { bl_session_destroy(s); }
};
struct FormulaDeleter {
  void operator()(bl_formula* f) const { bl_formula_destroy(f); }
};
struct ModelDeleter {
  void operator()(bl_model* m) const { bl_model_destroy(m); }
};
struct StringDeleter {
  void operator()(char* s) const { bl_string_free(s); }
};
using Session = std::unique_ptr<bl_session, SessionDeleter>;
using FormulaPtr = std::unique_ptr<bl_formula, FormulaDeleter>;
using ModelPtr = std::unique_ptr<bl_model, ModelDeleter>;
using CString = std::unique_ptr<char, StringDeleter>;

struct Config {
  std::string mode = "bd4";
  bool free_logic = true;
  int grid = 10;
  unsigned max_size = 3;
  std::string profile;
  std::string output = "text";
  unsigned workers = 1;
  std::string witness_out;
};

// Raised after the error has been reported; carries the exit code.
struct Abort {
  int code;
};

int exit_code(bl_status status) {
  switch (status) {
    case BL_OK: return kOk;
    case BL_ERR_MODEL: return kInvalidModel;
    case BL_ERR_BUDGET: return kBudget;
    default: return kUsage;
  }
}

class Runner {
 public:
  Runner(const Config& config, const CLI::App& app) : config_(config), app_(app) {}

  bool json_output() const { return config_.output == "json"; }
  bool given(const char* option) const { return app_.get_option(option)->count() > 0; }

  [[noreturn]] void fail(int code, const std::string& message, int column = 0,
                         const std::string& input = {}) const {
    std::cerr << "error: " << message << '\n';
    if (column > 0 && !input.empty()) {
      std::cerr << "  " << input << '\n' << "  " << std::string(column - 1, ' ') << "^\n";
    }
    if (json_output()) {
      json err{{"code", code}, {"message", message}};
      if (column > 0) err["column"] = column;
      std::cout << json{{"error", err}}.dump(2) << '\n';
    }
    throw Abort{code};
  }

  void check(bl_status status, const std::string& input = {}) const {
    if (status == BL_OK) return;
    std::string message = bl_last_error(session_.get());
    int column = bl_last_error_column(session_.get());
    if (status == BL_ERR_PARSE && column > 0) {
      message = "at column " + std::to_string(column) + ": " + message;
    }
    if (status == BL_ERR_BUDGET) {
      message += " (set BILOGIC_BUDGET to at least " +
                 std::to_string(bl_last_error_required(session_.get())) + " to allow it)";
    }
    fail(exit_code(status), message, column, input);
  }

  // Applies the run configuration to a new session; `mode` overrides.
  void open(const std::string& mode) {
    session_.reset(bl_session_create());
    if (!session_) fail(kUsage, "cannot create a session");
    if (given("--grid") && mode == "bd4") fail(kUsage, "--grid only applies to lbd mode");
    check(bl_session_set_mode(session_.get(), mode.c_str()));
    check(bl_session_set_free_logic(session_.get(), config_.free_logic ? 1 : 0));
    check(bl_session_set_grid(session_.get(), config_.grid));
    check(bl_session_set_max_size(session_.get(), config_.max_size));
    check(bl_session_set_workers(session_.get(), config_.workers));
    if (given("--profile")) check(bl_session_set_profile(session_.get(), config_.profile.c_str()));
    if (const char* budget = std::getenv("BILOGIC_BUDGET"); budget && *budget) {
      std::uint64_t value = 0;
      std::istringstream in(budget);
      if (!(in >> value) || !in.eof()) fail(kUsage, "BILOGIC_BUDGET must be a non-negative integer");
      check(bl_session_set_budget(session_.get(), value));
    }
  }

  FormulaPtr parse(const std::string& text, const bl_model* context = nullptr) {
    bl_formula* f = nullptr;
    check(bl_formula_parse(session_.get(), text.c_str(), context, &f), text);
    return FormulaPtr(f);
  }

  ModelPtr load_model(const std::string& path) {
    // models are loaded before the mode is known; a scratch session suffices
    Session scratch(bl_session_create());
    bl_model* m = nullptr;
    bl_status status = bl_model_load_file(scratch.get(), path.c_str(), &m);
    if (status != BL_OK) {
      fail(status == BL_ERR_IO ? kUsage : kInvalidModel, bl_last_error(scratch.get()));
    }
    return ModelPtr(m);
  }

  // The model's mode is authoritative; an explicit conflicting --mode is an error.
  void open_for_model(const bl_model* model) {
    std::string mode = bl_model_mode(model);
    if (given("--mode") && config_.mode != mode) {
      fail(kUsage, "--mode " + config_.mode + " conflicts with the model's mode " + mode);
    }
    open(mode);
  }

  // `raw` is read only after `status` has been computed.
  json call(bl_status status, char*& raw, const std::string& input = {}) {
    CString owned(raw);
    check(status, input);
    return json::parse(owned.get());
  }

  bl_session* session() const { return session_.get(); }

  void print_json(const json& j) const { std::cout << j.dump(2) << '\n'; }

 private:
  const Config& config_;
  const CLI::App& app_;
  Session session_;
};

std::string value_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  std::ostringstream out;
  out << '<' << v[0].get<double>() << ',' << v[1].get<double>() << '>';
  return out.str();
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string tuple_text(const json& tuple) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ",";
    out += tuple[i].get<std::string>();
  }
  return out + ")";
}

// --- truthtable -------------------------------------------------------------

void print_table(const json& table, const std::string& formula) {
  const auto& atoms = table["atoms"];
  const auto& rows = table["rows"];
  if (atoms.empty()) {
    std::cout << formula << " = " << value_text(rows[0]["value"]) << '\n';
    return;
  }
  if (atoms.size() == 2 && rows.size() == 16) {
    // matrix: first atom down the side, second across the top
    std::string corner = formula;
    std::cout << corner << " |";
    for (int c = 0; c < 4; ++c) std::cout << ' ' << value_text(rows[c]["inputs"][1]);
    std::cout << '\n' << std::string(corner.size() + 1, '-') << '+' << std::string(8, '-') << '\n';
    for (int row = 0; row < 4; ++row) {
      std::cout << pad("", corner.size() - 1) << value_text(rows[row * 4]["inputs"][0]) << " |";
      for (int c = 0; c < 4; ++c) std::cout << ' ' << value_text(rows[row * 4 + c]["value"]);
      std::cout << '\n';
    }
    return;
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header;
  for (const auto& a : atoms) header.push_back(a.get<std::string>());
  header.push_back(formula);
  cells.push_back(header);
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (const auto& v : row["inputs"]) line.push_back(value_text(v));
    line.push_back(value_text(row["value"]));
    cells.push_back(std::move(line));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : cells) {
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  }
  for (std::size_t l = 0; l < cells.size(); ++l) {
    std::string out;
    for (std::size_t i = 0; i < cells[l].size(); ++i) {
      if (i + 1 == cells[l].size()) out += "| ";
      out += pad(cells[l][i], width[i]);
      if (i + 1 < cells[l].size()) out += ' ';
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    std::cout << out << '\n';
    if (l == 0) {
      std::string rule;
      for (std::size_t i = 0; i < width.size(); ++i) {
        if (i + 1 == width.size()) rule += "+-";
        rule += std::string(width[i], '-');
        if (i + 1 < width.size()) rule += '-';
      }
      std::cout << rule << '\n';
    }
  }
}

// --- eval -------------------------------------------------------------------

std::string classification_text(const json& result) {
  std::string out;
  for (const char* key : {"designated", "normal", "gappy", "glutty"}) {
    out += std::string(key) + ": " + (result[key].get<bool>() ? "yes" : "no") + "  ";
  }
  while (out.back() == ' ') out.pop_back();
  return out;
}

std::string environment_text(const json& env) {
  std::string out;
  for (const auto& [var, element] : env.items()) {
    if (!out.empty()) out += ", ";
    out += var + "=" + element.get<std::string>();
  }
  return out;
}

void print_violations(const json& violations) {
  std::cerr << "error: the model does not validate:\n";
  for (const auto& v : violations) {
    std::cerr << "  [" << v["kind"].get<std::string>() << "] " << v["message"].get<std::string>()
              << '\n';
  }
}

// Validates against the formula's signature (and the profile, if given).
void validate(Runner& r, const bl_model* model, const bl_formula* formula) {
  const bl_formula* list[] = {formula};
  int valid = 0;
  char* raw = nullptr;
  json violations = r.call(bl_model_validate(r.session(), model, list, 1, &raw, &valid), raw);
  if (valid) return;
  print_violations(violations);
  if (r.json_output()) r.print_json(json{{"violations", violations}});
  throw Abort{kInvalidModel};
}

// --- entail -----------------------------------------------------------------

void print_model(const json& m) {
  std::cout << "  mode: " << m["mode"].get<std::string>() << '\n';
  std::cout << "  domain:";
  for (const auto& e : m["domain"]) std::cout << ' ' << e.get<std::string>();
  std::cout << '\n';
  for (const auto& [name, element] : m["constants"].items()) {
    std::cout << "  " << name << " -> " << element.get<std::string>() << '\n';
  }
  for (const auto& [name, p] : m["predicates"].items()) {
    std::cout << "  " << name << ":";
    for (const auto& [key, value] : p["map"].items()) {
      std::cout << ' ' << name << '(' << key << ")=" << value_text(value);
    }
    std::cout << (p["map"].empty() ? " " : ", ") << "otherwise " << value_text(p["default"])
              << '\n';
  }
}

std::vector<std::string> read_premises_file(Runner& r, const std::string& path) {
  std::ifstream in(path);
  if (!in) r.fail(kUsage, "cannot open premises file '" + path + "'");
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(first, last - first + 1));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Four-valued and fuzzy bilattice logic with dual-domain quantification"};
  app.set_version_flag("--version", std::string(bl_version()));
  app.require_subcommand(1);
  app.fallthrough();

  Config config;
  app.add_option("--mode", config.mode, "bd4 (four-valued) or lbd (fuzzy)")
      ->check(CLI::IsMember({"bd4", "lbd"}));
  app.add_flag("--free,!--no-free", config.free_logic,
               "free-logic mode: E! is bivalent and inner quantifiers are relativized (default on)");
  app.add_option("--grid", config.grid, "grid resolution for lbd search (default 10)")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-size", config.max_size, "largest domain size searched (default 3)")
      ->check(CLI::PositiveNumber);
  app.add_option("--profile", config.profile,
                 "axiom schemas: comma-separated existence,normality,noncontradiction");
  app.add_option("--output", config.output, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--workers", config.workers, "parallel search workers (default 1)")
      ->check(CLI::PositiveNumber);
  app.add_option("--witness-out", config.witness_out, "entail: write the countermodel to this file");

  std::string formula_text;
  std::string model_path;
  std::vector<std::string> assignments;
  bool all_envs = false;
  std::vector<std::string> premises;
  std::string premises_file;
  std::string conclusion;

  auto* parse_cmd = app.add_subcommand("parse", "show the syntax tree and its desugared form");
  parse_cmd->add_option("formula", formula_text, "formula text")->required();

  auto* table_cmd = app.add_subcommand("truthtable", "truth table of a propositional formula");
  table_cmd->add_option("formula", formula_text, "formula text")->required();

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a formula in a model");
  eval_cmd->add_option("model", model_path, "model JSON file")->required();
  eval_cmd->add_option("formula", formula_text, "formula text")->required();
  eval_cmd->add_option("--assign", assignments, "free-variable assignment variable=element");
  eval_cmd->add_flag("--all", all_envs, "evaluate under every assignment of the free variables");

  auto* theory_cmd = app.add_subcommand("check-theory", "check the free-logic axiom schemas");
  theory_cmd->add_option("model", model_path, "model JSON file")->required();

  auto* entail_cmd = app.add_subcommand("entail", "bounded entailment check");
  entail_cmd->add_option("--premise", premises, "premise formula (repeatable)");
  entail_cmd->add_option("--premises-file", premises_file,
                         "file with one premise per line; blank and # lines are skipped");
  entail_cmd->add_option("--conclusion", conclusion, "conclusion formula")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  Runner r(config, app);
  try {
    if (parse_cmd->parsed()) {
      r.open(config.mode);
      auto f = r.parse(formula_text);
      char* raw = nullptr;
      json d = r.call(bl_formula_describe(r.session(), f.get(), &raw), raw);
      if (r.json_output()) {
        r.print_json(d);
      } else {
        std::string vars;
        for (const auto& v : d["free_variables"]) vars += (vars.empty() ? "" : ", ") + v.get<std::string>();
        std::cout << "formula:        " << d["formula"].get<std::string>() << '\n'
                  << "ast:            " << d["ast"].get<std::string>() << '\n'
                  << "desugared:      " << d["desugared"].get<std::string>() << '\n'
                  << "desugared ast:  " << d["desugared_ast"].get<std::string>() << '\n'
                  << "free variables: " << (vars.empty() ? "(none)" : vars) << '\n';
      }
      return kOk;
    }

    if (table_cmd->parsed()) {
      r.open(config.mode);
      auto f = r.parse(formula_text);
      char* raw = nullptr;
      json t = r.call(bl_truth_table(r.session(), f.get(), &raw), raw);
      if (r.json_output()) {
        r.print_json(t);
      } else {
        char* described = nullptr;
        json d = r.call(bl_formula_describe(r.session(), f.get(), &described), described);
        print_table(t, d["formula"].get<std::string>());
      }
      return kOk;
    }

    if (eval_cmd->parsed()) {
      auto model = r.load_model(model_path);
      r.open_for_model(model.get());
      auto f = r.parse(formula_text, model.get());
      validate(r, model.get(), f.get());
      char* raw = nullptr;
      if (all_envs) {
        json all = r.call(bl_eval_all(r.session(), model.get(), f.get(), &raw), raw);
        if (r.json_output()) {
          r.print_json(all);
        } else {
          for (const auto& res : all["results"]) {
            std::string env = environment_text(res["environment"]);
            std::cout << (env.empty() ? "" : env + ": ") << value_text(res["value"]) << "  "
                      << classification_text(res) << '\n';
          }
        }
        return kOk;
      }
      std::vector<const char*> argv_assign;
      for (const auto& a : assignments) argv_assign.push_back(a.c_str());
      json res = r.call(bl_eval(r.session(), model.get(), f.get(), argv_assign.data(),
                                argv_assign.size(), &raw),
                        raw);
      if (r.json_output()) {
        r.print_json(res);
      } else {
        std::cout << value_text(res["value"]) << '\n' << classification_text(res) << '\n';
      }
      return kOk;
    }

    if (theory_cmd->parsed()) {
      if (!config.free_logic) r.fail(kUsage, "check-theory needs free-logic mode");
      auto model = r.load_model(model_path);
      r.open_for_model(model.get());
      char* raw = nullptr;
      int pass = 0;
      json report = r.call(bl_check_theory(r.session(), model.get(), &raw, &pass), raw);
      if (r.json_output()) {
        r.print_json(report);
      } else {
        for (const auto& s : report["schemas"]) {
          std::cout << pad(s["axiom"].get<std::string>(), 18);
          if (s["pass"].get<bool>()) {
            std::cout << "pass\n";
            continue;
          }
          std::cout << "FAIL at";
          for (const auto& f : s["failures"]) {
            std::cout << ' ' << f["predicate"].get<std::string>() << tuple_text(f["tuple"]);
          }
          std::cout << '\n';
        }
        const auto& fuzzy = report["existence_normal_not_bivalent"];
        if (!fuzzy.empty()) {
          std::cout << "note: E! is normal but not bivalent at";
          for (const auto& e : fuzzy) std::cout << ' ' << e.get<std::string>();
          std::cout << '\n';
        }
      }
      return pass ? kOk : kCountermodel;
    }

    if (entail_cmd->parsed()) {
      r.open(config.mode);
      if (!premises_file.empty()) {
        for (auto& p : read_premises_file(r, premises_file)) premises.push_back(std::move(p));
      }
      std::vector<FormulaPtr> owned;
      std::vector<const bl_formula*> list;
      for (const auto& p : premises) {
        owned.push_back(r.parse(p));
        list.push_back(owned.back().get());
      }
      auto c = r.parse(conclusion);
      char* raw = nullptr;
      int holds = 0;
      bl_model* witness = nullptr;
      json verdict = r.call(bl_entail(r.session(), list.data(), list.size(), c.get(), &raw,
                                      &holds, &witness),
                            raw);
      ModelPtr witness_owned(witness);
      if (witness && !config.witness_out.empty()) {
        char* mj = nullptr;
        r.check(bl_model_to_json(r.session(), witness, &mj));
        CString text(mj);
        std::ofstream out(config.witness_out, std::ios::binary);
        out << text.get() << '\n';
        if (!out) r.fail(kUsage, "cannot write witness file '" + config.witness_out + "'");
      }
      if (r.json_output()) {
        r.print_json(verdict);
      } else {
        std::string grid = verdict["grid"].is_null()
                               ? ""
                               : " on grid " + std::to_string(verdict["grid"].get<int>());
        std::string bound = std::to_string(verdict["bound"].get<int>());
        if (holds) {
          std::cout << "holds up to domain size " << bound << grid
                    << " (no countermodel found; not a proof of validity)\n";
        } else {
          std::cout << "countermodel found (search bound " << bound << grid << ")\n";
        }
        std::cout << "models examined: " << verdict["models_examined"].get<std::uint64_t>() << '\n';
        if (!holds) {
          const auto& w = verdict["witness"];
          std::cout << "witness:\n";
          print_model(w["model"]);
          std::string env = environment_text(w["environment"]);
          if (!env.empty()) std::cout << "environment: " << env << '\n';
        }
      }
      return holds ? kOk : kCountermodel;
    }
  } catch (const Abort& a) {
    return a.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
