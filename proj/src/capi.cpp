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

#include "bilogic/bilogic.h"

#include <cstring>
#include <fstream>
#include <new>
#include <optional>
#include <sstream>
#include <string>

#include "bilogic/model_io.hpp"
#include "bilogic/search.hpp"
#include "json_values.hpp"

using bilogic::detail::ordered_json;

struct bl_session {
  bilogic::Logic logic = bilogic::Logic::FourValued;
  bool free_logic = true;
  int grid = 10;
  unsigned max_size = 3;
  unsigned workers = 1;
  std::uint64_t budget = bilogic::kDefaultBudget;
  std::optional<bilogic::TheoryProfile> profile;

  std::string error;
  int column = 0;
  std::uint64_t required = 0;
};

struct bl_formula {
  bilogic::Formula formula;
  bilogic::Logic logic;
  bool free_logic;
};

struct bl_model {
  bilogic::Model model;
};

namespace {

class Failure : public std::runtime_error {
 public:
  Failure(bl_status status, const std::string& message)
      : std::runtime_error(message), status_(status) {}
  bl_status status() const noexcept { return status_; }

 private:
  bl_status status_;
};

bl_status record(bl_session* s, bl_status status, const char* message) {
  s->error = message;
  return status;
}

template <class F>
bl_status guard(bl_session* s, F&& body) {
  if (!s) return BL_ERR_INVALID_ARGUMENT;
  s->error.clear();
  s->column = 0;
  s->required = 0;
  try {
    body();
    return BL_OK;
  } catch (const Failure& e) {
    return record(s, e.status(), e.what());
  } catch (const bilogic::ParseError& e) {
    s->column = e.column();
    return record(s, BL_ERR_PARSE, e.what());
  } catch (const bilogic::BudgetError& e) {
    s->required = e.required();
    return record(s, BL_ERR_BUDGET, e.what());
  } catch (const bilogic::Error& e) {
    switch (e.kind()) {
      case bilogic::ErrorKind::Parse:
      case bilogic::ErrorKind::Signature: return record(s, BL_ERR_PARSE, e.what());
      case bilogic::ErrorKind::Carrier:
      case bilogic::ErrorKind::Model: return record(s, BL_ERR_MODEL, e.what());
      case bilogic::ErrorKind::Eval: return record(s, BL_ERR_EVAL, e.what());
      case bilogic::ErrorKind::Budget: return record(s, BL_ERR_BUDGET, e.what());
    }
    return record(s, BL_ERR_INTERNAL, e.what());
  } catch (const std::invalid_argument& e) {
    return record(s, BL_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return record(s, BL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return record(s, BL_ERR_INTERNAL, e.what());
  }
}

void require(bool condition, const char* what) {
  if (!condition) throw Failure(BL_ERR_INVALID_ARGUMENT, what);
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const ordered_json& j, char** out) { *out = dup_string(j.dump(2)); }

ordered_json tuple_json(const std::vector<std::string>& tuple) { return tuple; }

ordered_json signature_json(const bilogic::Signature& sig) {
  ordered_json preds = ordered_json::object();
  for (const auto& [name, arity] : sig.predicates()) preds[name] = arity;
  ordered_json consts = ordered_json::array();
  for (const auto& c : sig.constants()) consts.push_back(c);
  return {{"predicates", preds}, {"constants", consts}};
}

ordered_json valued_json(const bilogic::TruthValue& v) {
  auto c = bilogic::classify(v);
  ordered_json out;
  out["value"] = bilogic::detail::value_json(v);
  out["pos"] = v.pos();
  out["neg"] = v.neg();
  out["designated"] = c.designated;
  out["normal"] = c.normal;
  out["gappy"] = c.gappy;
  out["glutty"] = c.glutty;
  return out;
}

bilogic::Signature model_signature(const bilogic::Model& m) {
  bilogic::Signature sig;
  for (const auto& [name, p] : m.predicates) {
    if (p.arity >= 0) sig.add_predicate(name, p.arity);
  }
  for (const auto& [name, element] : m.constants) {
    if (!sig.has_predicate(name)) sig.add_constant(name);
  }
  return sig;
}

std::string violations_text(const std::vector<bilogic::Violation>& violations) {
  std::string out = "the model is invalid:";
  for (const auto& v : violations) out += "\n  " + v.message;
  return out;
}

void require_valid(const bilogic::Model& m, const bilogic::Signature& sig) {
  auto violations = bilogic::validate_model(m, sig);
  if (!violations.empty()) throw Failure(BL_ERR_MODEL, violations_text(violations));
}

bilogic::Environment parse_assignments(const char* const* assignments, size_t count) {
  bilogic::Environment env;
  for (size_t i = 0; i < count; ++i) {
    require(assignments[i] != nullptr, "null assignment");
    std::string text = assignments[i];
    auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == text.size()) {
      throw Failure(BL_ERR_INVALID_ARGUMENT,
                    "assignment '" + text + "' must have the form variable=element");
    }
    env[text.substr(0, eq)] = text.substr(eq + 1);
  }
  return env;
}

bilogic::TruthValue display_value(const bilogic::GridValue& v, bilogic::Logic logic) {
  return logic == bilogic::Logic::FourValued ? v.to_four_valued() : v.to_truth_value();
}

}  // namespace

extern "C" {

const char* bl_version(void) { return "1.0.0"; }

const char* bl_status_string(bl_status status) {
  switch (status) {
    case BL_OK: return "ok";
    case BL_ERR_INVALID_ARGUMENT: return "invalid argument";
    case BL_ERR_PARSE: return "parse error";
    case BL_ERR_MODEL: return "model error";
    case BL_ERR_EVAL: return "evaluation error";
    case BL_ERR_BUDGET: return "budget exceeded";
    case BL_ERR_IO: return "i/o error";
    case BL_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void bl_string_free(char* s) { delete[] s; }

bl_session* bl_session_create(void) { return new (std::nothrow) bl_session(); }

void bl_session_destroy(bl_session* session) { delete session; }

bl_status bl_session_set_mode(bl_session* s, const char* mode) {
  return guard(s, [&] {
    require(mode != nullptr, "null mode");
    s->logic = bilogic::parse_logic_name(mode);
  });
}

bl_status bl_session_set_free_logic(bl_session* s, int enabled) {
  return guard(s, [&] { s->free_logic = enabled != 0; });
}

bl_status bl_session_set_grid(bl_session* s, int grid) {
  return guard(s, [&] {
    require(grid >= 1, "the grid must be a positive integer");
    s->grid = grid;
  });
}

bl_status bl_session_set_max_size(bl_session* s, unsigned max_size) {
  return guard(s, [&] {
    require(max_size >= 1, "the maximum domain size must be at least 1");
    s->max_size = max_size;
  });
}

bl_status bl_session_set_workers(bl_session* s, unsigned workers) {
  return guard(s, [&] {
    require(workers >= 1, "the worker count must be at least 1");
    s->workers = workers;
  });
}

bl_status bl_session_set_budget(bl_session* s, uint64_t budget) {
  return guard(s, [&] { s->budget = budget; });
}

bl_status bl_session_set_profile(bl_session* s, const char* profile) {
  return guard(s, [&] {
    require(profile != nullptr, "null profile");
    s->profile = bilogic::TheoryProfile::parse(profile);
  });
}

const char* bl_last_error(const bl_session* s) { return s ? s->error.c_str() : "null session"; }

int bl_last_error_column(const bl_session* s) { return s ? s->column : 0; }

uint64_t bl_last_error_required(const bl_session* s) { return s ? s->required : 0; }

bl_status bl_formula_parse(bl_session* s, const char* text, const bl_model* context,
                           bl_formula** out) {
  return guard(s, [&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    bilogic::ParseOptions options;
    options.logic = s->logic;
    options.free_logic = s->free_logic;
    bilogic::Signature sig;
    if (context) sig = model_signature(context->model);
    *out = new bl_formula{bilogic::parse(text, sig, options), s->logic, s->free_logic};
  });
}

void bl_formula_destroy(bl_formula* formula) { delete formula; }

bl_status bl_formula_describe(bl_session* s, const bl_formula* f, char** json_out) {
  return guard(s, [&] {
    require(f != nullptr && json_out != nullptr, "null argument");
    bilogic::Formula desugared = bilogic::desugar(f->formula, f->logic, f->free_logic);
    ordered_json out;
    out["formula"] = bilogic::pretty_print(f->formula);
    out["ast"] = bilogic::dump(f->formula);
    out["desugared"] = bilogic::pretty_print(desugared);
    out["desugared_ast"] = bilogic::dump(desugared);
    ordered_json vars = ordered_json::array();
    for (const auto& v : bilogic::free_vars(f->formula)) vars.push_back(v);
    out["free_variables"] = std::move(vars);
    out["signature"] = signature_json(bilogic::collect_signature(f->formula));
    emit(out, json_out);
  });
}

bl_status bl_truth_table(bl_session* s, const bl_formula* f, char** json_out) {
  return guard(s, [&] {
    require(f != nullptr && json_out != nullptr, "null argument");
    auto table = bilogic::truth_table(f->formula, s->logic, s->grid, s->budget);
    ordered_json out;
    out["mode"] = bilogic::logic_name(table.logic);
    out["grid"] = table.logic == bilogic::Logic::Fuzzy ? ordered_json(table.grid)
                                                       : ordered_json(nullptr);
    out["atoms"] = table.atoms;
    ordered_json rows = ordered_json::array();
    for (const auto& row : table.rows) {
      ordered_json inputs = ordered_json::array();
      for (const auto& v : row.inputs) {
        inputs.push_back(bilogic::detail::value_json(display_value(v, table.logic)));
      }
      rows.push_back({{"inputs", std::move(inputs)},
                      {"value", bilogic::detail::value_json(display_value(row.value, table.logic))}});
    }
    out["rows"] = std::move(rows);
    emit(out, json_out);
  });
}

bl_status bl_model_load_file(bl_session* s, const char* path, bl_model** out) {
  return guard(s, [&] {
    require(path != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure(BL_ERR_IO, std::string("cannot open model file '") + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    *out = new bl_model{bilogic::parse_model_json(buf.str())};
  });
}

bl_status bl_model_load_json(bl_session* s, const char* json, bl_model** out) {
  return guard(s, [&] {
    require(json != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    *out = new bl_model{bilogic::parse_model_json(json)};
  });
}

bl_status bl_model_to_json(bl_session* s, const bl_model* m, char** json_out) {
  return guard(s, [&] {
    require(m != nullptr && json_out != nullptr, "null argument");
    *json_out = dup_string(bilogic::model_to_json(m->model));
  });
}

void bl_model_destroy(bl_model* model) { delete model; }

const char* bl_model_mode(const bl_model* model) {
  return model ? bilogic::logic_name(model->model.logic).data() : nullptr;
}

bl_status bl_model_validate(bl_session* s, const bl_model* m, const bl_formula* const* formulas,
                            size_t count, char** json_out, int* valid) {
  return guard(s, [&] {
    require(m != nullptr && json_out != nullptr && valid != nullptr, "null argument");
    require(count == 0 || formulas != nullptr, "null formula list");
    bilogic::Signature sig;
    for (size_t i = 0; i < count; ++i) {
      require(formulas[i] != nullptr, "null formula");
      sig.merge(bilogic::collect_signature(formulas[i]->formula));
    }
    bilogic::ValidationOptions options;
    if (s->profile) options.profile = *s->profile;
    auto violations = bilogic::validate_model(m->model, sig, options);
    ordered_json out = ordered_json::array();
    for (const auto& v : violations) {
      ordered_json entry;
      entry["kind"] = bilogic::violation_kind_name(v.kind);
      entry["message"] = v.message;
      entry["symbol"] = v.symbol;
      entry["tuple"] = tuple_json(v.tuple);
      entry["axiom"] = v.axiom ? ordered_json(bilogic::axiom_name(*v.axiom)) : ordered_json(nullptr);
      out.push_back(std::move(entry));
    }
    *valid = violations.empty() ? 1 : 0;
    emit(out, json_out);
  });
}

bl_status bl_eval(bl_session* s, const bl_model* m, const bl_formula* f,
                  const char* const* assignments, size_t count, char** json_out) {
  return guard(s, [&] {
    require(m != nullptr && f != nullptr && json_out != nullptr, "null argument");
    require(count == 0 || assignments != nullptr, "null assignment list");
    require_valid(m->model, bilogic::collect_signature(f->formula));
    bilogic::Environment env = parse_assignments(assignments, count);
    bilogic::TruthValue v = bilogic::eval(m->model, env, f->formula);
    ordered_json out = valued_json(v);
    bilogic::Environment used;
    for (const auto& var : bilogic::free_vars(f->formula)) used[var] = env.at(var);
    out["environment"] = bilogic::detail::environment_json(used);
    emit(out, json_out);
  });
}

bl_status bl_eval_all(bl_session* s, const bl_model* m, const bl_formula* f, char** json_out) {
  return guard(s, [&] {
    require(m != nullptr && f != nullptr && json_out != nullptr, "null argument");
    require_valid(m->model, bilogic::collect_signature(f->formula));
    ordered_json out;
    ordered_json vars = ordered_json::array();
    for (const auto& v : bilogic::free_vars(f->formula)) vars.push_back(v);
    out["free_variables"] = std::move(vars);
    ordered_json results = ordered_json::array();
    for (const auto& [env, value] : bilogic::eval_all_environments(m->model, f->formula)) {
      ordered_json entry;
      entry["environment"] = bilogic::detail::environment_json(env);
      ordered_json valued = valued_json(value);
      for (auto& [key, item] : valued.items()) entry[key] = item;
      results.push_back(std::move(entry));
    }
    out["results"] = std::move(results);
    emit(out, json_out);
  });
}

bl_status bl_check_theory(bl_session* s, const bl_model* m, char** json_out, int* all_pass) {
  return guard(s, [&] {
    require(m != nullptr && json_out != nullptr && all_pass != nullptr, "null argument");
    const bilogic::Model& model = m->model;
    if (!model.has_existence()) {
      throw Failure(BL_ERR_INVALID_ARGUMENT,
                    "theory checking needs the existence predicate E! in the model");
    }
    auto structural = bilogic::structural_violations(model);
    if (!structural.empty()) throw Failure(BL_ERR_MODEL, violations_text(structural));

    bilogic::TheoryProfile profile = s->profile.value_or(bilogic::TheoryProfile::all());
    auto interpretation = bilogic::interpret(model);
    ordered_json schemas = ordered_json::array();
    bool pass = true;
    for (auto axiom : {bilogic::Axiom::Existence, bilogic::Axiom::Normality,
                       bilogic::Axiom::Noncontradiction}) {
      if (!profile.contains(axiom)) continue;
      auto failures = bilogic::axiom_failures(interpretation, axiom);
      ordered_json list = ordered_json::array();
      for (const auto& f : failures) {
        list.push_back({{"predicate", f.predicate}, {"tuple", tuple_json(f.tuple)}});
      }
      pass = pass && failures.empty();
      schemas.push_back(
          {{"axiom", bilogic::axiom_name(axiom)}, {"pass", failures.empty()}, {"failures", list}});
    }
    ordered_json out;
    out["mode"] = bilogic::logic_name(model.logic);
    out["profile"] = profile.to_string();
    out["schemas"] = std::move(schemas);
    out["existence_normal_not_bivalent"] = bilogic::existence_normal_not_bivalent(model);
    out["all_pass"] = pass;
    *all_pass = pass ? 1 : 0;
    emit(out, json_out);
  });
}

bl_status bl_entail(bl_session* s, const bl_formula* const* premises, size_t count,
                    const bl_formula* conclusion, char** verdict_json, int* holds,
                    bl_model** witness_out) {
  return guard(s, [&] {
    require(conclusion != nullptr && verdict_json != nullptr && holds != nullptr,
            "null argument");
    require(count == 0 || premises != nullptr, "null premise list");
    if (witness_out) *witness_out = nullptr;
    bilogic::EntailmentQuery q;
    for (size_t i = 0; i < count; ++i) {
      require(premises[i] != nullptr, "null premise");
      q.premises.push_back(premises[i]->formula);
    }
    q.conclusion = conclusion->formula;
    q.logic = s->logic;
    q.free_logic = s->free_logic;
    q.max_domain_size = s->max_size;
    q.grid = s->grid;
    q.profile = s->profile.value_or(bilogic::TheoryProfile{});
    q.workers = s->workers;
    q.budget = s->budget;
    bilogic::Verdict v = bilogic::entails(q);
    *verdict_json = dup_string(bilogic::verdict_to_json(v));
    *holds = v.holds() ? 1 : 0;
    if (witness_out && v.witness) *witness_out = new bl_model{*v.witness};
  });
}

}  // extern "C"
