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

// Exercises the shared library through its C header only.

#include <memory>
#include <string>
#include <vector>

#include "bilogic/bilogic.h"
#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct SessionDeleter {
  void operator()(bl_session* s) const { bl_session_destroy(s); }
};
struct FormulaDeleter {
  void operator()(bl_formula* f) const { bl_formula_destroy(f); }
};
struct ModelDeleter {
  void operator()(bl_model* m) const { bl_model_destroy(m); }
};
using Session = std::unique_ptr<bl_session, SessionDeleter>;
using FormulaPtr = std::unique_ptr<bl_formula, FormulaDeleter>;
using ModelPtr = std::unique_ptr<bl_model, ModelDeleter>;

json take(char* raw) {
  REQUIRE(raw != nullptr);
  json out = json::parse(raw);
  bl_string_free(raw);
  return out;
}

FormulaPtr formula(bl_session* s, const char* text, const bl_model* context = nullptr) {
  bl_formula* f = nullptr;
  REQUIRE(bl_formula_parse(s, text, context, &f) == BL_OK);
  return FormulaPtr(f);
}

ModelPtr model(bl_session* s, const char* text) {
  bl_model* m = nullptr;
  REQUIRE(bl_model_load_json(s, text, &m) == BL_OK);
  return ModelPtr(m);
}

const char* kModel = R"({
  "mode": "bd4",
  "domain": ["a", "b"],
  "constants": {"c": "a"},
  "predicates": {
    "P": {"arity": 1, "map": {"a": "B"}, "default": "N"},
    "E!": {"arity": 1, "map": {"a": "T"}, "default": "F"}
  }
})";

}  // namespace

TEST_CASE("version and status strings") {
  CHECK(std::string(bl_version()) == "1.0.0");
  CHECK(std::string(bl_status_string(BL_OK)) == "ok");
  CHECK(std::string(bl_status_string(BL_ERR_BUDGET)).size() > 0);
}

TEST_CASE("session options") {
  Session s(bl_session_create());
  REQUIRE(s);
  CHECK(bl_session_set_mode(s.get(), "lbd") == BL_OK);
  CHECK(bl_session_set_mode(s.get(), "x") == BL_ERR_INVALID_ARGUMENT);
  CHECK(std::string(bl_last_error(s.get())).find("x") != std::string::npos);
  CHECK(bl_session_set_grid(s.get(), 0) == BL_ERR_INVALID_ARGUMENT);
  CHECK(bl_session_set_max_size(s.get(), 0) == BL_ERR_INVALID_ARGUMENT);
  CHECK(bl_session_set_workers(s.get(), 0) == BL_ERR_INVALID_ARGUMENT);
  CHECK(bl_session_set_profile(s.get(), "existence,normality") == BL_OK);
  CHECK(bl_session_set_profile(s.get(), "bogus") == BL_ERR_INVALID_ARGUMENT);
  CHECK(bl_session_set_mode(nullptr, "bd4") == BL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("parsing and describing formulas") {
  Session s(bl_session_create());
  auto f = formula(s.get(), "forall x. P(x)");
  char* raw = nullptr;
  REQUIRE(bl_formula_describe(s.get(), f.get(), &raw) == BL_OK);
  json d = take(raw);
  CHECK(d["ast"] == "InnerForall(x, Atom P(x))");
  CHECK(d["desugared"] == "Pi x. ~E!(x) | P(x)");
  CHECK(d["free_variables"].empty());
  CHECK(d["signature"]["predicates"]["E!"] == 1);

  bl_formula* bad = nullptr;
  CHECK(bl_formula_parse(s.get(), "P(c", nullptr, &bad) == BL_ERR_PARSE);
  CHECK(bad == nullptr);
  CHECK(bl_last_error_column(s.get()) == 4);
  CHECK(bl_formula_parse(s.get(), "p && q", nullptr, &bad) == BL_ERR_PARSE);
  CHECK(bl_last_error_column(s.get()) == 3);
  REQUIRE(bl_session_set_mode(s.get(), "lbd") == BL_OK);
  CHECK(bl_formula_parse(s.get(), "p && q", nullptr, &bad) == BL_OK);
  bl_formula_destroy(bad);
}

TEST_CASE("truth tables") {
  Session s(bl_session_create());
  auto f = formula(s.get(), "%p");
  char* raw = nullptr;
  REQUIRE(bl_truth_table(s.get(), f.get(), &raw) == BL_OK);
  json t = take(raw);
  std::string column;
  for (const auto& r : t["rows"]) column += r["value"].get<std::string>();
  CHECK(column == "TFFT");

  REQUIRE(bl_session_set_mode(s.get(), "lbd") == BL_OK);
  REQUIRE(bl_session_set_grid(s.get(), 2) == BL_OK);
  auto p = formula(s.get(), "p");
  REQUIRE(bl_truth_table(s.get(), p.get(), &raw) == BL_OK);
  t = take(raw);
  CHECK(t["rows"].size() == 9);
  CHECK(t["rows"][0]["value"] == "T");
  CHECK(t["rows"][1]["value"] == json::array({1.0, 0.5}));

  auto q = formula(s.get(), "forall x. P(x)");
  CHECK(bl_truth_table(s.get(), q.get(), &raw) == BL_ERR_EVAL);
}

TEST_CASE("models and evaluation") {
  Session s(bl_session_create());
  auto m = model(s.get(), kModel);
  CHECK(std::string(bl_model_mode(m.get())) == "bd4");

  auto f = formula(s.get(), "E!(c) & P(c)", m.get());
  char* raw = nullptr;
  REQUIRE(bl_eval(s.get(), m.get(), f.get(), nullptr, 0, &raw) == BL_OK);
  json v = take(raw);
  CHECK(v["value"] == "B");
  CHECK(v["designated"] == true);
  CHECK(v["glutty"] == true);

  auto open = formula(s.get(), "P(x)", m.get());
  CHECK(bl_eval(s.get(), m.get(), open.get(), nullptr, 0, &raw) == BL_ERR_EVAL);
  const char* assign[] = {"x=b"};
  REQUIRE(bl_eval(s.get(), m.get(), open.get(), assign, 1, &raw) == BL_OK);
  CHECK(take(raw)["value"] == "N");
  const char* bad_assign[] = {"x"};
  CHECK(bl_eval(s.get(), m.get(), open.get(), bad_assign, 1, &raw) == BL_ERR_INVALID_ARGUMENT);

  REQUIRE(bl_eval_all(s.get(), m.get(), open.get(), &raw) == BL_OK);
  json all = take(raw);
  CHECK(all["results"].size() == 2);

  auto missing = formula(s.get(), "Q(c)");
  CHECK(bl_eval(s.get(), m.get(), missing.get(), nullptr, 0, &raw) == BL_ERR_MODEL);

  REQUIRE(bl_model_to_json(s.get(), m.get(), &raw) == BL_OK);
  json doc = take(raw);
  CHECK(doc["predicates"]["P"]["map"]["a"] == "B");

  bl_model* broken = nullptr;
  CHECK(bl_model_load_json(s.get(), "{\"mode\": 1}", &broken) == BL_ERR_MODEL);
  CHECK(bl_model_load_file(s.get(), "/nonexistent/model.json", &broken) == BL_ERR_IO);
}

TEST_CASE("validation and theory checks") {
  Session s(bl_session_create());
  auto m = model(s.get(), kModel);
  auto f = formula(s.get(), "P(d)");
  const bl_formula* fs[] = {f.get()};
  char* raw = nullptr;
  int valid = 1;
  REQUIRE(bl_model_validate(s.get(), m.get(), fs, 1, &raw, &valid) == BL_OK);
  CHECK(valid == 0);
  CHECK(take(raw)[0]["kind"] == "missing_constant");

  int pass = 1;
  REQUIRE(bl_check_theory(s.get(), m.get(), &raw, &pass) == BL_OK);
  json report = take(raw);
  CHECK(pass == 0);
  CHECK(report["all_pass"] == false);
  REQUIRE(bl_session_set_profile(s.get(), "existence") == BL_OK);
  REQUIRE(bl_check_theory(s.get(), m.get(), &raw, &pass) == BL_OK);
  take(raw);
  CHECK(pass == 1);

  auto no_e = model(s.get(), R"({"mode": "bd4", "domain": ["a"], "predicates": {}})");
  CHECK(bl_check_theory(s.get(), no_e.get(), &raw, &pass) == BL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("entailment") {
  Session s(bl_session_create());
  auto premise = formula(s.get(), "forall x. P(x)");
  auto conclusion = formula(s.get(), "P(c)");
  const bl_formula* premises[] = {premise.get()};
  char* raw = nullptr;
  int holds = -1;
  bl_model* witness = nullptr;
  REQUIRE(bl_entail(s.get(), premises, 1, conclusion.get(), &raw, &holds, &witness) == BL_OK);
  json v = take(raw);
  CHECK(holds == 0);
  CHECK(v["outcome"] == "countermodel");
  REQUIRE(witness != nullptr);
  ModelPtr w(witness);
  REQUIRE(bl_eval(s.get(), w.get(), conclusion.get(), nullptr, 0, &raw) == BL_OK);
  CHECK(take(raw)["designated"] == false);

  auto exists = formula(s.get(), "E!(c)");
  const bl_formula* both[] = {exists.get(), premise.get()};
  REQUIRE(bl_entail(s.get(), both, 2, conclusion.get(), &raw, &holds, nullptr) == BL_OK);
  CHECK(take(raw)["bound"] == 3);
  CHECK(holds == 1);

  REQUIRE(bl_session_set_budget(s.get(), 10) == BL_OK);
  CHECK(bl_entail(s.get(), both, 2, conclusion.get(), &raw, &holds, nullptr) == BL_ERR_BUDGET);
  CHECK(bl_last_error_required(s.get()) > 10);

  REQUIRE(bl_session_set_budget(s.get(), 1000000) == BL_OK);
  REQUIRE(bl_session_set_free_logic(s.get(), 0) == BL_OK);
  CHECK(bl_entail(s.get(), premises, 1, conclusion.get(), &raw, &holds, nullptr) == BL_ERR_PARSE);
}
