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

#include "bilogic/model_io.hpp"
#include "bilogic/semantics.hpp"
#include "doctest.h"

using namespace bilogic;

namespace {

PredicateInterpretation unary(std::map<std::string, TruthValue> map, TruthValue def) {
  PredicateInterpretation p;
  p.arity = 1;
  for (auto& [e, v] : map) p.values[{e}] = v;
  p.default_value = def;
  return p;
}

Model two_element(TruthValue pa, TruthValue pb, TruthValue ea = kTrue, TruthValue eb = kTrue) {
  Model m;
  m.domain = {"a", "b"};
  m.constants["c"] = "a";
  m.predicates["P"] = unary({{"a", pa}, {"b", pb}}, kNeither);
  m.predicates["E!"] = unary({{"a", ea}, {"b", eb}}, kFalse);
  return m;
}

TruthValue ev(const Model& m, std::string_view text, const Environment& env = {}) {
  ParseOptions o;
  o.logic = m.logic;
  return eval(m, env, parse(text, o));
}

bool has_kind(const std::vector<Violation>& vs, ViolationKind k) {
  for (const auto& v : vs) {
    if (v.kind == k) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("evaluation examples") {
  Model m = two_element(kBoth, kNeither);
  CHECK(ev(m, "P(c)") == kBoth);
  CHECK(ev(two_element(kTrue, kBoth), "Pi x. P(x)") == kBoth);
  CHECK(ev(m, "E!(c) & P(c)") == kBoth);

  Model empty_inner = two_element(kFalse, kFalse, kFalse, kFalse);
  CHECK(ev(empty_inner, "forall x. P(x)") == kTrue);
  CHECK(ev(empty_inner, "exists x. P(x)") == kFalse);
  CHECK(ev(empty_inner, "Sigma x. ~E!(x)") == kTrue);

  Model partial = two_element(kTrue, kFalse, kTrue, kFalse);
  CHECK(ev(partial, "forall x. P(x)") == kTrue);   // b does not exist
  CHECK(ev(partial, "Pi x. P(x)") == kFalse);      // outer quantifier sees b
  CHECK(ev(partial, "exists x. ~P(x)") == kFalse);
  CHECK(ev(partial, "Sigma x. ~P(x)") == kTrue);
  CHECK(ev(partial, "P(x)", {{"x", "b"}}) == kFalse);
}

TEST_CASE("evaluation errors") {
  Model m = two_element(kBoth, kNeither);
  CHECK_THROWS_AS(ev(m, "P(x)"), EvalError);
  CHECK_THROWS_AS(ev(m, "P(x)", {{"x", "zz"}}), EvalError);
  ParseOptions fz;
  fz.logic = Logic::Fuzzy;
  CHECK_THROWS_AS(eval(m, {}, parse("P(c) && P(c)", fz)), EvalError);
  Model no_e = m;
  no_e.predicates.erase("E!");
  CHECK_THROWS_AS(ev(no_e, "forall x. P(x)"), EvalError);
  CHECK_THROWS_AS(ev(m, "Q(c)"), EvalError);
}

TEST_CASE("all environments") {
  Model m = two_element(kBoth, kNeither);
  CHECK(eval_all_environments(m, parse("P(c)")).size() == 1);
  auto rows = eval_all_environments(m, parse("P(x)"));
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].first.at("x") == "a");
  CHECK(rows[0].second == kBoth);
  CHECK(rows[1].second == kNeither);
  Model three;
  three.domain = {"a", "b", "c"};
  PredicateInterpretation r;
  r.arity = 2;
  r.default_value = kTrue;
  three.predicates["R"] = r;
  auto nine = eval_all_environments(three, parse("R(x,y)"));
  CHECK(nine.size() == 9);
  CHECK(nine[1].first == Environment{{"x", "a"}, {"y", "b"}});
}

TEST_CASE("inner domain") {
  CHECK(inner_domain(two_element(kNeither, kNeither, kTrue, kFalse)) ==
        std::vector<std::string>{"a"});
  CHECK(inner_domain(two_element(kNeither, kNeither)) == std::vector<std::string>{"a", "b"});
  CHECK(inner_domain(two_element(kNeither, kNeither, kFalse, kFalse)).empty());
}

TEST_CASE("existence axiom") {
  CHECK(check_existence_axiom(two_element(kBoth, kBoth, kTrue, kFalse)));
  CHECK_FALSE(check_existence_axiom(two_element(kTrue, kTrue, kBoth, kTrue)));
  auto failures = axiom_failures(two_element(kTrue, kTrue, kTrue, kNeither), Axiom::Existence);
  REQUIRE(failures.size() == 1);
  CHECK(failures[0] == AxiomFailure{"E!", {"b"}});

  Model fuzzy = two_element(kTrue, kTrue);
  fuzzy.logic = Logic::Fuzzy;
  for (auto& [name, p] : fuzzy.predicates) {
    p.default_value = p.default_value.to_fuzzy();
    for (auto& [t, v] : p.values) v = v.to_fuzzy();
  }
  fuzzy.predicates["E!"].values[{"a"}] = TruthValue::fuzzy(0.6, 0.4);
  CHECK_FALSE(check_existence_axiom(fuzzy));
  CHECK(existence_normal_not_bivalent(fuzzy) == std::vector<std::string>{"a"});
  CHECK(existence_normal_not_bivalent(two_element(kTrue, kTrue)).empty());
}

TEST_CASE("normality axiom") {
  CHECK(check_normality_axiom(two_element(kTrue, kFalse)));
  CHECK(check_normality_axiom(two_element(kTrue, kNeither, kTrue, kFalse)));  // b outside D1
  CHECK_FALSE(check_normality_axiom(two_element(kBoth, kTrue)));
  auto failures = axiom_failures(two_element(kTrue, kNeither), Axiom::Normality);
  REQUIRE(failures.size() == 1);
  CHECK(failures[0] == AxiomFailure{"P", {"b"}});
}

TEST_CASE("noncontradiction axiom") {
  CHECK(check_noncontradiction_axiom(two_element(kTrue, kNeither)));
  CHECK(check_noncontradiction_axiom(two_element(kFalse, kNeither)));
  CHECK_FALSE(check_noncontradiction_axiom(two_element(kBoth, kTrue)));
  CHECK(check_noncontradiction_axiom(two_element(kBoth, kBoth, kFalse, kFalse)));
}

TEST_CASE("theory profiles") {
  CHECK(TheoryProfile::parse("existence,normality") == TheoryProfile{true, true, false});
  CHECK(TheoryProfile::parse("all") == TheoryProfile::all());
  CHECK(TheoryProfile::parse("").empty());
  CHECK(TheoryProfile::parse("none").empty());
  CHECK_THROWS_AS(TheoryProfile::parse("bogus"), std::invalid_argument);
  CHECK(TheoryProfile::all().to_string() == "existence,normality,noncontradiction");
}

TEST_CASE("validation") {
  Model good = two_element(kTrue, kFalse);
  Signature sig = collect_signature(parse("P(c) & E!(c)"));
  CHECK(validate_model(good, sig).empty());

  Model outside = good;
  outside.constants["c"] = "zz";
  auto vs = validate_model(outside, sig);
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].kind == ViolationKind::ConstantOutsideDomain);

  Model strict = two_element(kTrue, kFalse, kNeither, kTrue);
  ValidationOptions options;
  options.profile = TheoryProfile::all();
  vs = validate_model(strict, sig, options);
  REQUIRE_FALSE(vs.empty());
  CHECK(vs[0].kind == ViolationKind::AxiomFailure);
  CHECK(vs[0].axiom == Axiom::Existence);
  CHECK(vs[0].tuple == std::vector<std::string>{"a"});

  CHECK(has_kind(validate_model(good, collect_signature(parse("Q(c)"))),
                 ViolationKind::MissingPredicate));
  CHECK(has_kind(validate_model(good, collect_signature(parse("P(d)"))),
                 ViolationKind::MissingConstant));
  CHECK(has_kind(validate_model(good, collect_signature(parse("P(c,c)"))),
                 ViolationKind::ArityMismatch));

  Model bad = good;
  bad.domain.push_back("a");
  bad.predicates["P"].values[{"a", "b"}] = kTrue;
  bad.predicates["Q"] = unary({{"a", TruthValue::fuzzy(0.5, 0.5)}}, kTrue);
  bad.predicates["c"] = unary({}, kTrue);
  auto structural = structural_violations(bad);
  CHECK(has_kind(structural, ViolationKind::DuplicateElement));
  CHECK(has_kind(structural, ViolationKind::BadTuple));
  CHECK(has_kind(structural, ViolationKind::CarrierMismatch));
  CHECK(has_kind(structural, ViolationKind::SymbolClash));
  CHECK_THROWS_AS(interpret(bad), ModelError);

  Model none;
  CHECK(has_kind(structural_violations(none), ViolationKind::EmptyDomain));
}

TEST_CASE("interpretations round-trip through documents") {
  Model m = two_element(kBoth, kNeither, kTrue, kFalse);
  Model back = to_model(interpret(m));
  CHECK(eval_all_environments(back, parse("P(x) & E!(x)")) ==
        eval_all_environments(m, parse("P(x) & E!(x)")));
  // defaults become the most frequent value
  Model uniform = two_element(kTrue, kTrue);
  Model doc = to_model(interpret(uniform));
  CHECK(doc.predicates.at("P").default_value == kTrue);
  CHECK(doc.predicates.at("P").values.empty());
}

TEST_CASE("model files") {
  const char* text = R"({
    "mode": "lbd",
    "domain": ["a", "b"],
    "constants": {"c": "a"},
    "predicates": {
      "P": {"arity": 1, "map": {"a": "T", "b": [0.7, 0.5]}, "default": "N"},
      "R": {"arity": 2, "map": {"a,b": "B"}, "default": [0, 1]},
      "q": {"arity": 0, "map": {"": [0.25, 0.5]}, "default": "F"},
      "E!": {"arity": 1, "map": {"a": "T"}, "default": "F"}
    }
  })";
  Model m = parse_model_json(text);
  CHECK(m.logic == Logic::Fuzzy);
  CHECK(m.domain == std::vector<std::string>{"a", "b"});
  CHECK(m.predicates.at("R").values.at({"a", "b"}) == kBoth.to_fuzzy());
  CHECK(m.predicates.at("R").default_value == kFalse.to_fuzzy());
  CHECK(ev(m, "q") == TruthValue::fuzzy(0.25, 0.5));
  CHECK(ev(m, "P(x)", {{"x", "b"}}) == TruthValue::fuzzy(0.7, 0.5));
  CHECK(parse_model_json(model_to_json(m)) == m);
  CHECK(model_to_json(m) == model_to_json(parse_model_json(model_to_json(m))));

  CHECK_THROWS_AS(parse_model_json("{"), ModelError);
  CHECK_THROWS_AS(parse_model_json(R"({"domain": ["a"]})"), ModelError);
  CHECK_THROWS_AS(parse_model_json(R"({"mode": "x", "domain": ["a"]})"), ModelError);
  CHECK_THROWS_AS(
      parse_model_json(R"({"mode": "bd4", "domain": ["a"], "predicates": {"P": {"arity": 1}}})"),
      ModelError);
  CHECK_THROWS_AS(parse_model_json(R"({"mode": "bd4", "domain": ["a"], "predicates":
      {"P": {"arity": 1, "default": "Q"}}})"),
                  ModelError);
  CHECK_THROWS_AS(parse_model_json(R"({"mode": "bd4", "domain": ["a"], "predicates":
      {"P": {"arity": 1, "default": [2, 0]}}})"),
                  ModelError);
  CHECK_THROWS_AS(parse_model_json(R"({"mode": "bd4", "domain": ["a,b"]})"), ModelError);

  Model fuzzy_in_bd4 = parse_model_json(R"({"mode": "bd4", "domain": ["a"], "predicates":
      {"P": {"arity": 1, "default": [0.5, 0.5]}}})");
  CHECK(has_kind(structural_violations(fuzzy_in_bd4), ViolationKind::CarrierMismatch));
  Model corner_array = parse_model_json(R"({"mode": "bd4", "domain": ["a"], "predicates":
      {"P": {"arity": 1, "default": [1, 1]}}})");
  CHECK(corner_array.predicates.at("P").default_value == kBoth);
}

TEST_CASE("exact grid interpretation") {
  Model m = parse_model_json(R"({"mode": "lbd", "domain": ["a"], "predicates":
      {"P": {"arity": 1, "default": [0.3, 0.6]}}})");
  auto g = interpret_on_grid(m, 10);
  CHECK(g.value_at(0, 0) == GridValue(3, 6, 10));
  CHECK_THROWS_AS(interpret_on_grid(m, 4), ModelError);
  ParseOptions o;
  o.logic = Logic::Fuzzy;
  CHECK(evaluate(g, {{"x", "a"}}, parse("P(x) && P(x)", o)) == GridValue(0, 10, 10));
}
