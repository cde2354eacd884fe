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

#include "bilogic/syntax.hpp"
#include "doctest.h"
#include "support/reference.hpp"

using namespace bilogic;

namespace {

ParseOptions fuzzy() {
  ParseOptions o;
  o.logic = Logic::Fuzzy;
  return o;
}

int error_column(std::string_view text, const ParseOptions& options = {}) {
  try {
    parse(text, options);
  } catch (const ParseError& e) {
    return e.column();
  }
  return 0;
}

std::set<std::string> vars(std::string_view text) { return free_vars(parse(text)); }

}  // namespace

TEST_CASE("parse produces the expected trees") {
  CHECK(dump(parse("P(c) & ~Q(c)")) == "WeakAnd(Atom P(c), Neg(Atom Q(c)))");
  CHECK(dump(parse("forall x. P(x)")) == "InnerForall(x, Atom P(x))");
  CHECK(dump(parse("Pi x. Sigma y. R(x,y)")) ==
        "OuterForall(x, OuterExists(y, Atom R(x,y)))");
  CHECK(dump(parse("p")) == "Atom p");
  CHECK(dump(parse("#p | !q => %r")) ==
        "Implies(WeakOr(BdDelta(Atom p), BivalentNeg(Atom q)), Circ(Atom r))");
  CHECK(dump(parse("p && q || @r", fuzzy())) ==
        "StrongOr(StrongAnd(Atom p, Atom q), BaazDelta(Atom r))");
}

TEST_CASE("precedence and associativity") {
  CHECK(parse("p | q & r") == parse("p | (q & r)"));
  CHECK(parse("p => q => r") == parse("p => (q => r)"));
  CHECK(parse("p & q & r") == parse("(p & q) & r"));
  CHECK(parse("p | q || r", fuzzy()) == parse("p | (q || r)", fuzzy()));
  CHECK(parse("p & q && r", fuzzy()) == parse("p & (q && r)", fuzzy()));
  CHECK(parse("~p & q") == parse("(~p) & q"));
  // a quantifier's scope extends as far right as possible
  CHECK(parse("forall x. P(x) & Q(x)") == parse("forall x. (P(x) & Q(x))"));
}

TEST_CASE("unicode glyphs") {
  CHECK(parse("∼P(c) ∧ ▲Q(c)") == parse("~P(c) & #Q(c)"));
  CHECK(parse("¬p ∨ ∘q → p") == parse("!p | %q => p"));
  CHECK(parse("∀x. ∃y. Πz. Σw. R(x,y,z,w)") ==
        parse("forall x. exists y. Pi z. Sigma w. R(x,y,z,w)"));
  CHECK(parse("p ⊗ q ⊕ Δr", fuzzy()) == parse("p && q || @r", fuzzy()));
}

TEST_CASE("parse errors carry a column") {
  CHECK(error_column("P(c") == 4);
  CHECK(error_column("p & ") == 5);
  CHECK(error_column("p )") == 3);
  CHECK(error_column("p && q") == 3);  // fuzzy-only connective in bd4
  CHECK(error_column("∼p && q") == 4);  // columns count code points
  CHECK(error_column("P(c) & P(c,d)") != 0);  // inconsistent arity
  CHECK(error_column("P(P)") != 0);
  CHECK(error_column("forall . P(x)") != 0);
  CHECK(error_column("p $ q") == 3);
}

TEST_CASE("signature-aware parsing") {
  Signature sig;
  sig.add_predicate("P", 1);
  sig.add_constant("x");
  CHECK(parse("P(x)", sig, {}).terms()[0].kind == Term::Kind::Constant);
  CHECK_THROWS_AS(parse("P(a,b)", sig, {}), ParseError);
  ParseOptions strict;
  strict.strict = true;
  CHECK_THROWS_AS(parse("Q(x)", sig, strict), ParseError);
  CHECK_THROWS_AS(parse("E!(x,x)", sig, {}), ParseError);
  ParseOptions declared;
  declared.free_variables = {"a"};
  CHECK(parse("P(a)", Signature{}, declared).terms()[0].is_variable());
}

TEST_CASE("free variables") {
  CHECK(vars("P(x,c)") == std::set<std::string>{"x"});
  CHECK(vars("Pi x. P(x,y)") == std::set<std::string>{"y"});
  CHECK(vars("forall x. (P(x) & Q(x))").empty());
  CHECK(vars("P(x) & forall x. Q(x)") == std::set<std::string>{"x"});
  CHECK(is_sentence(parse("Sigma x. P(x)")));
  CHECK(looks_like_variable("x"));
  CHECK(looks_like_variable("y12"));
  CHECK(looks_like_variable("z_1"));
  CHECK_FALSE(looks_like_variable("c"));
  CHECK_FALSE(looks_like_variable("xs"));
}

TEST_CASE("desugaring") {
  SUBCASE("bivalent negation") {
    CHECK(dump(desugar(parse("!p"), Logic::FourValued)) == "Neg(BdDelta(Atom p))");
  }
  SUBCASE("inner existential") {
    CHECK(dump(desugar(parse("exists x. P(x)"), Logic::FourValued)) ==
          "OuterExists(x, WeakAnd(Atom E!(x), Atom P(x)))");
    CHECK(dump(desugar(parse("exists x. P(x)"), Logic::Fuzzy)) ==
          "OuterExists(x, WeakAnd(Atom E!(x), Atom P(x)))");
  }
  SUBCASE("inner universal") {
    CHECK(pretty_print(desugar(parse("forall x. P(x)"), Logic::FourValued)) ==
          "Pi x. ~E!(x) | P(x)");
    CHECK(dump(desugar(parse("forall x. P(x)", fuzzy()), Logic::Fuzzy)) ==
          "OuterForall(x, StrongOr(Neg(Atom E!(x)), Atom P(x)))");
  }
  SUBCASE("implication per logic") {
    CHECK(dump(desugar(parse("p => q"), Logic::FourValued)) == "WeakOr(Neg(Atom p), Atom q)");
    CHECK(dump(desugar(parse("p => q"), Logic::Fuzzy)) == "StrongOr(Neg(Atom p), Atom q)");
  }
  SUBCASE("normality indicator per logic") {
    CHECK(dump(desugar(parse("%p"), Logic::FourValued)) ==
          "WeakAnd(WeakOr(BdDelta(Atom p), BdDelta(Neg(Atom p))), "
          "WeakOr(Neg(BdDelta(Atom p)), Neg(BdDelta(Neg(Atom p)))))");
    CHECK(dump(desugar(parse("%p"), Logic::Fuzzy)) ==
          "StrongAnd(StrongOr(BdDelta(Atom p), BdDelta(Neg(Atom p))), "
          "StrongOr(Neg(BdDelta(Atom p)), Neg(BdDelta(Neg(Atom p)))))");
  }
  SUBCASE("closure properties") {
    auto f = desugar(parse("forall x. (!P(x) => exists y. %R(x,y))"), Logic::Fuzzy);
    CHECK(is_desugared(f));
    CHECK_FALSE(contains_inner_quantifier(f));
    CHECK(desugar(f, Logic::Fuzzy) == f);
  }
  SUBCASE("inner quantifiers need free logic") {
    CHECK_THROWS_AS(desugar(parse("forall x. P(x)"), Logic::FourValued, false), SignatureError);
  }
}

TEST_CASE("pretty printing") {
  using K = NodeKind;
  auto A = Formula::atom("A");
  auto B = Formula::atom("B");
  auto C = Formula::atom("C");
  CHECK(pretty_print(Formula::binary(K::WeakAnd, A, Formula::binary(K::WeakOr, B, C))) ==
        "A & (B | C)");
  CHECK(pretty_print(Formula::unary(K::Neg, Formula::unary(K::Neg, A))) == "~~A");
  auto px = Formula::atom("P", {Term::variable("x")});
  auto qx = Formula::atom("Q", {Term::variable("x")});
  CHECK(pretty_print(Formula::quantifier(K::InnerForall, "x", Formula::binary(K::Implies, px, qx))) ==
        "forall x. P(x) => Q(x)");
  CHECK(pretty_print(parse("(forall x. P(x)) & Q(c)")) == "(forall x. P(x)) & Q(c)");
  CHECK(pretty_print(parse("(p => q) => r")) == "(p => q) => r");
  CHECK(pretty_print(parse("~(p & q)")) == "~(p & q)");
}

TEST_CASE("pretty printing round-trips random formulas") {
  ref::Rng rng(7);
  for (bool fz : {false, true}) {
    ref::FormulaSpec spec;
    spec.sig.predicates = {{"P", 1}, {"R", 2}, {"q", 0}};
    spec.sig.constants = {"c", "d"};
    spec.fuzzy = fz;
    spec.free = {"x"};
    spec.max_depth = 5;
    ParseOptions options;
    options.logic = fz ? Logic::Fuzzy : Logic::FourValued;
    for (int i = 0; i < 500; ++i) {
      auto f = ref::random_formula(rng, spec);
      auto text = pretty_print(f);
      INFO(text);
      CHECK(parse(text, options) == f);
    }
  }
}

TEST_CASE("signature collection") {
  auto sig = collect_signature(parse("P(c) & Q(c,d)"));
  CHECK(sig.arity("P") == 1);
  CHECK(sig.arity("Q") == 2);
  CHECK(sig.constants() == std::set<std::string, std::less<>>{"c", "d"});
  auto inner = collect_signature(parse("forall x. P(x)"));
  CHECK(inner.has_existence());
  CHECK(inner.constants().empty());
  auto open = collect_signature(parse("P(x)"));
  CHECK(open.constants().empty());
  Signature a;
  a.add_predicate("P", 1);
  Signature b;
  b.add_predicate("P", 2);
  CHECK_THROWS_AS(a.merge(b), SignatureError);
  Signature c;
  c.add_constant("P");
  CHECK_THROWS_AS(a.merge(c), SignatureError);
}
