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

#include <cmath>

#include "bilogic/values.hpp"
#include "doctest.h"
#include "support/reference.hpp"

using namespace bilogic;

namespace {

TruthValue fz(double p, double n) { return TruthValue::fuzzy(p, n); }

bool near(const TruthValue& a, double p, double n) {
  return std::abs(a.pos() - p) < 1e-12 && std::abs(a.neg() - n) < 1e-12;
}

TruthValue corner(ref::V v) { return TruthValue::four_valued(v.p == 1, v.n == 1); }

ref::V as_ref(const GridValue& v) { return {v.pos(), v.neg()}; }

}  // namespace

TEST_CASE("carriers and construction") {
  CHECK(kTrue.pos() == 1);
  CHECK(kTrue.neg() == 0);
  CHECK(kBoth.is_corner());
  CHECK(TruthValue{} == kNeither);
  CHECK_THROWS_AS(fz(1.2, 0), CarrierError);
  CHECK_THROWS_AS(fz(0.5, -0.1), CarrierError);
  CHECK_THROWS_AS(fz(std::nan(""), 0), CarrierError);
  CHECK_THROWS_AS(fz(0.5, 0.5).to_four_valued(), CarrierError);
  CHECK(fz(1, 1).to_four_valued() == kBoth);
  CHECK(kTrue.to_fuzzy().carrier() == Carrier::Fuzzy);
  CHECK_THROWS_AS(GridValue(3, 0, 2), CarrierError);
  CHECK_THROWS_AS(GridValue(0, 0, 0), CarrierError);
  CHECK(GridValue::from_truth_value(fz(0.3, 0.7), 10) == GridValue(3, 7, 10));
  CHECK_THROWS_AS(GridValue::from_truth_value(fz(0.25, 0), 10), CarrierError);
  CHECK(GridValue(1, 2, 4).refine(8) == GridValue(2, 4, 8));
}

TEST_CASE("parsing and printing values") {
  CHECK(parse_truth_value("B") == kBoth);
  CHECK(parse_truth_value("<0.7,0.5>") == fz(0.7, 0.5));
  CHECK(parse_truth_value(" < 0.25 , 1 > ") == fz(0.25, 1));
  CHECK_THROWS_AS(parse_truth_value("X"), CarrierError);
  CHECK_THROWS_AS(parse_truth_value("<0.5>"), CarrierError);
  CHECK(to_string(kNeither) == "N");
  CHECK(to_string(fz(0.7, 0.5)) == "<0.7,0.5>");
  CHECK(grid_values(1).size() == 4);
  CHECK(grid_values(20).size() == 441);
  auto corners = grid_values(1);
  for (int i = 0; i < 4; ++i) CHECK(corners[i].to_four_valued() == kCornerOrder[i]);
}

// Four-valued tables, checked cell by cell against the transcription.
TEST_CASE("four-valued connectives match the published tables") {
  for (int i = 0; i < 4; ++i) {
    TruthValue u = corner(ref::kCorners[i]);
    CHECK(bd_neg(u) == corner(ref::glyph(ref::kNegTable[i])));
    CHECK(bd_delta(u) == corner(ref::glyph(ref::kDeltaTable[i])));
    CHECK(bivalent_neg(u) == corner(ref::glyph(ref::kBivalentNegTable[i])));
    CHECK(circ(u) == corner(ref::glyph(ref::kCircTable[i])));
    CHECK(bivalent_neg_expanded(u) == bivalent_neg(u));
    CHECK(circ_expanded(u) == circ(u));
    for (int j = 0; j < 4; ++j) {
      TruthValue v = corner(ref::kCorners[j]);
      CHECK(weak_and(u, v) == corner(ref::glyph(ref::kAndTable[i][j])));
      CHECK(weak_or(u, v) == corner(ref::glyph(ref::kOrTable[i][j])));
      CHECK(implies(u, v) == corner(ref::glyph(ref::kImpliesTable[i][j])));
      CHECK(implies_expanded(u, v) == implies(u, v));
    }
  }
}

TEST_CASE("pinned examples") {
  SUBCASE("negation") {
    CHECK(bd_neg(kBoth) == kBoth);
    CHECK(near(bd_neg(fz(0.3, 0.8)), 0.8, 0.3));
    for (auto u : kCornerOrder) CHECK(bd_neg(bd_neg(u)) == u);
  }
  SUBCASE("weak conjunction and disjunction") {
    CHECK(weak_and(kBoth, kNeither) == kFalse);
    CHECK(weak_or(kBoth, kNeither) == kTrue);
    for (auto u : kCornerOrder) {
      CHECK(weak_and(kTrue, u) == u);
      CHECK(weak_or(kFalse, u) == u);
    }
    CHECK(near(weak_and(fz(0.7, 0.2), fz(0.4, 0.6)), 0.4, 0.6));
    CHECK(near(weak_or(fz(0.7, 0.2), fz(0.4, 0.6)), 0.7, 0.2));
  }
  SUBCASE("designation indicator") {
    CHECK(bd_delta(kBoth) == kTrue);
    CHECK(bd_delta(kNeither) == kFalse);
    CHECK(bd_delta(kTrue) == kTrue);
    CHECK(near(bd_delta(fz(0.6, 0.9)), 0.6, 0.4));
  }
  SUBCASE("strong connectives") {
    CHECK(near(strong_and(fz(0.7, 0.4), fz(0.6, 0.5)), 0.3, 0.9));
    CHECK(near(strong_or(fz(0.7, 0.4), fz(0.6, 0.5)), 1, 0));
    CHECK(strong_and(kBoth, kNeither).to_four_valued() == kFalse);
    CHECK(near(strong_and(fz(0.35, 0.65), kTrue), 0.35, 0.65));
    CHECK(near(strong_or(fz(0.35, 0.65), kFalse), 0.35, 0.65));
  }
  SUBCASE("Baaz delta") {
    CHECK(baaz_delta(fz(1, 0.7)).to_four_valued() == kTrue);
    CHECK(baaz_delta(fz(0.9, 0)).to_four_valued() == kFalse);
    CHECK(baaz_delta(kTrue).to_four_valued() == kTrue);
  }
  SUBCASE("derived connectives") {
    CHECK(bivalent_neg(kBoth) == kFalse);
    CHECK(circ(kBoth) == kFalse);
    CHECK(implies(kNeither, kBoth) == kTrue);
    CHECK(circ(kTrue) == kTrue);
    CHECK(circ(kFalse) == kTrue);
    CHECK(near(circ(fz(0.7, 0.5)), 0.8, 0.2));
  }
  SUBCASE("orders") {
    CHECK(leq_t(kFalse, kNeither));
    CHECK(leq_t(kNeither, kTrue));
    CHECK(leq_t(kFalse, kBoth));
    CHECK(leq_t(kBoth, kTrue));
    CHECK_FALSE(leq_t(kNeither, kBoth));
    CHECK_FALSE(leq_t(kBoth, kNeither));
    for (auto u : kCornerOrder) CHECK(leq_t(u, u));
    CHECK(leq_i(fz(0.2, 0.5), fz(0.4, 0.5)));
    CHECK_FALSE(leq_t(fz(0.2, 0.5), fz(0.4, 0.6)));
  }
  SUBCASE("classification") {
    auto b = classify(kBoth);
    CHECK(b.designated);
    CHECK(b.glutty);
    auto t = classify(kTrue);
    CHECK(t.designated);
    CHECK(t.normal);
    CHECK_FALSE(t.gappy);
    CHECK_FALSE(t.glutty);
    auto g1 = classify(fz(1, 0.4));
    CHECK(g1.designated);
    CHECK(g1.glutty);
    auto g2 = classify(fz(0.2, 0.3));
    CHECK(g2.gappy);
    CHECK_FALSE(g2.designated);
  }
}

TEST_CASE("De Morgan duality of the strong connectives") {
  for (const auto& u : grid_values(10)) {
    for (const auto& v : grid_values(10)) {
      CHECK(bd_neg(strong_or(u, v)) == strong_and(bd_neg(u), bd_neg(v)));
    }
  }
}

TEST_CASE("grid connectives agree with the oracle on every pair at g=10") {
  ref::Algebra A{10, true};
  for (const auto& u : grid_values(10)) {
    ref::V a = as_ref(u);
    CHECK(as_ref(bd_neg(u)) == A.neg(a));
    CHECK(as_ref(bd_delta(u)) == A.delta(a));
    CHECK(as_ref(baaz_delta(u)) == A.baaz(a));
    CHECK(as_ref(bivalent_neg(u)) == A.bivalent_neg(a));
    CHECK(as_ref(circ(u)) == A.circ(a));
    CHECK(as_ref(circ_expanded(u)) == A.circ(a));
    CHECK(classify(u).normal == A.normal(a));
    for (const auto& v : grid_values(10)) {
      ref::V b = as_ref(v);
      CHECK(as_ref(weak_and(u, v)) == A.meet(a, b));
      CHECK(as_ref(weak_or(u, v)) == A.join(a, b));
      CHECK(as_ref(strong_and(u, v)) == A.strong_and(a, b));
      CHECK(as_ref(strong_or(u, v)) == A.strong_or(a, b));
      CHECK(as_ref(implies(u, v)) == A.implies(a, b));
    }
  }
}

TEST_CASE("floating and grid arithmetic agree") {
  for (const auto& u : grid_values(8)) {
    TruthValue a = u.to_truth_value();
    CHECK(near(circ(a), circ(u).to_truth_value().pos(), circ(u).to_truth_value().neg()));
    for (const auto& v : grid_values(8)) {
      TruthValue b = v.to_truth_value();
      auto sa = strong_and(u, v).to_truth_value();
      auto im = implies(u, v).to_truth_value();
      CHECK(near(strong_and(a, b), sa.pos(), sa.neg()));
      CHECK(near(implies(a, b), im.pos(), im.neg()));
    }
  }
}

TEST_CASE("mixed carriers embed four-valued operands") {
  TruthValue r = weak_and(kTrue, fz(0.5, 0.5));
  CHECK(r.carrier() == Carrier::Fuzzy);
  CHECK(near(r, 0.5, 0.5));
  CHECK(weak_and(kTrue, kBoth).carrier() == Carrier::FourValued);
  CHECK_THROWS_AS(weak_and(GridValue(1, 0, 2), GridValue(1, 0, 3)), CarrierError);
}
