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

#include "bilogic/values.hpp"

#include <charconv>
#include <cctype>
#include <cmath>
#include <cstdlib>

namespace bilogic {

struct TruthValueAccess {
  static constexpr TruthValue make(double pos, double neg, Carrier carrier) noexcept {
    return TruthValue(pos, neg, carrier);
  }
};

struct GridValueAccess {
  static GridValue make(int pos, int neg, int grid) noexcept {
    return GridValue(pos, neg, grid, GridValue::Unchecked{});
  }
};

namespace {

// Componentwise kernels, written once for both scalar types. `one` is 1.0
// for floating point and the grid denominator for numerators.
template <class S>
struct Pair {
  S pos;
  S neg;
};

template <class S>
constexpr Pair<S> k_neg(Pair<S> a) {
  return {a.neg, a.pos};
}

template <class S>
constexpr Pair<S> k_and(Pair<S> a, Pair<S> b) {
  return {std::min(a.pos, b.pos), std::max(a.neg, b.neg)};
}

template <class S>
constexpr Pair<S> k_or(Pair<S> a, Pair<S> b) {
  return {std::max(a.pos, b.pos), std::min(a.neg, b.neg)};
}

template <class S>
constexpr Pair<S> k_delta(Pair<S> a, S one) {
  return {a.pos, one - a.pos};
}

template <class S>
constexpr Pair<S> k_strong_and(Pair<S> a, Pair<S> b, S one) {
  return {std::max(a.pos + b.pos - one, S{0}), std::min(a.neg + b.neg, one)};
}

template <class S>
constexpr Pair<S> k_strong_or(Pair<S> a, Pair<S> b, S one) {
  return {std::min(a.pos + b.pos, one), std::max(a.neg + b.neg - one, S{0})};
}

// sgn(1 - pos) is 0 exactly when pos = 1.
template <class S>
constexpr Pair<S> k_baaz(Pair<S> a, S one) {
  return a.pos < one ? Pair<S>{S{0}, one} : Pair<S>{one, S{0}};
}

template <class S>
constexpr Pair<S> k_bivalent_neg(Pair<S> a, S one) {
  return {one - a.pos, a.pos};
}

template <class S>
constexpr Pair<S> k_implies_weak(Pair<S> a, Pair<S> b) {
  return {std::max(a.neg, b.pos), std::min(a.pos, b.neg)};
}

template <class S>
constexpr Pair<S> k_implies_strong(Pair<S> a, Pair<S> b, S one) {
  return {std::min(a.neg + b.pos, one), std::max(a.pos + b.neg - one, S{0})};
}

// Bits only: T and F are normal, N and B are not.
template <class S>
constexpr Pair<S> k_circ_weak(Pair<S> a, S one) {
  return a.pos != a.neg ? Pair<S>{one, S{0}} : Pair<S>{S{0}, one};
}

template <class S>
constexpr Pair<S> k_circ_strong(Pair<S> a, S one) {
  S d = a.pos + a.neg - one;
  if (d < S{0}) d = -d;
  return {one - d, d};
}

Pair<double> pair(const TruthValue& u) { return {u.pos(), u.neg()}; }
Pair<int> pair(const GridValue& u) { return {u.pos(), u.neg()}; }

TruthValue make(Pair<double> p, Carrier c) { return TruthValueAccess::make(p.pos, p.neg, c); }
GridValue make(Pair<int> p, int grid) { return GridValueAccess::make(p.pos, p.neg, grid); }

Carrier joint(const TruthValue& u, const TruthValue& v) {
  return u.carrier() == Carrier::FourValued && v.carrier() == Carrier::FourValued
             ? Carrier::FourValued
             : Carrier::Fuzzy;
}

int joint(const GridValue& u, const GridValue& v) {
  if (u.grid() != v.grid()) {
    throw CarrierError("grid mismatch: " + std::to_string(u.grid()) + " vs " +
                       std::to_string(v.grid()));
  }
  return u.grid();
}

std::string format_degree(double d) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, d);
  return std::string(buf, end);
}

}  // namespace

TruthValue TruthValue::fuzzy(double pos, double neg) {
  if (!(pos >= 0.0 && pos <= 1.0 && neg >= 0.0 && neg <= 1.0)) {
    throw CarrierError("fuzzy truth value components must lie in [0,1]: <" +
                       format_degree(pos) + "," + format_degree(neg) + ">");
  }
  return TruthValue(pos, neg, Carrier::Fuzzy);
}

TruthValue TruthValue::to_four_valued() const {
  if (!is_corner()) {
    throw CarrierError("value " + to_string(*this) + " has no four-valued counterpart");
  }
  return TruthValue(pos_, neg_, Carrier::FourValued);
}

GridDegree::GridDegree(int numerator, int grid) : numerator_(numerator), grid_(grid) {
  if (grid < 1 || numerator < 0 || numerator > grid) {
    throw CarrierError("grid degree " + std::to_string(numerator) + "/" +
                       std::to_string(grid) + " out of range");
  }
}

GridValue::GridValue(int pos, int neg, int grid) : pos_(pos), neg_(neg), grid_(grid) {
  if (grid < 1 || pos < 0 || pos > grid || neg < 0 || neg > grid) {
    throw CarrierError("grid value <" + std::to_string(pos) + "," + std::to_string(neg) +
                       ">/" + std::to_string(grid) + " out of range");
  }
}

GridValue GridValue::from_truth_value(const TruthValue& value, int grid) {
  if (grid < 1) throw CarrierError("grid must be positive");
  auto snap = [&](double d) {
    double scaled = d * grid;
    double rounded = std::round(scaled);
    if (std::abs(scaled - rounded) > kClassifyTolerance * grid) {
      throw CarrierError("value " + to_string(value) + " is not on grid " +
                         std::to_string(grid));
    }
    return static_cast<int>(rounded);
  };
  return GridValue(snap(value.pos()), snap(value.neg()), grid);
}

TruthValue GridValue::to_truth_value() const {
  return TruthValue::fuzzy(static_cast<double>(pos_) / grid_,
                           static_cast<double>(neg_) / grid_);
}

TruthValue GridValue::to_four_valued() const {
  if (!is_corner()) {
    throw CarrierError("grid value " + to_string(*this) + " is not a corner");
  }
  return TruthValue::four_valued(pos_ == grid_, neg_ == grid_);
}

GridValue GridValue::refine(int grid) const {
  if (grid < 1 || grid % grid_ != 0) {
    throw CarrierError("grid " + std::to_string(grid) + " is not a multiple of " +
                       std::to_string(grid_));
  }
  int factor = grid / grid_;
  return GridValue(pos_ * factor, neg_ * factor, grid);
}

std::vector<GridValue> grid_values(int grid) {
  if (grid < 1) throw CarrierError("grid must be positive");
  std::vector<GridValue> out;
  out.reserve(static_cast<std::size_t>(grid + 1) * (grid + 1));
  for (int p = grid; p >= 0; --p) {
    for (int n = 0; n <= grid; ++n) out.push_back(GridValueAccess::make(p, n, grid));
  }
  return out;
}

// --- TruthValue connectives -------------------------------------------------

TruthValue bd_neg(const TruthValue& u) noexcept { return make(k_neg(pair(u)), u.carrier()); }

TruthValue weak_and(const TruthValue& u, const TruthValue& v) noexcept {
  return make(k_and(pair(u), pair(v)), joint(u, v));
}

TruthValue weak_or(const TruthValue& u, const TruthValue& v) noexcept {
  return make(k_or(pair(u), pair(v)), joint(u, v));
}

TruthValue bd_delta(const TruthValue& u) noexcept {
  return make(k_delta(pair(u), 1.0), u.carrier());
}

TruthValue strong_and(const TruthValue& u, const TruthValue& v) noexcept {
  return make(k_strong_and(pair(u), pair(v), 1.0), Carrier::Fuzzy);
}

TruthValue strong_or(const TruthValue& u, const TruthValue& v) noexcept {
  return make(k_strong_or(pair(u), pair(v), 1.0), Carrier::Fuzzy);
}

TruthValue baaz_delta(const TruthValue& u) noexcept {
  return make(k_baaz(pair(u), 1.0), Carrier::Fuzzy);
}

TruthValue bivalent_neg(const TruthValue& u) noexcept {
  return make(k_bivalent_neg(pair(u), 1.0), u.carrier());
}

TruthValue implies(const TruthValue& u, const TruthValue& v) noexcept {
  Carrier c = joint(u, v);
  if (c == Carrier::FourValued) return make(k_implies_weak(pair(u), pair(v)), c);
  return make(k_implies_strong(pair(u), pair(v), 1.0), c);
}

TruthValue circ(const TruthValue& u) noexcept {
  if (u.carrier() == Carrier::FourValued) return make(k_circ_weak(pair(u), 1.0), u.carrier());
  return make(k_circ_strong(pair(u), 1.0), u.carrier());
}

TruthValue bivalent_neg_expanded(const TruthValue& u) noexcept { return bd_neg(bd_delta(u)); }

TruthValue implies_expanded(const TruthValue& u, const TruthValue& v) noexcept {
  if (joint(u, v) == Carrier::FourValued) return weak_or(bd_neg(u), v);
  return strong_or(bd_neg(u), v);
}

TruthValue circ_expanded(const TruthValue& u) noexcept {
  TruthValue d = bd_delta(u);
  TruthValue dn = bd_delta(bd_neg(u));
  if (u.carrier() == Carrier::FourValued) {
    return weak_and(weak_or(d, dn), weak_or(bd_neg(d), bd_neg(dn)));
  }
  return strong_and(strong_or(d, dn), strong_or(bd_neg(d), bd_neg(dn)));
}

bool leq_t(const TruthValue& u, const TruthValue& v) noexcept {
  return u.pos() <= v.pos() && u.neg() >= v.neg();
}

bool leq_i(const TruthValue& u, const TruthValue& v) noexcept {
  return u.pos() <= v.pos() && u.neg() <= v.neg();
}

Classification classify(const TruthValue& u) noexcept {
  double sum = u.pos() + u.neg();
  Classification c;
  c.designated = is_designated(u);
  c.normal = std::abs(sum - 1.0) <= kClassifyTolerance;
  c.gappy = sum < 1.0 - kClassifyTolerance;
  c.glutty = sum > 1.0 + kClassifyTolerance;
  return c;
}

// --- GridValue connectives --------------------------------------------------

GridValue bd_neg(const GridValue& u) noexcept { return make(k_neg(pair(u)), u.grid()); }

GridValue weak_and(const GridValue& u, const GridValue& v) {
  return make(k_and(pair(u), pair(v)), joint(u, v));
}

GridValue weak_or(const GridValue& u, const GridValue& v) {
  return make(k_or(pair(u), pair(v)), joint(u, v));
}

GridValue bd_delta(const GridValue& u) noexcept {
  return make(k_delta(pair(u), u.grid()), u.grid());
}

GridValue strong_and(const GridValue& u, const GridValue& v) {
  int g = joint(u, v);
  return make(k_strong_and(pair(u), pair(v), g), g);
}

GridValue strong_or(const GridValue& u, const GridValue& v) {
  int g = joint(u, v);
  return make(k_strong_or(pair(u), pair(v), g), g);
}

GridValue baaz_delta(const GridValue& u) noexcept {
  return make(k_baaz(pair(u), u.grid()), u.grid());
}

GridValue bivalent_neg(const GridValue& u) noexcept {
  return make(k_bivalent_neg(pair(u), u.grid()), u.grid());
}

GridValue implies(const GridValue& u, const GridValue& v) {
  int g = joint(u, v);
  return make(k_implies_strong(pair(u), pair(v), g), g);
}

GridValue circ(const GridValue& u) noexcept {
  return make(k_circ_strong(pair(u), u.grid()), u.grid());
}

GridValue bivalent_neg_expanded(const GridValue& u) noexcept { return bd_neg(bd_delta(u)); }

GridValue implies_expanded(const GridValue& u, const GridValue& v) {
  return strong_or(bd_neg(u), v);
}

GridValue circ_expanded(const GridValue& u) noexcept {
  GridValue d = bd_delta(u);
  GridValue dn = bd_delta(bd_neg(u));
  return strong_and(strong_or(d, dn), strong_or(bd_neg(d), bd_neg(dn)));
}

bool leq_t(const GridValue& u, const GridValue& v) {
  joint(u, v);
  return u.pos() <= v.pos() && u.neg() >= v.neg();
}

bool leq_i(const GridValue& u, const GridValue& v) {
  joint(u, v);
  return u.pos() <= v.pos() && u.neg() <= v.neg();
}

Classification classify(const GridValue& u) noexcept {
  int sum = u.pos() + u.neg();
  Classification c;
  c.designated = is_designated(u);
  c.normal = sum == u.grid();
  c.gappy = sum < u.grid();
  c.glutty = sum > u.grid();
  return c;
}

// --- text -------------------------------------------------------------------

std::string to_string(const TruthValue& u) {
  if (u.is_corner()) {
    if (u.pos() == 1.0) return u.neg() == 1.0 ? "B" : "T";
    return u.neg() == 1.0 ? "F" : "N";
  }
  return "<" + format_degree(u.pos()) + "," + format_degree(u.neg()) + ">";
}

std::string to_string(const GridValue& u) { return to_string(u.to_truth_value()); }

TruthValue parse_truth_value(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(text);
  if (s == "T") return kTrue;
  if (s == "F") return kFalse;
  if (s == "N") return kNeither;
  if (s == "B") return kBoth;
  if (s.size() >= 2 && s.front() == '<' && s.back() == '>') {
    std::string_view body = s.substr(1, s.size() - 2);
    auto comma = body.find(',');
    if (comma != std::string_view::npos) {
      auto number = [&](std::string_view part, double& out) {
        part = trim(part);
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), out);
        return ec == std::errc() && ptr == part.data() + part.size() && !part.empty();
      };
      double p = 0.0;
      double n = 0.0;
      if (number(body.substr(0, comma), p) && number(body.substr(comma + 1), n)) {
        return TruthValue::fuzzy(p, n);
      }
    }
  }
  throw CarrierError("malformed truth value '" + std::string(text) + "'");
}

}  // namespace bilogic
