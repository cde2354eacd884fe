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

/// \file values.hpp
/// Truth values of the four-valued bilattice {0,1}^2 and of its fuzzy
/// generalization [0,1]^2, with every connective's positive/negative
/// semantics.
///
/// Two representations share one set of operations:
///   - TruthValue: a tagged pair (four-valued bits or binary floating point),
///     used for general evaluation of user-supplied models;
///   - GridValue: a pair of numerators over a common denominator g, used by
///     exhaustive search and truth tables. Every operation below is closed
///     over {0, 1/g, ..., 1}, so grid arithmetic never rounds.

#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "bilogic/error.hpp"

namespace bilogic {

enum class Carrier : unsigned char { FourValued, Fuzzy };

/// The logic a formula is interpreted in. Four-valued formulas may not use
/// the strong connectives or the Baaz delta; derived connectives expand
/// through the lattice connectives in four-valued mode and through the
/// strong ones in fuzzy mode.
enum class Logic : unsigned char { FourValued, Fuzzy };

constexpr Carrier carrier_of(Logic logic) noexcept {
  return logic == Logic::FourValued ? Carrier::FourValued : Carrier::Fuzzy;
}

/// Absolute tolerance used when classifying floating-point values.
inline constexpr double kClassifyTolerance = 1e-9;

class TruthValue {
 public:
  /// N, four-valued.
  constexpr TruthValue() noexcept = default;

  static constexpr TruthValue four_valued(bool pos, bool neg) noexcept {
    return TruthValue(pos ? 1.0 : 0.0, neg ? 1.0 : 0.0, Carrier::FourValued);
  }

  /// Throws CarrierError unless both components lie in [0,1].
  static TruthValue fuzzy(double pos, double neg);

  constexpr double pos() const noexcept { return pos_; }
  constexpr double neg() const noexcept { return neg_; }
  constexpr Carrier carrier() const noexcept { return carrier_; }

  /// True for T, F, N, B in either carrier.
  constexpr bool is_corner() const noexcept {
    return (pos_ == 0.0 || pos_ == 1.0) && (neg_ == 0.0 || neg_ == 1.0);
  }

  /// Embeds a four-valued value at the corresponding corner of the square.
  constexpr TruthValue to_fuzzy() const noexcept {
    return TruthValue(pos_, neg_, Carrier::Fuzzy);
  }

  /// The reverse embedding; throws CarrierError for non-corner values.
  TruthValue to_four_valued() const;

  friend constexpr bool operator==(const TruthValue&, const TruthValue&) = default;

 private:
  constexpr TruthValue(double pos, double neg, Carrier carrier) noexcept
      : pos_(pos), neg_(neg), carrier_(carrier) {}

  friend struct TruthValueAccess;

  double pos_ = 0.0;
  double neg_ = 0.0;
  Carrier carrier_ = Carrier::FourValued;
};

inline constexpr TruthValue kTrue = TruthValue::four_valued(true, false);
inline constexpr TruthValue kFalse = TruthValue::four_valued(false, true);
inline constexpr TruthValue kNeither = TruthValue::four_valued(false, false);
inline constexpr TruthValue kBoth = TruthValue::four_valued(true, true);

/// Canonical order of the four values: T, B, N, F (the row order of the
/// classical truth tables).
inline constexpr std::array<TruthValue, 4> kCornerOrder = {kTrue, kBoth, kNeither,
                                                           kFalse};

/// A degree numerator/g with 0 <= numerator <= g.
class GridDegree {
 public:
  GridDegree(int numerator, int grid);

  int numerator() const noexcept { return numerator_; }
  int grid() const noexcept { return grid_; }
  double value() const noexcept { return static_cast<double>(numerator_) / grid_; }

  friend bool operator==(const GridDegree&, const GridDegree&) = default;

 private:
  int numerator_;
  int grid_;
};

/// A truth value whose components are GridDegrees sharing one grid.
class GridValue {
 public:
  /// Throws CarrierError unless 0 <= pos, neg <= grid and grid >= 1.
  GridValue(int pos, int neg, int grid);

  /// Exact conversion; throws CarrierError if a component is not a multiple
  /// of 1/grid (within kClassifyTolerance).
  static GridValue from_truth_value(const TruthValue& value, int grid);

  int pos() const noexcept { return pos_; }
  int neg() const noexcept { return neg_; }
  int grid() const noexcept { return grid_; }
  GridDegree pos_degree() const { return {pos_, grid_}; }
  GridDegree neg_degree() const { return {neg_, grid_}; }

  bool is_corner() const noexcept {
    return (pos_ == 0 || pos_ == grid_) && (neg_ == 0 || neg_ == grid_);
  }

  /// Fuzzy-carrier view (components numerator/grid).
  TruthValue to_truth_value() const;
  /// Four-valued view; throws CarrierError unless a corner.
  TruthValue to_four_valued() const;

  /// Same value on a finer grid; `grid` must be a multiple of this grid.
  GridValue refine(int grid) const;

  friend bool operator==(const GridValue&, const GridValue&) = default;

 private:
  struct Unchecked {};
  GridValue(int pos, int neg, int grid, Unchecked) noexcept
      : pos_(pos), neg_(neg), grid_(grid) {}

  friend struct GridValueAccess;

  int pos_;
  int neg_;
  int grid_;
};

/// All (grid+1)^2 values in canonical row-major order: positive component
/// descending, then negative component ascending. At grid 1 this is T, B,
/// N, F.
std::vector<GridValue> grid_values(int grid);

// Connectives. Binary operations on TruthValues embed a four-valued operand
// into the fuzzy carrier when the other operand is fuzzy; GridValue
// operands must share their grid (CarrierError otherwise).

TruthValue bd_neg(const TruthValue& u) noexcept;
TruthValue weak_and(const TruthValue& u, const TruthValue& v) noexcept;
TruthValue weak_or(const TruthValue& u, const TruthValue& v) noexcept;
TruthValue bd_delta(const TruthValue& u) noexcept;
TruthValue strong_and(const TruthValue& u, const TruthValue& v) noexcept;
TruthValue strong_or(const TruthValue& u, const TruthValue& v) noexcept;
TruthValue baaz_delta(const TruthValue& u) noexcept;

GridValue bd_neg(const GridValue& u) noexcept;
GridValue weak_and(const GridValue& u, const GridValue& v);
GridValue weak_or(const GridValue& u, const GridValue& v);
GridValue bd_delta(const GridValue& u) noexcept;
GridValue strong_and(const GridValue& u, const GridValue& v);
GridValue strong_or(const GridValue& u, const GridValue& v);
GridValue baaz_delta(const GridValue& u) noexcept;

// Derived connectives in closed form. Four-valued TruthValues use the
// lattice expansions; fuzzy TruthValues and GridValues use the strong ones.

TruthValue bivalent_neg(const TruthValue& u) noexcept;
TruthValue implies(const TruthValue& u, const TruthValue& v) noexcept;
TruthValue circ(const TruthValue& u) noexcept;

GridValue bivalent_neg(const GridValue& u) noexcept;
GridValue implies(const GridValue& u, const GridValue& v);
GridValue circ(const GridValue& u) noexcept;

// The same derived connectives computed from their defining expansions:
//   !u     = ~#u
//   u => v = ~u | v               (~u || v in fuzzy)
//   %u     = (#u | #~u) & (~#u | ~#~u)   (strong versions in fuzzy)

TruthValue bivalent_neg_expanded(const TruthValue& u) noexcept;
TruthValue implies_expanded(const TruthValue& u, const TruthValue& v) noexcept;
TruthValue circ_expanded(const TruthValue& u) noexcept;

GridValue bivalent_neg_expanded(const GridValue& u) noexcept;
GridValue implies_expanded(const GridValue& u, const GridValue& v);
GridValue circ_expanded(const GridValue& u) noexcept;

/// Truth order: pos1 <= pos2 and neg1 >= neg2.
bool leq_t(const TruthValue& u, const TruthValue& v) noexcept;
/// Information order: pos1 <= pos2 and neg1 <= neg2.
bool leq_i(const TruthValue& u, const TruthValue& v) noexcept;
bool leq_t(const GridValue& u, const GridValue& v);
bool leq_i(const GridValue& u, const GridValue& v);

struct Classification {
  bool designated = false;  // pos = 1
  bool normal = false;      // pos + neg = 1
  bool gappy = false;       // pos + neg < 1
  bool glutty = false;      // pos + neg > 1

  friend bool operator==(const Classification&, const Classification&) = default;
};

Classification classify(const TruthValue& u) noexcept;
Classification classify(const GridValue& u) noexcept;

inline bool is_designated(const TruthValue& u) noexcept {
  return u.pos() >= 1.0 - kClassifyTolerance;
}
inline bool is_designated(const GridValue& u) noexcept { return u.pos() == u.grid(); }

/// `T`, `F`, `N`, `B` for corners, `<p,n>` otherwise (shortest round-trip
/// decimal components).
std::string to_string(const TruthValue& u);
std::string to_string(const GridValue& u);

/// Accepts `T`, `F`, `N`, `B` (four-valued) and `<p,n>` (fuzzy). Throws
/// CarrierError on malformed input or out-of-range components.
TruthValue parse_truth_value(std::string_view text);

}  // namespace bilogic
