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

/// \file search.hpp
/// Truth tables, designated regions, finite model enumeration and bounded
/// entailment checking.
///
/// All search runs on exact grid values. Four-valued search uses grid 1,
/// whose four points are the corners T, B, N, F.

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bilogic/semantics.hpp"

namespace bilogic {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// --- truth tables -----------------------------------------------------------

struct TruthTableRow {
  std::vector<GridValue> inputs;  // one per atom, in TruthTable::atoms order
  GridValue value;
};

struct TruthTable {
  Logic logic = Logic::FourValued;
  int grid = 1;
  std::vector<std::string> atoms;  // sorted
  /// First atom varies slowest. Per atom, values run T, B, N, F in
  /// four-valued mode and over the grid row-major (pos descending, then
  /// neg ascending) in fuzzy mode.
  std::vector<TruthTableRow> rows;
};

/// Throws EvalError if `f` has quantifiers or atoms with arguments,
/// CarrierError for an invalid grid, BudgetError when the row count
/// exceeds `budget`. Four-valued mode ignores `grid`.
TruthTable truth_table(const Formula& f, Logic logic, int grid = 1,
                       std::uint64_t budget = kDefaultBudget);

/// Fuzzy-mode grid points at which `f` is designated. Throws EvalError
/// unless `f` is propositional with exactly one atom.
std::vector<GridValue> designated_set(const Formula& f, int grid);

// --- model enumeration ------------------------------------------------------

/// All interpretations of a signature over the domain e1..en with values
/// on a grid, addressed by index in canonical order.
///
/// An index is a mixed-radix number whose digits, most significant first,
/// are: the constants by name (each ranging over the elements), then the
/// predicates by name, each contributing one digit per argument tuple in
/// lexicographic order. Predicate digits range over grid_values(grid); in
/// free-logic mode E! ranges over {T, F} only.
class ModelSpace {
 public:
  /// Throws CarrierError for grid < 1 and four-valued logic with grid != 1,
  /// ModelError for n == 0.
  ModelSpace(const Signature& signature, std::size_t n, Logic logic, int grid, bool free_logic);

  /// Number of models, saturating at UINT64_MAX.
  std::uint64_t size() const noexcept { return size_; }
  std::size_t domain_size() const noexcept { return domain_.size(); }
  Logic logic() const noexcept { return logic_; }
  int grid() const noexcept { return grid_; }
  const Vocabulary& vocabulary() const noexcept { return *vocabulary_; }

  Interpretation<GridValue> at(std::uint64_t index) const;
  Model model_at(std::uint64_t index) const { return to_model(at(index)); }

  /// Sequential walk over [first, last). The callback sees each
  /// interpretation with its index and returns false to stop early.
  void scan(std::uint64_t first, std::uint64_t last,
            const std::function<bool(std::uint64_t, const Interpretation<GridValue>&)>& visit) const;

 private:
  struct Digit {
    bool is_constant;
    std::size_t symbol;
    std::size_t offset;  // table offset for predicate digits
    std::size_t radix;
  };

  Interpretation<GridValue> blank() const;
  void assign(Interpretation<GridValue>& m, const Digit& d, std::size_t value) const;

  std::shared_ptr<const Vocabulary> vocabulary_;
  std::vector<std::string> domain_;
  Logic logic_;
  int grid_;
  std::vector<GridValue> values_;
  std::vector<GridValue> bivalent_;
  std::optional<std::size_t> existence_;
  bool free_logic_;
  std::vector<Digit> digits_;
  std::uint64_t size_ = 1;
};

/// Total model count for sizes 1..max_size, saturating.
std::uint64_t count_models(const Signature& signature, std::size_t max_size, Logic logic,
                           int grid, bool free_logic);

/// Every model of size n in canonical order. Throws BudgetError (carrying
/// the required count) when there are more than `budget`.
std::vector<Model> enumerate_models(const Signature& signature, std::size_t n, Logic logic,
                                    int grid, bool free_logic,
                                    std::uint64_t budget = kDefaultBudget);

// --- entailment -------------------------------------------------------------

struct EntailmentQuery {
  std::vector<Formula> premises;
  Formula conclusion = Formula::atom("p");
  Logic logic = Logic::FourValued;
  /// E! is enumerated bivalently and inner quantifiers are relativized.
  bool free_logic = true;
  std::size_t max_domain_size = 3;
  /// Fuzzy mode only; four-valued search always uses grid 1.
  int grid = 10;
  /// Models violating a selected schema are skipped. Requires free logic.
  TheoryProfile profile;
  /// Symbols enumerated in addition to those occurring in the formulas.
  Signature extra_signature;
  unsigned workers = 1;
  std::uint64_t budget = kDefaultBudget;
};

struct Verdict {
  enum class Outcome { HoldsUpToBound, Countermodel };

  Outcome outcome = Outcome::HoldsUpToBound;
  std::size_t bound = 0;
  std::optional<int> grid;  // set in fuzzy mode
  std::optional<Model> witness;
  Environment environment;  // witness environment (conclusion's free variables)
  std::uint64_t models_examined = 0;
  double elapsed_ms = 0;

  bool holds() const noexcept { return outcome == Outcome::HoldsUpToBound; }
};

/// Signature searched by a query: formula symbols plus extra_signature,
/// plus E! when the profile is non-empty. Throws SignatureError on clashes.
Signature query_signature(const EntailmentQuery& query);

/// Bounded check of premises |= conclusion. Scans sizes 1..max_domain_size
/// in canonical order and returns the first model and conclusion
/// environment where every premise is designated under every environment
/// and the conclusion is not. The result is the same for any worker count.
///
/// Throws BudgetError before searching when the model count exceeds the
/// budget, SignatureError for inconsistent symbols or inner quantifiers
/// without free logic, EvalError for fuzzy-only connectives in four-valued
/// mode, std::invalid_argument for bad bounds or a profile without free logic.
Verdict entails(const EntailmentQuery& query);

/// entails() with no premises.
Verdict tautology_check(const Formula& f, std::size_t bound, Logic logic, int grid = 10,
                        bool free_logic = true);

/// {"outcome", "bound", "grid", "witness": {"model", "environment"}|null,
///  "models_examined", "elapsed_ms"}.
std::string verdict_to_json(const Verdict& verdict, int indent = 2);

}  // namespace bilogic
