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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bilogic/semantics.hpp"

namespace bilogic::detail {

/// A desugared formula resolved against a vocabulary: predicates and
/// constants become indices, variables become environment slots. Free
/// variables occupy slots 0..free_count()-1 in the order given at
/// construction; each quantifier owns one further slot.
class CompiledFormula {
 public:
  /// Throws EvalError for sugar nodes, unknown symbols, arity mismatches
  /// and free variables missing from `free_order`.
  CompiledFormula(const Formula& desugared, const Vocabulary& vocabulary,
                  const std::vector<std::string>& free_order);

  std::size_t slot_count() const noexcept { return slot_count_; }
  std::size_t free_count() const noexcept { return free_count_; }
  bool uses_fuzzy_only() const noexcept { return fuzzy_only_; }

  /// `slots` must hold slot_count() entries; the first free_count() are read,
  /// the rest are scratch.
  template <class V>
  V evaluate(const Interpretation<V>& interpretation, std::span<std::size_t> slots) const;

 private:
  struct Arg {
    bool is_slot;
    std::uint32_t index;  // slot or constant index
  };
  struct Op {
    NodeKind kind;
    std::uint32_t a = 0;  // first child / predicate index
    std::uint32_t b = 0;  // second child / quantifier slot
    std::vector<Arg> args;
  };

  std::uint32_t compile(const Formula& f, const Vocabulary& vocabulary,
                        std::vector<std::pair<std::string, std::uint32_t>>& scope,
                        const std::vector<std::string>& free_order);

  template <class V>
  V run(std::uint32_t op, const Interpretation<V>& interpretation,
        std::span<std::size_t> slots) const;

  std::vector<Op> ops_;
  std::uint32_t root_ = 0;
  std::size_t slot_count_ = 0;
  std::size_t free_count_ = 0;
  bool fuzzy_only_ = false;
};

/// Desugars `f` for the interpretation's logic (inner quantifiers need E!
/// in the vocabulary) and rejects fuzzy-only connectives in four-valued
/// logic. Throws EvalError.
Formula prepare(const Formula& f, Logic logic, const Vocabulary& vocabulary);

/// Sorted free variables as a vector.
std::vector<std::string> free_order(const Formula& f);

/// Advances an odometer over {0..radix-1}^k, last position fastest.
/// Returns false after the final assignment.
bool next_assignment(std::span<std::size_t> digits, std::size_t radix);

}  // namespace bilogic::detail
