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

/// \file semantics.hpp
/// Models, variable environments, and formula evaluation.
///
/// A Model is the document form (names, partial maps with defaults) read
/// from and written to JSON; it may be malformed, and validate_model()
/// reports how. An Interpretation is the resolved form used for evaluation:
/// symbols and elements are indices and every predicate is a dense table.

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bilogic/syntax.hpp"
#include "bilogic/values.hpp"

namespace bilogic {

struct PredicateInterpretation {
  int arity = 0;
  /// Argument tuple (element names) to value; unlisted tuples take the default.
  std::map<std::vector<std::string>, TruthValue> values;
  TruthValue default_value;

  friend bool operator==(const PredicateInterpretation&, const PredicateInterpretation&) = default;
};

struct Model {
  Logic logic = Logic::FourValued;
  /// Outer domain, in canonical order.
  std::vector<std::string> domain;
  std::map<std::string, std::string> constants;
  std::map<std::string, PredicateInterpretation> predicates;

  bool has_existence() const { return predicates.contains(std::string(kExistence)); }

  friend bool operator==(const Model&, const Model&) = default;
};

/// Variable name to element name.
using Environment = std::map<std::string, std::string>;

/// Sorted predicate and constant names of a signature, addressed by index.
class Vocabulary {
 public:
  explicit Vocabulary(const Signature& signature);

  std::size_t predicate_count() const noexcept { return predicates_.size(); }
  std::size_t constant_count() const noexcept { return constants_.size(); }
  const std::string& predicate_name(std::size_t i) const { return predicates_[i]; }
  int arity(std::size_t i) const { return arities_[i]; }
  const std::string& constant_name(std::size_t i) const { return constants_[i]; }

  std::optional<std::size_t> predicate_index(std::string_view name) const;
  std::optional<std::size_t> constant_index(std::string_view name) const;
  std::optional<std::size_t> existence_index() const { return predicate_index(kExistence); }

  Signature signature() const;

 private:
  std::vector<std::string> predicates_;
  std::vector<int> arities_;
  std::vector<std::string> constants_;
};

/// Dense, index-resolved model over value type V (TruthValue or GridValue).
template <class V>
class Interpretation {
 public:
  /// Every table entry starts as `fill`; every constant denotes element 0.
  Interpretation(std::shared_ptr<const Vocabulary> vocabulary, std::vector<std::string> domain,
                 Logic logic, V fill);

  const Vocabulary& vocabulary() const noexcept { return *vocabulary_; }
  const std::shared_ptr<const Vocabulary>& vocabulary_ptr() const noexcept { return vocabulary_; }
  const std::vector<std::string>& domain() const noexcept { return domain_; }
  std::size_t domain_size() const noexcept { return domain_.size(); }
  Logic logic() const noexcept { return logic_; }

  std::size_t constant(std::size_t c) const { return constants_[c]; }
  void set_constant(std::size_t c, std::size_t element) { constants_[c] = element; }

  /// Row-major position of an argument tuple in a predicate's table.
  std::size_t offset(std::size_t predicate, std::span<const std::size_t> args) const;
  const V& value(std::size_t predicate, std::span<const std::size_t> args) const {
    return tables_[predicate][offset(predicate, args)];
  }
  const V& value_at(std::size_t predicate, std::size_t offset) const {
    return tables_[predicate][offset];
  }
  void set_value_at(std::size_t predicate, std::size_t offset, const V& v) {
    tables_[predicate][offset] = v;
  }
  std::size_t table_size(std::size_t predicate) const { return tables_[predicate].size(); }

 private:
  std::shared_ptr<const Vocabulary> vocabulary_;
  std::vector<std::string> domain_;
  Logic logic_;
  std::vector<std::size_t> constants_;
  std::vector<std::vector<V>> tables_;
};

extern template class Interpretation<TruthValue>;
extern template class Interpretation<GridValue>;

/// Resolves a model; values of a fuzzy model are embedded into the fuzzy
/// carrier. Throws ModelError if the model has structural violations.
Interpretation<TruthValue> interpret(const Model& model);
/// Exact grid form; throws ModelError if a value is not a multiple of 1/grid.
/// Four-valued models must use grid 1.
Interpretation<GridValue> interpret_on_grid(const Model& model, int grid);

/// Document form of an interpretation. Each predicate's default is its most
/// frequent value (ties broken by canonical value order); only the other
/// tuples are listed.
Model to_model(const Interpretation<TruthValue>& interpretation);
Model to_model(const Interpretation<GridValue>& interpretation);

/// Truth value of `f` (desugared internally in the interpretation's logic;
/// E! enables inner quantifiers). Throws EvalError for unassigned free
/// variables, unknown symbols, elements outside the domain, and
/// fuzzy-only connectives in a four-valued interpretation.
template <class V>
V evaluate(const Interpretation<V>& interpretation, const Environment& env, const Formula& f);

TruthValue eval(const Model& model, const Environment& env, const Formula& f);

/// One entry per assignment of the free variables of `f` (sorted by name),
/// enumerated in domain order with the last variable varying fastest.
template <class V>
std::vector<std::pair<Environment, V>> evaluate_all(const Interpretation<V>& interpretation,
                                                    const Formula& f);

std::vector<std::pair<Environment, TruthValue>> eval_all_environments(const Model& model,
                                                                      const Formula& f);

// --- free logic -------------------------------------------------------------

enum class Axiom : unsigned char {
  Existence,         // E! bivalent: %E!(x), plus E!(x) | ~E!(x) in fuzzy mode
  Normality,         // %P(x...) on the inner domain, for every P
  Noncontradiction,  // !(P(x...) & ~P(x...)) on the inner domain, for every P
};

std::string_view axiom_name(Axiom axiom) noexcept;

/// A subset of the axiom schemas, restricting a class of models.
struct TheoryProfile {
  bool existence = false;
  bool normality = false;
  bool noncontradiction = false;

  bool contains(Axiom axiom) const noexcept;
  bool empty() const noexcept { return !existence && !normality && !noncontradiction; }
  static TheoryProfile all() noexcept { return {true, true, true}; }
  /// Comma-separated axiom names; throws std::invalid_argument on unknown names.
  static TheoryProfile parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const TheoryProfile&, const TheoryProfile&) = default;
};

/// Where an axiom schema fails: predicate name and argument tuple.
struct AxiomFailure {
  std::string predicate;
  std::vector<std::string> tuple;

  friend bool operator==(const AxiomFailure&, const AxiomFailure&) = default;
};

/// Elements whose E! value is designated. Throws EvalError without E!.
template <class V>
std::vector<std::size_t> inner_domain(const Interpretation<V>& interpretation);
std::vector<std::string> inner_domain(const Model& model);

/// All instances at which the schema body is not designated. Throws
/// EvalError without E!.
template <class V>
std::vector<AxiomFailure> axiom_failures(const Interpretation<V>& interpretation, Axiom axiom);
std::vector<AxiomFailure> axiom_failures(const Model& model, Axiom axiom);

bool check_existence_axiom(const Model& model);
bool check_normality_axiom(const Model& model);
bool check_noncontradiction_axiom(const Model& model);

/// Elements whose E! value is fully normal but not a corner: they satisfy
/// the plain normality schema %E!(x) yet fail the fuzzy bivalence schema.
/// Always empty for four-valued models.
std::vector<std::string> existence_normal_not_bivalent(const Model& model);

// --- validation -------------------------------------------------------------

enum class ViolationKind : unsigned char {
  EmptyDomain,
  DuplicateElement,
  CarrierMismatch,
  ConstantOutsideDomain,
  MissingConstant,
  MissingPredicate,
  ArityMismatch,
  BadTuple,
  SymbolClash,
  AxiomFailure,
};

std::string_view violation_kind_name(ViolationKind kind) noexcept;

struct Violation {
  ViolationKind kind;
  std::string message;
  std::string symbol;                // offending constant/predicate, if any
  std::vector<std::string> tuple;    // offending tuple, if any
  std::optional<Axiom> axiom;        // for AxiomFailure
};

struct ValidationOptions {
  TheoryProfile profile;
};

/// Structural problems of the model alone.
std::vector<Violation> structural_violations(const Model& model);

/// Structural problems, symbols of `signature` the model lacks or declares
/// with another arity, and (per options.profile) axiom-schema failures.
std::vector<Violation> validate_model(const Model& model, const Signature& signature,
                                      const ValidationOptions& options = {});

}  // namespace bilogic
