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

/// \file syntax.hpp
/// First-order formulas: AST, signatures, parser, printer and desugaring.
///
/// Concrete syntax, highest to lowest precedence:
///
///     unary      ~ (negation)  # (designation)  @ (Baaz delta)
///                ! (bivalent negation)  % (normality)
///     binary     &&  >  &  >  ||  >  |  >  =>  (=> is right-associative)
///     quantifier forall x.  exists x.  Pi x.  Sigma x.   (maximal scope)
///     atom       Name(t1,...,tn)  or  Name  (zero-ary);  E!(t)
///
/// The Unicode glyphs ∼ ▲ Δ ¬ ∘ ⊗ ∧ ⊕ ∨ → ∀ ∃ Π Σ are accepted as synonyms.

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bilogic/error.hpp"
#include "bilogic/values.hpp"

namespace bilogic {

/// Name of the existence predicate.
inline constexpr std::string_view kExistence = "E!";

struct Term {
  enum class Kind : unsigned char { Variable, Constant };

  Kind kind = Kind::Constant;
  std::string name;

  static Term variable(std::string name) { return {Kind::Variable, std::move(name)}; }
  static Term constant(std::string name) { return {Kind::Constant, std::move(name)}; }

  bool is_variable() const noexcept { return kind == Kind::Variable; }

  friend bool operator==(const Term&, const Term&) = default;
};

enum class NodeKind : unsigned char {
  // primitives
  Atom,
  Neg,          // ~
  WeakAnd,      // &
  WeakOr,       // |
  BdDelta,      // #
  StrongAnd,    // &&
  StrongOr,     // ||
  BaazDelta,    // @
  OuterForall,  // Pi
  OuterExists,  // Sigma
  // sugar
  BivalentNeg,  // !
  Implies,      // =>
  Circ,         // %
  InnerForall,  // forall
  InnerExists,  // exists
};

/// Name used in AST dumps ("WeakAnd", "InnerForall", ...).
std::string_view node_kind_name(NodeKind kind) noexcept;

bool is_primitive(NodeKind kind) noexcept;
bool is_unary(NodeKind kind) noexcept;
bool is_binary(NodeKind kind) noexcept;
bool is_quantifier(NodeKind kind) noexcept;
/// True for the strong connectives and the Baaz delta.
bool is_fuzzy_only(NodeKind kind) noexcept;

/// Immutable formula tree. Copies share structure.
class Formula {
 public:
  static Formula atom(std::string predicate, std::vector<Term> terms = {});
  static Formula unary(NodeKind kind, Formula operand);
  static Formula binary(NodeKind kind, Formula lhs, Formula rhs);
  static Formula quantifier(NodeKind kind, std::string variable, Formula body);

  NodeKind kind() const noexcept;

  // Atom
  const std::string& predicate() const;
  const std::vector<Term>& terms() const;
  // Unary
  const Formula& operand() const;
  // Binary
  const Formula& lhs() const;
  const Formula& rhs() const;
  // Quantifier
  const std::string& variable() const;
  const Formula& body() const;

  /// Structural equality.
  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Predicate symbols with arities and constant symbols. Names are disjoint
/// between the two kinds.
class Signature {
 public:
  /// Throws SignatureError on an arity clash or a name used as a constant.
  void add_predicate(const std::string& name, int arity);
  /// Throws SignatureError if the name is a predicate.
  void add_constant(const std::string& name);
  /// Adds E!/1.
  void add_existence() { add_predicate(std::string(kExistence), 1); }
  /// Adds every symbol of `other`.
  void merge(const Signature& other);

  std::optional<int> arity(std::string_view predicate) const;
  bool has_predicate(std::string_view name) const { return arity(name).has_value(); }
  bool has_constant(std::string_view name) const;
  bool has_existence() const { return has_predicate(kExistence); }

  const std::map<std::string, int, std::less<>>& predicates() const noexcept {
    return predicates_;
  }
  const std::set<std::string, std::less<>>& constants() const noexcept { return constants_; }

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::map<std::string, int, std::less<>> predicates_;
  std::set<std::string, std::less<>> constants_;
};

struct ParseOptions {
  Logic logic = Logic::FourValued;
  /// Declares E!/1 implicitly.
  bool free_logic = true;
  /// Reject symbols the signature does not declare.
  bool strict = false;
  /// Extra identifiers to treat as free variables when unbound.
  std::set<std::string, std::less<>> free_variables;
};

/// Whether an unbound identifier in term position is read as a free
/// variable: a single letter u-z optionally followed by digits or
/// underscores (x, y1, z_2). Declared constants take precedence.
bool looks_like_variable(std::string_view name) noexcept;

/// Parses one formula. Identifiers bound by an enclosing quantifier are
/// variables; unbound identifiers are constants unless declared (or shaped)
/// as free variables. Throws ParseError carrying the 1-based column.
Formula parse(std::string_view text, const Signature& signature, const ParseOptions& options);
Formula parse(std::string_view text, const ParseOptions& options = {});

/// Expands sugar into primitive connectives for the given logic:
///   !a       ~#a
///   a => b   ~a | b            (~a || b in fuzzy mode)
///   %a       (#a | #~a) & (~#a | ~#~a)     (strong versions in fuzzy mode)
///   forall x. a   Pi x. (E!(x) => a)   with => expanded as above
///   exists x. a   Sigma x. (E!(x) & a)
/// Throws SignatureError on inner quantifiers when `free_logic` is off.
Formula desugar(const Formula& f, Logic logic, bool free_logic = true);

bool is_desugared(const Formula& f);
bool contains_quantifier(const Formula& f);
bool contains_inner_quantifier(const Formula& f);
/// First fuzzy-only node kind in `f`, if any.
std::optional<NodeKind> find_fuzzy_only(const Formula& f);

std::set<std::string> free_vars(const Formula& f);
inline bool is_sentence(const Formula& f) { return free_vars(f).empty(); }

/// Predicates (with arities) and constants occurring in `f`; E!/1 is added
/// when `f` contains an inner quantifier. Throws SignatureError on clashes.
Signature collect_signature(const Formula& f);

/// Minimal-parenthesis rendering that parses back to the same tree.
std::string pretty_print(const Formula& f);
/// Constructor-style dump, e.g. `WeakAnd(Atom P(c), Neg(Atom Q(c)))`.
std::string dump(const Formula& f);

}  // namespace bilogic
