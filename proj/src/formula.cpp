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

#include <algorithm>
#include <stdexcept>

#include "bilogic/syntax.hpp"

namespace bilogic {

struct Formula::Node {
  NodeKind kind;
  std::string name;  // predicate (Atom) or bound variable (quantifiers)
  std::vector<Term> terms;
  std::vector<Formula> children;
};

std::string_view node_kind_name(NodeKind kind) noexcept {
  switch (kind) {
    case NodeKind::Atom: return "Atom";
    case NodeKind::Neg: return "Neg";
    case NodeKind::WeakAnd: return "WeakAnd";
    case NodeKind::WeakOr: return "WeakOr";
    case NodeKind::BdDelta: return "BdDelta";
    case NodeKind::StrongAnd: return "StrongAnd";
    case NodeKind::StrongOr: return "StrongOr";
    case NodeKind::BaazDelta: return "BaazDelta";
    case NodeKind::OuterForall: return "OuterForall";
    case NodeKind::OuterExists: return "OuterExists";
    case NodeKind::BivalentNeg: return "BivalentNeg";
    case NodeKind::Implies: return "Implies";
    case NodeKind::Circ: return "Circ";
    case NodeKind::InnerForall: return "InnerForall";
    case NodeKind::InnerExists: return "InnerExists";
  }
  return "?";
}

bool is_primitive(NodeKind kind) noexcept {
  switch (kind) {
    case NodeKind::BivalentNeg:
    case NodeKind::Implies:
    case NodeKind::Circ:
    case NodeKind::InnerForall:
    case NodeKind::InnerExists:
      return false;
    default:
      return true;
  }
}

bool is_unary(NodeKind kind) noexcept {
  switch (kind) {
    case NodeKind::Neg:
    case NodeKind::BdDelta:
    case NodeKind::BaazDelta:
    case NodeKind::BivalentNeg:
    case NodeKind::Circ:
      return true;
    default:
      return false;
  }
}

bool is_binary(NodeKind kind) noexcept {
  switch (kind) {
    case NodeKind::WeakAnd:
    case NodeKind::WeakOr:
    case NodeKind::StrongAnd:
    case NodeKind::StrongOr:
    case NodeKind::Implies:
      return true;
    default:
      return false;
  }
}

bool is_quantifier(NodeKind kind) noexcept {
  switch (kind) {
    case NodeKind::OuterForall:
    case NodeKind::OuterExists:
    case NodeKind::InnerForall:
    case NodeKind::InnerExists:
      return true;
    default:
      return false;
  }
}

bool is_fuzzy_only(NodeKind kind) noexcept {
  return kind == NodeKind::StrongAnd || kind == NodeKind::StrongOr ||
         kind == NodeKind::BaazDelta;
}

Formula Formula::atom(std::string predicate, std::vector<Term> terms) {
  return Formula(std::make_shared<const Node>(
      Node{NodeKind::Atom, std::move(predicate), std::move(terms), {}}));
}

Formula Formula::unary(NodeKind kind, Formula operand) {
  if (!is_unary(kind)) throw std::invalid_argument("not a unary node kind");
  return Formula(std::make_shared<const Node>(Node{kind, {}, {}, {std::move(operand)}}));
}

Formula Formula::binary(NodeKind kind, Formula lhs, Formula rhs) {
  if (!is_binary(kind)) throw std::invalid_argument("not a binary node kind");
  return Formula(
      std::make_shared<const Node>(Node{kind, {}, {}, {std::move(lhs), std::move(rhs)}}));
}

Formula Formula::quantifier(NodeKind kind, std::string variable, Formula body) {
  if (!is_quantifier(kind)) throw std::invalid_argument("not a quantifier node kind");
  return Formula(
      std::make_shared<const Node>(Node{kind, std::move(variable), {}, {std::move(body)}}));
}

NodeKind Formula::kind() const noexcept { return node_->kind; }

const std::string& Formula::predicate() const {
  if (node_->kind != NodeKind::Atom) throw std::logic_error("predicate() on non-atom");
  return node_->name;
}

const std::vector<Term>& Formula::terms() const {
  if (node_->kind != NodeKind::Atom) throw std::logic_error("terms() on non-atom");
  return node_->terms;
}

const Formula& Formula::operand() const {
  if (!is_unary(node_->kind)) throw std::logic_error("operand() on non-unary node");
  return node_->children[0];
}

const Formula& Formula::lhs() const {
  if (!is_binary(node_->kind)) throw std::logic_error("lhs() on non-binary node");
  return node_->children[0];
}

const Formula& Formula::rhs() const {
  if (!is_binary(node_->kind)) throw std::logic_error("rhs() on non-binary node");
  return node_->children[1];
}

const std::string& Formula::variable() const {
  if (!is_quantifier(node_->kind)) throw std::logic_error("variable() on non-quantifier");
  return node_->name;
}

const Formula& Formula::body() const {
  if (!is_quantifier(node_->kind)) throw std::logic_error("body() on non-quantifier");
  return node_->children[0];
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.name == y.name && x.terms == y.terms && x.children == y.children;
}

// --- Signature --------------------------------------------------------------

void Signature::add_predicate(const std::string& name, int arity) {
  if (arity < 0) throw SignatureError("negative arity for predicate " + name);
  if (constants_.contains(name)) {
    throw SignatureError("symbol '" + name + "' used both as constant and predicate");
  }
  auto [it, inserted] = predicates_.emplace(name, arity);
  if (!inserted && it->second != arity) {
    throw SignatureError("predicate '" + name + "' used with arities " +
                         std::to_string(it->second) + " and " + std::to_string(arity));
  }
}

void Signature::add_constant(const std::string& name) {
  if (predicates_.contains(name)) {
    throw SignatureError("symbol '" + name + "' used both as predicate and constant");
  }
  constants_.insert(name);
}

void Signature::merge(const Signature& other) {
  for (const auto& [name, arity] : other.predicates_) add_predicate(name, arity);
  for (const auto& name : other.constants_) add_constant(name);
}

std::optional<int> Signature::arity(std::string_view predicate) const {
  auto it = predicates_.find(predicate);
  if (it == predicates_.end()) return std::nullopt;
  return it->second;
}

bool Signature::has_constant(std::string_view name) const { return constants_.contains(name); }

// --- traversals -------------------------------------------------------------

namespace {

template <class Pred>
bool any_node(const Formula& f, Pred pred) {
  if (pred(f)) return true;
  NodeKind k = f.kind();
  if (k == NodeKind::Atom) return false;
  if (is_unary(k)) return any_node(f.operand(), pred);
  if (is_binary(k)) return any_node(f.lhs(), pred) || any_node(f.rhs(), pred);
  return any_node(f.body(), pred);
}

void collect_free(const Formula& f, std::vector<std::string>& bound, std::set<std::string>& out) {
  NodeKind k = f.kind();
  if (k == NodeKind::Atom) {
    for (const auto& t : f.terms()) {
      if (t.is_variable() && std::find(bound.begin(), bound.end(), t.name) == bound.end()) {
        out.insert(t.name);
      }
    }
  } else if (is_unary(k)) {
    collect_free(f.operand(), bound, out);
  } else if (is_binary(k)) {
    collect_free(f.lhs(), bound, out);
    collect_free(f.rhs(), bound, out);
  } else {
    bound.push_back(f.variable());
    collect_free(f.body(), bound, out);
    bound.pop_back();
  }
}

void collect_symbols(const Formula& f, Signature& sig) {
  NodeKind k = f.kind();
  if (k == NodeKind::Atom) {
    sig.add_predicate(f.predicate(), static_cast<int>(f.terms().size()));
    for (const auto& t : f.terms()) {
      if (!t.is_variable()) sig.add_constant(t.name);
    }
  } else if (is_unary(k)) {
    collect_symbols(f.operand(), sig);
  } else if (is_binary(k)) {
    collect_symbols(f.lhs(), sig);
    collect_symbols(f.rhs(), sig);
  } else {
    if (k == NodeKind::InnerForall || k == NodeKind::InnerExists) sig.add_existence();
    collect_symbols(f.body(), sig);
  }
}

class Desugarer {
 public:
  Desugarer(Logic logic, bool free_logic) : logic_(logic), free_logic_(free_logic) {}

  Formula run(const Formula& f) const {
    NodeKind k = f.kind();
    switch (k) {
      case NodeKind::Atom:
        return f;
      case NodeKind::Neg:
      case NodeKind::BdDelta:
      case NodeKind::BaazDelta:
        return Formula::unary(k, run(f.operand()));
      case NodeKind::WeakAnd:
      case NodeKind::WeakOr:
      case NodeKind::StrongAnd:
      case NodeKind::StrongOr:
        return Formula::binary(k, run(f.lhs()), run(f.rhs()));
      case NodeKind::OuterForall:
      case NodeKind::OuterExists:
        return Formula::quantifier(k, f.variable(), run(f.body()));
      case NodeKind::BivalentNeg:
        return neg(delta(run(f.operand())));
      case NodeKind::Implies:
        return implication(run(f.lhs()), run(f.rhs()));
      case NodeKind::Circ: {
        Formula a = run(f.operand());
        Formula d = delta(a);
        Formula dn = delta(neg(a));
        return conj(disj(d, dn), disj(neg(d), neg(dn)));
      }
      case NodeKind::InnerForall:
        return Formula::quantifier(NodeKind::OuterForall, f.variable(),
                                   implication(exists_atom(f.variable()), run(f.body())));
      case NodeKind::InnerExists:
        return Formula::quantifier(
            NodeKind::OuterExists, f.variable(),
            Formula::binary(NodeKind::WeakAnd, exists_atom(f.variable()), run(f.body())));
    }
    return f;
  }

 private:
  static Formula neg(Formula a) { return Formula::unary(NodeKind::Neg, std::move(a)); }
  static Formula delta(Formula a) { return Formula::unary(NodeKind::BdDelta, std::move(a)); }

  Formula conj(Formula a, Formula b) const {
    return Formula::binary(logic_ == Logic::Fuzzy ? NodeKind::StrongAnd : NodeKind::WeakAnd,
                           std::move(a), std::move(b));
  }
  Formula disj(Formula a, Formula b) const {
    return Formula::binary(logic_ == Logic::Fuzzy ? NodeKind::StrongOr : NodeKind::WeakOr,
                           std::move(a), std::move(b));
  }
  Formula implication(Formula a, Formula b) const { return disj(neg(std::move(a)), std::move(b)); }

  Formula exists_atom(const std::string& var) const {
    if (!free_logic_) {
      throw SignatureError("inner quantifier over '" + var +
                           "' requires the existence predicate E! (free-logic mode)");
    }
    return Formula::atom(std::string(kExistence), {Term::variable(var)});
  }

  Logic logic_;
  bool free_logic_;
};

}  // namespace

Formula desugar(const Formula& f, Logic logic, bool free_logic) {
  return Desugarer(logic, free_logic).run(f);
}

bool is_desugared(const Formula& f) {
  return !any_node(f, [](const Formula& g) { return !is_primitive(g.kind()); });
}

bool contains_quantifier(const Formula& f) {
  return any_node(f, [](const Formula& g) { return is_quantifier(g.kind()); });
}

bool contains_inner_quantifier(const Formula& f) {
  return any_node(f, [](const Formula& g) {
    return g.kind() == NodeKind::InnerForall || g.kind() == NodeKind::InnerExists;
  });
}

std::optional<NodeKind> find_fuzzy_only(const Formula& f) {
  std::optional<NodeKind> found;
  any_node(f, [&](const Formula& g) {
    if (is_fuzzy_only(g.kind())) {
      found = g.kind();
      return true;
    }
    return false;
  });
  return found;
}

std::set<std::string> free_vars(const Formula& f) {
  std::vector<std::string> bound;
  std::set<std::string> out;
  collect_free(f, bound, out);
  return out;
}

Signature collect_signature(const Formula& f) {
  Signature sig;
  collect_symbols(f, sig);
  return sig;
}

}  // namespace bilogic
