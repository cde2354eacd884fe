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

namespace bilogic {

namespace {

int precedence(NodeKind k) {
  switch (k) {
    case NodeKind::Implies: return 1;
    case NodeKind::WeakOr: return 2;
    case NodeKind::StrongOr: return 3;
    case NodeKind::WeakAnd: return 4;
    case NodeKind::StrongAnd: return 5;
    case NodeKind::Atom: return 7;
    default: return is_unary(k) ? 6 : 0;  // quantifiers bind loosest
  }
}

std::string_view symbol(NodeKind k) {
  switch (k) {
    case NodeKind::Neg: return "~";
    case NodeKind::BdDelta: return "#";
    case NodeKind::BaazDelta: return "@";
    case NodeKind::BivalentNeg: return "!";
    case NodeKind::Circ: return "%";
    case NodeKind::StrongAnd: return "&&";
    case NodeKind::WeakAnd: return "&";
    case NodeKind::StrongOr: return "||";
    case NodeKind::WeakOr: return "|";
    case NodeKind::Implies: return "=>";
    case NodeKind::OuterForall: return "Pi";
    case NodeKind::OuterExists: return "Sigma";
    case NodeKind::InnerForall: return "forall";
    case NodeKind::InnerExists: return "exists";
    case NodeKind::Atom: break;
  }
  return "";
}

std::string atom_text(const Formula& f) {
  std::string out = f.predicate();
  if (!f.terms().empty()) {
    out += '(';
    for (std::size_t i = 0; i < f.terms().size(); ++i) {
      if (i) out += ',';
      out += f.terms()[i].name;
    }
    out += ')';
  }
  return out;
}

// `rightmost` is true when nothing follows this subformula in its enclosing
// context; a quantifier's scope extends maximally right, so one that is not
// rightmost must be parenthesized.
std::string print(const Formula& f, bool rightmost) {
  NodeKind k = f.kind();
  if (k == NodeKind::Atom) return atom_text(f);

  if (is_quantifier(k)) {
    return std::string(symbol(k)) + " " + f.variable() + ". " + print(f.body(), true);
  }

  if (is_unary(k)) {
    const Formula& a = f.operand();
    bool parens = is_binary(a.kind()) || (is_quantifier(a.kind()) && !rightmost);
    std::string inner = parens ? "(" + print(a, true) + ")" : print(a, rightmost);
    return std::string(symbol(k)) + inner;
  }

  int p = precedence(k);
  bool right_assoc = k == NodeKind::Implies;
  const Formula& l = f.lhs();
  const Formula& r = f.rhs();

  bool lparens = is_quantifier(l.kind()) || precedence(l.kind()) < p ||
                 (precedence(l.kind()) == p && right_assoc);
  bool rparens = is_quantifier(r.kind())
                     ? !rightmost
                     : precedence(r.kind()) < p || (precedence(r.kind()) == p && !right_assoc);

  std::string ls = lparens ? "(" + print(l, true) + ")" : print(l, false);
  std::string rs = rparens ? "(" + print(r, true) + ")" : print(r, rightmost);
  return ls + " " + std::string(symbol(k)) + " " + rs;
}

}  // namespace

std::string pretty_print(const Formula& f) { return print(f, true); }

std::string dump(const Formula& f) {
  NodeKind k = f.kind();
  std::string name(node_kind_name(k));
  if (k == NodeKind::Atom) return name + " " + atom_text(f);
  if (is_unary(k)) return name + "(" + dump(f.operand()) + ")";
  if (is_binary(k)) return name + "(" + dump(f.lhs()) + ", " + dump(f.rhs()) + ")";
  return name + "(" + f.variable() + ", " + dump(f.body()) + ")";
}

}  // namespace bilogic
