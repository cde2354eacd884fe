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

#include "evaluator.hpp"

#include <algorithm>

namespace bilogic::detail {

CompiledFormula::CompiledFormula(const Formula& desugared, const Vocabulary& vocabulary,
                                 const std::vector<std::string>& free_order) {
  free_count_ = free_order.size();
  slot_count_ = free_count_;
  std::vector<std::pair<std::string, std::uint32_t>> scope;
  root_ = compile(desugared, vocabulary, scope, free_order);
}

std::uint32_t CompiledFormula::compile(const Formula& f, const Vocabulary& vocabulary,
                                       std::vector<std::pair<std::string, std::uint32_t>>& scope,
                                       const std::vector<std::string>& free_order) {
  NodeKind k = f.kind();
  if (!is_primitive(k)) {
    throw EvalError("internal: sugar node " + std::string(node_kind_name(k)) +
                    " reached the evaluator");
  }
  if (is_fuzzy_only(k)) fuzzy_only_ = true;

  Op op{k, 0, 0, {}};
  if (k == NodeKind::Atom) {
    auto p = vocabulary.predicate_index(f.predicate());
    if (!p) throw EvalError("unknown predicate '" + f.predicate() + "'");
    if (vocabulary.arity(*p) != static_cast<int>(f.terms().size())) {
      throw EvalError("predicate '" + f.predicate() + "' has arity " +
                      std::to_string(vocabulary.arity(*p)) + " but is applied to " +
                      std::to_string(f.terms().size()) + " argument(s)");
    }
    op.a = static_cast<std::uint32_t>(*p);
    for (const Term& t : f.terms()) {
      if (t.is_variable()) {
        auto bound = std::find_if(scope.rbegin(), scope.rend(),
                                  [&](const auto& entry) { return entry.first == t.name; });
        if (bound != scope.rend()) {
          op.args.push_back({true, bound->second});
          continue;
        }
        auto free = std::find(free_order.begin(), free_order.end(), t.name);
        if (free == free_order.end()) {
          throw EvalError("unassigned free variable '" + t.name + "'");
        }
        op.args.push_back({true, static_cast<std::uint32_t>(free - free_order.begin())});
      } else {
        auto c = vocabulary.constant_index(t.name);
        if (!c) throw EvalError("unknown constant '" + t.name + "'");
        op.args.push_back({false, static_cast<std::uint32_t>(*c)});
      }
    }
  } else if (is_unary(k)) {
    op.a = compile(f.operand(), vocabulary, scope, free_order);
  } else if (is_binary(k)) {
    op.a = compile(f.lhs(), vocabulary, scope, free_order);
    op.b = compile(f.rhs(), vocabulary, scope, free_order);
  } else {
    auto slot = static_cast<std::uint32_t>(slot_count_++);
    scope.emplace_back(f.variable(), slot);
    op.a = compile(f.body(), vocabulary, scope, free_order);
    scope.pop_back();
    op.b = slot;
  }
  ops_.push_back(std::move(op));
  return static_cast<std::uint32_t>(ops_.size() - 1);
}

template <class V>
V CompiledFormula::evaluate(const Interpretation<V>& interpretation,
                            std::span<std::size_t> slots) const {
  return run(root_, interpretation, slots);
}

template <class V>
V CompiledFormula::run(std::uint32_t index, const Interpretation<V>& m,
                       std::span<std::size_t> slots) const {
  const Op& op = ops_[index];
  switch (op.kind) {
    case NodeKind::Atom: {
      std::size_t offset = 0;
      for (const Arg& arg : op.args) {
        std::size_t element = arg.is_slot ? slots[arg.index] : m.constant(arg.index);
        offset = offset * m.domain_size() + element;
      }
      return m.value_at(op.a, offset);
    }
    case NodeKind::Neg: return bd_neg(run(op.a, m, slots));
    case NodeKind::BdDelta: return bd_delta(run(op.a, m, slots));
    case NodeKind::BaazDelta: return baaz_delta(run(op.a, m, slots));
    case NodeKind::WeakAnd: return weak_and(run(op.a, m, slots), run(op.b, m, slots));
    case NodeKind::WeakOr: return weak_or(run(op.a, m, slots), run(op.b, m, slots));
    case NodeKind::StrongAnd: return strong_and(run(op.a, m, slots), run(op.b, m, slots));
    case NodeKind::StrongOr: return strong_or(run(op.a, m, slots), run(op.b, m, slots));
    case NodeKind::OuterForall:
    case NodeKind::OuterExists: {
      // inf/sup over the domain = meet/join in the truth order
      bool forall = op.kind == NodeKind::OuterForall;
      slots[op.b] = 0;
      V acc = run(op.a, m, slots);
      for (std::size_t e = 1; e < m.domain_size(); ++e) {
        slots[op.b] = e;
        V v = run(op.a, m, slots);
        acc = forall ? weak_and(acc, v) : weak_or(acc, v);
      }
      return acc;
    }
    default:
      break;
  }
  throw EvalError("internal: unexpected node in compiled formula");
}

template TruthValue CompiledFormula::evaluate(const Interpretation<TruthValue>&,
                                              std::span<std::size_t>) const;
template GridValue CompiledFormula::evaluate(const Interpretation<GridValue>&,
                                             std::span<std::size_t>) const;

Formula prepare(const Formula& f, Logic logic, const Vocabulary& vocabulary) {
  if (logic == Logic::FourValued) {
    if (auto kind = find_fuzzy_only(f)) {
      throw EvalError("fuzzy-only connective " + std::string(node_kind_name(*kind)) +
                      " in a four-valued model");
    }
  }
  bool has_e = vocabulary.existence_index().has_value();
  if (!has_e && contains_inner_quantifier(f)) {
    throw EvalError("inner quantifiers require the existence predicate E! in the model");
  }
  return desugar(f, logic, has_e);
}

std::vector<std::string> free_order(const Formula& f) {
  auto vars = free_vars(f);
  return {vars.begin(), vars.end()};
}

bool next_assignment(std::span<std::size_t> digits, std::size_t radix) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < radix) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace bilogic::detail
