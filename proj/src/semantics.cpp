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

#include "bilogic/semantics.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "evaluator.hpp"

namespace bilogic {

// --- Vocabulary -------------------------------------------------------------

Vocabulary::Vocabulary(const Signature& signature) {
  for (const auto& [name, arity] : signature.predicates()) {
    predicates_.push_back(name);
    arities_.push_back(arity);
  }
  constants_.assign(signature.constants().begin(), signature.constants().end());
}

std::optional<std::size_t> Vocabulary::predicate_index(std::string_view name) const {
  auto it = std::lower_bound(predicates_.begin(), predicates_.end(), name);
  if (it == predicates_.end() || *it != name) return std::nullopt;
  return static_cast<std::size_t>(it - predicates_.begin());
}

std::optional<std::size_t> Vocabulary::constant_index(std::string_view name) const {
  auto it = std::lower_bound(constants_.begin(), constants_.end(), name);
  if (it == constants_.end() || *it != name) return std::nullopt;
  return static_cast<std::size_t>(it - constants_.begin());
}

Signature Vocabulary::signature() const {
  Signature sig;
  for (std::size_t i = 0; i < predicates_.size(); ++i) sig.add_predicate(predicates_[i], arities_[i]);
  for (const auto& c : constants_) sig.add_constant(c);
  return sig;
}

// --- Interpretation ---------------------------------------------------------

template <class V>
Interpretation<V>::Interpretation(std::shared_ptr<const Vocabulary> vocabulary,
                                  std::vector<std::string> domain, Logic logic, V fill)
    : vocabulary_(std::move(vocabulary)),
      domain_(std::move(domain)),
      logic_(logic),
      constants_(vocabulary_->constant_count(), 0) {
  if (domain_.empty()) throw ModelError("the domain must be non-empty");
  tables_.reserve(vocabulary_->predicate_count());
  for (std::size_t p = 0; p < vocabulary_->predicate_count(); ++p) {
    std::size_t size = 1;
    for (int i = 0; i < vocabulary_->arity(p); ++i) size *= domain_.size();
    tables_.emplace_back(size, fill);
  }
}

template <class V>
std::size_t Interpretation<V>::offset(std::size_t predicate,
                                      std::span<const std::size_t> args) const {
  if (args.size() != static_cast<std::size_t>(vocabulary_->arity(predicate))) {
    throw EvalError("wrong number of arguments for '" + vocabulary_->predicate_name(predicate) + "'");
  }
  std::size_t offset = 0;
  for (std::size_t a : args) offset = offset * domain_.size() + a;
  return offset;
}

template class Interpretation<TruthValue>;
template class Interpretation<GridValue>;

namespace {

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string tuple_text(const std::vector<std::string>& tuple) {
  return "(" + join(tuple, ",") + ")";
}

template <class V, class Convert>
Interpretation<V> build(const Model& model, V fill, Convert convert) {
  auto violations = structural_violations(model);
  if (!violations.empty()) {
    std::string message = "invalid model: " + violations.front().message;
    if (violations.size() > 1) {
      message += " (and " + std::to_string(violations.size() - 1) + " more)";
    }
    throw ModelError(message);
  }
  Signature sig;
  for (const auto& [name, pred] : model.predicates) sig.add_predicate(name, pred.arity);
  for (const auto& [name, element] : model.constants) sig.add_constant(name);
  auto vocabulary = std::make_shared<const Vocabulary>(sig);

  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t i = 0; i < model.domain.size(); ++i) index.emplace(model.domain[i], i);

  Interpretation<V> out(vocabulary, model.domain, model.logic, fill);
  for (const auto& [name, element] : model.constants) {
    out.set_constant(*vocabulary->constant_index(name), index.at(element));
  }
  for (const auto& [name, pred] : model.predicates) {
    std::size_t p = *vocabulary->predicate_index(name);
    V def = convert(pred.default_value);
    for (std::size_t i = 0; i < out.table_size(p); ++i) out.set_value_at(p, i, def);
    std::vector<std::size_t> args(pred.arity);
    for (const auto& [tuple, value] : pred.values) {
      for (std::size_t i = 0; i < tuple.size(); ++i) args[i] = index.at(tuple[i]);
      out.set_value_at(p, out.offset(p, args), convert(value));
    }
  }
  return out;
}

// Canonical value order: positive component descending, then negative
// ascending (T, B, N, F at the corners).
template <class V>
bool canonical_less(const V& a, const V& b) {
  if (a.pos() != b.pos()) return a.pos() > b.pos();
  return a.neg() < b.neg();
}

TruthValue document_value(const TruthValue& v, Logic logic) {
  return logic == Logic::FourValued ? v.to_four_valued() : v.to_fuzzy();
}

TruthValue document_value(const GridValue& v, Logic logic) {
  return logic == Logic::FourValued ? v.to_four_valued() : v.to_truth_value();
}

template <class V>
Model document(const Interpretation<V>& m) {
  Model out;
  out.logic = m.logic();
  out.domain = m.domain();
  const Vocabulary& voc = m.vocabulary();
  for (std::size_t c = 0; c < voc.constant_count(); ++c) {
    out.constants[voc.constant_name(c)] = m.domain()[m.constant(c)];
  }
  std::size_t n = m.domain_size();
  for (std::size_t p = 0; p < voc.predicate_count(); ++p) {
    std::size_t size = m.table_size(p);
    // most frequent value becomes the default
    std::vector<std::pair<V, std::size_t>> counts;
    for (std::size_t i = 0; i < size; ++i) {
      const V& v = m.value_at(p, i);
      auto it = std::find_if(counts.begin(), counts.end(), [&](const auto& e) { return e.first == v; });
      if (it == counts.end()) counts.emplace_back(v, 1);
      else ++it->second;
    }
    auto best = counts.begin();
    for (auto it = counts.begin(); it != counts.end(); ++it) {
      if (it->second > best->second ||
          (it->second == best->second && canonical_less(it->first, best->first))) {
        best = it;
      }
    }
    PredicateInterpretation pred;
    pred.arity = voc.arity(p);
    pred.default_value = document_value(best->first, m.logic());
    std::vector<std::size_t> args(pred.arity, 0);
    for (std::size_t i = 0; i < size; ++i) {
      const V& v = m.value_at(p, i);
      if (!(v == best->first)) {
        std::vector<std::string> tuple;
        for (std::size_t a : args) tuple.push_back(m.domain()[a]);
        pred.values.emplace(std::move(tuple), document_value(v, m.logic()));
      }
      detail::next_assignment(args, n);
    }
    out.predicates.emplace(voc.predicate_name(p), std::move(pred));
  }
  return out;
}

template <class V>
std::vector<std::size_t> resolve_environment(const Interpretation<V>& m, const Environment& env,
                                             const std::vector<std::string>& order) {
  std::vector<std::size_t> slots;
  for (const auto& var : order) {
    auto it = env.find(var);
    if (it == env.end()) throw EvalError("unassigned free variable '" + var + "'");
    auto el = std::find(m.domain().begin(), m.domain().end(), it->second);
    if (el == m.domain().end()) {
      throw EvalError("variable '" + var + "' assigned to '" + it->second +
                      "', which is not a domain element");
    }
    slots.push_back(static_cast<std::size_t>(el - m.domain().begin()));
  }
  return slots;
}

template <class V>
bool existence_body_holds(const V& e, Logic logic) {
  if (logic == Logic::FourValued) return is_designated(circ(e));
  return is_designated(weak_and(circ(e), weak_or(e, bd_neg(e))));
}

std::size_t require_existence(const Vocabulary& voc) {
  auto e = voc.existence_index();
  if (!e || voc.arity(*e) != 1) {
    throw EvalError("the model has no unary existence predicate E!");
  }
  return *e;
}

}  // namespace

Interpretation<TruthValue> interpret(const Model& model) {
  return build<TruthValue>(
      model, model.logic == Logic::FourValued ? kNeither : kNeither.to_fuzzy(),
      [&](const TruthValue& v) { return document_value(v, model.logic); });
}

Interpretation<GridValue> interpret_on_grid(const Model& model, int grid) {
  if (grid < 1) throw ModelError("grid must be positive");
  try {
    return build<GridValue>(model, GridValue(0, 0, grid), [&](const TruthValue& v) {
      return GridValue::from_truth_value(v, grid);
    });
  } catch (const CarrierError& e) {
    throw ModelError(e.what());
  }
}

Model to_model(const Interpretation<TruthValue>& interpretation) { return document(interpretation); }
Model to_model(const Interpretation<GridValue>& interpretation) { return document(interpretation); }

template <class V>
V evaluate(const Interpretation<V>& m, const Environment& env, const Formula& f) {
  Formula prepared = detail::prepare(f, m.logic(), m.vocabulary());
  auto order = detail::free_order(prepared);
  detail::CompiledFormula compiled(prepared, m.vocabulary(), order);
  std::vector<std::size_t> slots = resolve_environment(m, env, order);
  slots.resize(compiled.slot_count(), 0);
  return compiled.evaluate(m, slots);
}

template TruthValue evaluate(const Interpretation<TruthValue>&, const Environment&, const Formula&);
template GridValue evaluate(const Interpretation<GridValue>&, const Environment&, const Formula&);

TruthValue eval(const Model& model, const Environment& env, const Formula& f) {
  return evaluate(interpret(model), env, f);
}

template <class V>
std::vector<std::pair<Environment, V>> evaluate_all(const Interpretation<V>& m, const Formula& f) {
  Formula prepared = detail::prepare(f, m.logic(), m.vocabulary());
  auto order = detail::free_order(prepared);
  detail::CompiledFormula compiled(prepared, m.vocabulary(), order);
  std::vector<std::size_t> slots(compiled.slot_count(), 0);
  std::span<std::size_t> assignment(slots.data(), order.size());
  std::vector<std::pair<Environment, V>> out;
  do {
    Environment env;
    for (std::size_t i = 0; i < order.size(); ++i) env[order[i]] = m.domain()[assignment[i]];
    out.emplace_back(std::move(env), compiled.evaluate(m, slots));
  } while (detail::next_assignment(assignment, m.domain_size()));
  return out;
}

template std::vector<std::pair<Environment, TruthValue>> evaluate_all(
    const Interpretation<TruthValue>&, const Formula&);
template std::vector<std::pair<Environment, GridValue>> evaluate_all(
    const Interpretation<GridValue>&, const Formula&);

std::vector<std::pair<Environment, TruthValue>> eval_all_environments(const Model& model,
                                                                      const Formula& f) {
  return evaluate_all(interpret(model), f);
}

// --- free logic -------------------------------------------------------------

std::string_view axiom_name(Axiom axiom) noexcept {
  switch (axiom) {
    case Axiom::Existence: return "existence";
    case Axiom::Normality: return "normality";
    case Axiom::Noncontradiction: return "noncontradiction";
  }
  return "?";
}

bool TheoryProfile::contains(Axiom axiom) const noexcept {
  switch (axiom) {
    case Axiom::Existence: return existence;
    case Axiom::Normality: return normality;
    case Axiom::Noncontradiction: return noncontradiction;
  }
  return false;
}

TheoryProfile TheoryProfile::parse(std::string_view text) {
  TheoryProfile out;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty() || item == "none") continue;
    if (item == "existence") out.existence = true;
    else if (item == "normality") out.normality = true;
    else if (item == "noncontradiction") out.noncontradiction = true;
    else if (item == "all") out = all();
    else throw std::invalid_argument("unknown axiom schema '" + std::string(item) + "'");
  }
  return out;
}

std::string TheoryProfile::to_string() const {
  std::vector<std::string> parts;
  if (existence) parts.emplace_back("existence");
  if (normality) parts.emplace_back("normality");
  if (noncontradiction) parts.emplace_back("noncontradiction");
  return parts.empty() ? "none" : join(parts, ",");
}

template <class V>
std::vector<std::size_t> inner_domain(const Interpretation<V>& m) {
  std::size_t e = require_existence(m.vocabulary());
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < m.domain_size(); ++a) {
    if (is_designated(m.value_at(e, a))) out.push_back(a);
  }
  return out;
}

template std::vector<std::size_t> inner_domain(const Interpretation<TruthValue>&);
template std::vector<std::size_t> inner_domain(const Interpretation<GridValue>&);

std::vector<std::string> inner_domain(const Model& model) {
  auto m = interpret(model);
  std::vector<std::string> out;
  for (std::size_t a : inner_domain(m)) out.push_back(m.domain()[a]);
  return out;
}

template <class V>
std::vector<AxiomFailure> axiom_failures(const Interpretation<V>& m, Axiom axiom) {
  const Vocabulary& voc = m.vocabulary();
  std::size_t e = require_existence(voc);
  std::vector<AxiomFailure> out;

  if (axiom == Axiom::Existence) {
    for (std::size_t a = 0; a < m.domain_size(); ++a) {
      if (!existence_body_holds(m.value_at(e, a), m.logic())) {
        out.push_back({voc.predicate_name(e), {m.domain()[a]}});
      }
    }
    return out;
  }

  std::vector<std::size_t> inner = inner_domain(m);
  for (std::size_t p = 0; p < voc.predicate_count(); ++p) {
    std::size_t arity = static_cast<std::size_t>(voc.arity(p));
    if (arity > 0 && inner.empty()) continue;  // vacuous
    std::vector<std::size_t> digits(arity, 0);
    std::vector<std::size_t> args(arity, 0);
    do {
      for (std::size_t i = 0; i < arity; ++i) args[i] = inner[digits[i]];
      const V& v = m.value(p, args);
      bool holds = axiom == Axiom::Normality
                       ? is_designated(circ(v))
                       : is_designated(bivalent_neg(weak_and(v, bd_neg(v))));
      if (!holds) {
        AxiomFailure failure{voc.predicate_name(p), {}};
        for (std::size_t a : args) failure.tuple.push_back(m.domain()[a]);
        out.push_back(std::move(failure));
      }
    } while (detail::next_assignment(digits, inner.size()));
  }
  return out;
}

template std::vector<AxiomFailure> axiom_failures(const Interpretation<TruthValue>&, Axiom);
template std::vector<AxiomFailure> axiom_failures(const Interpretation<GridValue>&, Axiom);

std::vector<AxiomFailure> axiom_failures(const Model& model, Axiom axiom) {
  return axiom_failures(interpret(model), axiom);
}

bool check_existence_axiom(const Model& model) {
  return axiom_failures(model, Axiom::Existence).empty();
}

bool check_normality_axiom(const Model& model) {
  return axiom_failures(model, Axiom::Normality).empty();
}

bool check_noncontradiction_axiom(const Model& model) {
  return axiom_failures(model, Axiom::Noncontradiction).empty();
}

std::vector<std::string> existence_normal_not_bivalent(const Model& model) {
  auto m = interpret(model);
  std::size_t e = require_existence(m.vocabulary());
  std::vector<std::string> out;
  if (m.logic() == Logic::FourValued) return out;
  for (std::size_t a = 0; a < m.domain_size(); ++a) {
    const TruthValue& v = m.value_at(e, a);
    if (is_designated(circ(v)) && !existence_body_holds(v, m.logic())) {
      out.push_back(m.domain()[a]);
    }
  }
  return out;
}

// --- validation -------------------------------------------------------------

std::string_view violation_kind_name(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::EmptyDomain: return "empty_domain";
    case ViolationKind::DuplicateElement: return "duplicate_element";
    case ViolationKind::CarrierMismatch: return "carrier_mismatch";
    case ViolationKind::ConstantOutsideDomain: return "constant_outside_domain";
    case ViolationKind::MissingConstant: return "missing_constant";
    case ViolationKind::MissingPredicate: return "missing_predicate";
    case ViolationKind::ArityMismatch: return "arity_mismatch";
    case ViolationKind::BadTuple: return "bad_tuple";
    case ViolationKind::SymbolClash: return "symbol_clash";
    case ViolationKind::AxiomFailure: return "axiom_failure";
  }
  return "?";
}

std::vector<Violation> structural_violations(const Model& model) {
  std::vector<Violation> out;
  auto add = [&](ViolationKind kind, std::string message, std::string symbol = {},
                 std::vector<std::string> tuple = {}) {
    out.push_back({kind, std::move(message), std::move(symbol), std::move(tuple), std::nullopt});
  };

  if (model.domain.empty()) add(ViolationKind::EmptyDomain, "the domain is empty");
  std::set<std::string, std::less<>> elements;
  for (const auto& e : model.domain) {
    if (!elements.insert(e).second) {
      add(ViolationKind::DuplicateElement, "domain element '" + e + "' is listed twice", e);
    }
  }

  for (const auto& [name, element] : model.constants) {
    if (!elements.contains(element)) {
      add(ViolationKind::ConstantOutsideDomain,
          "constant '" + name + "' is mapped to '" + element + "', which is not in the domain",
          name);
    }
    if (model.predicates.contains(name)) {
      add(ViolationKind::SymbolClash, "'" + name + "' is both a constant and a predicate", name);
    }
  }

  auto check_value = [&](const std::string& pred, const std::vector<std::string>& tuple,
                         const TruthValue& v) {
    if (model.logic == Logic::FourValued && !v.is_corner()) {
      add(ViolationKind::CarrierMismatch,
          "fuzzy value " + to_string(v) + " for " + pred + tuple_text(tuple) +
              " in a four-valued model",
          pred, tuple);
    }
  };

  for (const auto& [name, pred] : model.predicates) {
    if (pred.arity < 0) {
      add(ViolationKind::ArityMismatch, "predicate '" + name + "' has negative arity", name);
      continue;
    }
    if (name == kExistence && pred.arity != 1) {
      add(ViolationKind::ArityMismatch, "the existence predicate E! must be unary", name);
    }
    check_value(name, {}, pred.default_value);
    for (const auto& [tuple, value] : pred.values) {
      if (tuple.size() != static_cast<std::size_t>(pred.arity)) {
        add(ViolationKind::BadTuple,
            "tuple " + tuple_text(tuple) + " of '" + name + "' has " +
                std::to_string(tuple.size()) + " component(s), expected " +
                std::to_string(pred.arity),
            name, tuple);
        continue;
      }
      for (const auto& e : tuple) {
        if (!elements.contains(e)) {
          add(ViolationKind::BadTuple,
              "tuple " + tuple_text(tuple) + " of '" + name + "' mentions unknown element '" +
                  e + "'",
              name, tuple);
          break;
        }
      }
      check_value(name, tuple, value);
    }
  }
  return out;
}

std::vector<Violation> validate_model(const Model& model, const Signature& signature,
                                      const ValidationOptions& options) {
  std::vector<Violation> out = structural_violations(model);
  bool structurally_sound = out.empty();
  auto add = [&](ViolationKind kind, std::string message, std::string symbol = {}) {
    out.push_back({kind, std::move(message), std::move(symbol), {}, std::nullopt});
  };

  for (const auto& name : signature.constants()) {
    if (!model.constants.contains(name)) {
      add(ViolationKind::MissingConstant, "constant '" + name + "' is not interpreted", name);
    }
  }
  for (const auto& [name, arity] : signature.predicates()) {
    auto it = model.predicates.find(name);
    if (it == model.predicates.end()) {
      add(ViolationKind::MissingPredicate, "predicate '" + name + "' is not interpreted", name);
    } else if (it->second.arity != arity) {
      add(ViolationKind::ArityMismatch,
          "predicate '" + name + "' has arity " + std::to_string(it->second.arity) +
              " in the model but " + std::to_string(arity) + " in the formula signature",
          name);
    }
  }

  const TheoryProfile& profile = options.profile;
  if (profile.empty()) return out;
  if (!model.has_existence()) {
    add(ViolationKind::MissingPredicate,
        "the theory profile requires the existence predicate E!", std::string(kExistence));
    return out;
  }
  if (!structurally_sound) return out;

  auto m = interpret(model);
  for (Axiom axiom : {Axiom::Existence, Axiom::Normality, Axiom::Noncontradiction}) {
    if (!profile.contains(axiom)) continue;
    for (auto& failure : axiom_failures(m, axiom)) {
      Violation v{ViolationKind::AxiomFailure,
                  std::string(axiom_name(axiom)) + " axiom fails at " + failure.predicate +
                      tuple_text(failure.tuple),
                  failure.predicate, failure.tuple, axiom};
      out.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace bilogic
