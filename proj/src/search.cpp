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

#include "bilogic/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "evaluator.hpp"
#include "json_values.hpp"

namespace bilogic {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > kSaturated / b) return kSaturated;
  return a * b;
}

std::uint64_t add_sat(std::uint64_t a, std::uint64_t b) {
  return a > kSaturated - b ? kSaturated : a + b;
}

std::string count_text(std::uint64_t n) {
  return n == kSaturated ? "more than " + std::to_string(kSaturated) : std::to_string(n);
}

int effective_grid(Logic logic, int grid) { return logic == Logic::FourValued ? 1 : grid; }

}  // namespace

// --- truth tables -----------------------------------------------------------

namespace {

Signature propositional_signature(const Formula& f) {
  if (contains_quantifier(f)) {
    throw EvalError("truth tables need a propositional formula, but this one has a quantifier");
  }
  Signature sig = collect_signature(f);
  if (!sig.constants().empty()) {
    throw EvalError("truth tables need a propositional formula, but this one has terms");
  }
  for (const auto& [name, arity] : sig.predicates()) {
    if (arity != 0) {
      throw EvalError("truth tables need zero-ary atoms, but '" + name + "' has arity " +
                      std::to_string(arity));
    }
  }
  return sig;
}

}  // namespace

TruthTable truth_table(const Formula& f, Logic logic, int grid, std::uint64_t budget) {
  grid = effective_grid(logic, grid);
  Signature sig = propositional_signature(f);
  auto vocabulary = std::make_shared<const Vocabulary>(sig);
  std::vector<GridValue> values = grid_values(grid);

  std::size_t k = vocabulary->predicate_count();
  std::uint64_t rows = 1;
  for (std::size_t i = 0; i < k; ++i) rows = mul_sat(rows, values.size());
  if (rows > budget) {
    throw BudgetError("the truth table needs " + count_text(rows) + " rows, over the budget of " +
                          std::to_string(budget),
                      rows);
  }

  Formula prepared = detail::prepare(f, logic, *vocabulary);
  detail::CompiledFormula compiled(prepared, *vocabulary, {});
  std::vector<std::size_t> slots(compiled.slot_count(), 0);
  Interpretation<GridValue> m(vocabulary, {"e1"}, logic, values.front());

  TruthTable table;
  table.logic = logic;
  table.grid = grid;
  for (std::size_t i = 0; i < k; ++i) table.atoms.push_back(vocabulary->predicate_name(i));
  table.rows.reserve(rows);

  std::vector<std::size_t> digits(k, 0);
  do {
    TruthTableRow row{{}, values.front()};
    for (std::size_t i = 0; i < k; ++i) {
      m.set_value_at(i, 0, values[digits[i]]);
      row.inputs.push_back(values[digits[i]]);
    }
    row.value = compiled.evaluate(m, slots);
    table.rows.push_back(std::move(row));
  } while (detail::next_assignment(digits, values.size()));
  return table;
}

std::vector<GridValue> designated_set(const Formula& f, int grid) {
  Signature sig = propositional_signature(f);
  if (sig.predicates().size() != 1) {
    throw EvalError("designated_set needs exactly one atom, found " +
                    std::to_string(sig.predicates().size()));
  }
  TruthTable table = truth_table(f, Logic::Fuzzy, grid, kSaturated);
  std::vector<GridValue> out;
  for (const auto& row : table.rows) {
    if (is_designated(row.value)) out.push_back(row.inputs.front());
  }
  return out;
}

// --- model enumeration ------------------------------------------------------

ModelSpace::ModelSpace(const Signature& signature, std::size_t n, Logic logic, int grid,
                       bool free_logic)
    : vocabulary_(std::make_shared<const Vocabulary>(signature)),
      logic_(logic),
      grid_(grid),
      free_logic_(free_logic) {
  if (n == 0) throw ModelError("the domain size must be at least 1");
  if (logic == Logic::FourValued && grid != 1) {
    throw CarrierError("four-valued enumeration uses grid 1");
  }
  values_ = grid_values(grid);
  bivalent_ = {GridValue(grid, 0, grid), GridValue(0, grid, grid)};
  for (std::size_t i = 1; i <= n; ++i) domain_.push_back("e" + std::to_string(i));
  existence_ = vocabulary_->existence_index();

  for (std::size_t c = 0; c < vocabulary_->constant_count(); ++c) {
    digits_.push_back({true, c, 0, n});
  }
  for (std::size_t p = 0; p < vocabulary_->predicate_count(); ++p) {
    std::size_t tuples = 1;
    for (int i = 0; i < vocabulary_->arity(p); ++i) tuples *= n;
    bool bivalent = free_logic_ && existence_ == p;
    for (std::size_t t = 0; t < tuples; ++t) {
      digits_.push_back({false, p, t, bivalent ? bivalent_.size() : values_.size()});
    }
  }
  for (const Digit& d : digits_) size_ = mul_sat(size_, d.radix);
}

Interpretation<GridValue> ModelSpace::blank() const {
  return Interpretation<GridValue>(vocabulary_, domain_, logic_, values_.front());
}

void ModelSpace::assign(Interpretation<GridValue>& m, const Digit& d, std::size_t value) const {
  if (d.is_constant) {
    m.set_constant(d.symbol, value);
  } else {
    bool bivalent = free_logic_ && existence_ == d.symbol;
    m.set_value_at(d.symbol, d.offset, bivalent ? bivalent_[value] : values_[value]);
  }
}

Interpretation<GridValue> ModelSpace::at(std::uint64_t index) const {
  if (index >= size_) throw std::out_of_range("model index out of range");
  Interpretation<GridValue> m = blank();
  for (std::size_t i = digits_.size(); i-- > 0;) {
    assign(m, digits_[i], index % digits_[i].radix);
    index /= digits_[i].radix;
  }
  return m;
}

void ModelSpace::scan(
    std::uint64_t first, std::uint64_t last,
    const std::function<bool(std::uint64_t, const Interpretation<GridValue>&)>& visit) const {
  last = std::min(last, size_);
  if (first >= last) return;
  Interpretation<GridValue> m = blank();
  std::vector<std::size_t> value(digits_.size(), 0);
  std::uint64_t rest = first;
  for (std::size_t i = digits_.size(); i-- > 0;) {
    value[i] = rest % digits_[i].radix;
    rest /= digits_[i].radix;
    assign(m, digits_[i], value[i]);
  }
  for (std::uint64_t index = first;;) {
    if (!visit(index, m)) return;
    if (++index == last) return;
    for (std::size_t i = digits_.size(); i-- > 0;) {
      bool carry = ++value[i] == digits_[i].radix;
      if (carry) value[i] = 0;
      assign(m, digits_[i], value[i]);
      if (!carry) break;
    }
  }
}

std::uint64_t count_models(const Signature& signature, std::size_t max_size, Logic logic,
                           int grid, bool free_logic) {
  std::uint64_t total = 0;
  for (std::size_t n = 1; n <= max_size; ++n) {
    total = add_sat(total, ModelSpace(signature, n, logic, effective_grid(logic, grid), free_logic)
                               .size());
  }
  return total;
}

std::vector<Model> enumerate_models(const Signature& signature, std::size_t n, Logic logic,
                                    int grid, bool free_logic, std::uint64_t budget) {
  ModelSpace space(signature, n, logic, effective_grid(logic, grid), free_logic);
  if (space.size() > budget) {
    throw BudgetError("enumeration needs " + count_text(space.size()) +
                          " models, over the budget of " + std::to_string(budget),
                      space.size());
  }
  std::vector<Model> out;
  out.reserve(space.size());
  space.scan(0, space.size(), [&](std::uint64_t, const Interpretation<GridValue>& m) {
    out.push_back(to_model(m));
    return true;
  });
  return out;
}

// --- entailment -------------------------------------------------------------

Signature query_signature(const EntailmentQuery& query) {
  Signature sig = query.extra_signature;
  for (const auto& p : query.premises) sig.merge(collect_signature(p));
  sig.merge(collect_signature(query.conclusion));
  if (!query.profile.empty()) sig.add_existence();
  return sig;
}

namespace {

constexpr std::uint64_t kBlock = 2048;

struct CompiledQuery {
  std::vector<detail::CompiledFormula> premises;
  detail::CompiledFormula conclusion;
  std::vector<std::string> conclusion_vars;
  std::size_t slots = 0;
};

detail::CompiledFormula compile_for(const Formula& f, const EntailmentQuery& q,
                                    const Vocabulary& vocabulary,
                                    std::vector<std::string>* vars = nullptr) {
  if (!q.free_logic && contains_inner_quantifier(f)) {
    throw SignatureError("inner quantifiers need free-logic mode");
  }
  Formula prepared = detail::prepare(f, q.logic, vocabulary);
  auto order = detail::free_order(prepared);
  if (vars) *vars = order;
  return detail::CompiledFormula(prepared, vocabulary, order);
}

// Whether `f` is designated under every assignment of its free variables.
bool designated_everywhere(const detail::CompiledFormula& f, const Interpretation<GridValue>& m,
                           std::vector<std::size_t>& slots) {
  std::span<std::size_t> free(slots.data(), f.free_count());
  std::fill(free.begin(), free.end(), 0);
  do {
    if (!is_designated(f.evaluate(m, slots))) return false;
  } while (detail::next_assignment(free, m.domain_size()));
  return true;
}

// First conclusion assignment (canonical order) that is not designated.
std::optional<std::vector<std::size_t>> failing_assignment(const detail::CompiledFormula& f,
                                                           const Interpretation<GridValue>& m,
                                                           std::vector<std::size_t>& slots) {
  std::span<std::size_t> free(slots.data(), f.free_count());
  std::fill(free.begin(), free.end(), 0);
  do {
    if (!is_designated(f.evaluate(m, slots))) return std::vector<std::size_t>(free.begin(), free.end());
  } while (detail::next_assignment(free, m.domain_size()));
  return std::nullopt;
}

bool in_profile(const TheoryProfile& profile, const Interpretation<GridValue>& m) {
  for (Axiom a : {Axiom::Existence, Axiom::Normality, Axiom::Noncontradiction}) {
    if (profile.contains(a) && !axiom_failures(m, a).empty()) return false;
  }
  return true;
}

struct Hit {
  std::uint64_t index;
  std::vector<std::size_t> assignment;
};

// Scans one domain size. Returns the canonically first countermodel.
std::optional<Hit> search_size(const ModelSpace& space, const CompiledQuery& q,
                               const TheoryProfile& profile, unsigned workers) {
  std::atomic<std::uint64_t> next_block{0};
  std::atomic<std::uint64_t> best{kSaturated};
  std::mutex mutex;
  std::optional<Hit> winner;

  auto work = [&] {
    std::vector<std::size_t> slots(q.slots, 0);
    std::optional<Hit> mine;
    while (true) {
      std::uint64_t block = next_block.fetch_add(1, std::memory_order_relaxed);
      if (block > space.size() / kBlock) break;
      std::uint64_t first = block * kBlock;
      if (first >= space.size() || first >= best.load(std::memory_order_acquire)) break;
      space.scan(first, first + kBlock, [&](std::uint64_t index, const Interpretation<GridValue>& m) {
        if (index >= best.load(std::memory_order_acquire)) return false;
        if (!in_profile(profile, m)) return true;
        for (const auto& p : q.premises) {
          if (!designated_everywhere(p, m, slots)) return true;
        }
        auto failing = failing_assignment(q.conclusion, m, slots);
        if (!failing) return true;
        mine = Hit{index, std::move(*failing)};
        std::uint64_t current = best.load(std::memory_order_acquire);
        while (index < current &&
               !best.compare_exchange_weak(current, index, std::memory_order_acq_rel)) {
        }
        return false;  // later indices in this block cannot win
      });
      if (mine) break;  // blocks claimed later start beyond this hit
    }
    if (mine) {
      std::lock_guard lock(mutex);
      if (!winner || mine->index < winner->index) winner = std::move(mine);
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
  }
  return winner;
}

}  // namespace

Verdict entails(const EntailmentQuery& query) {
  auto start = std::chrono::steady_clock::now();
  if (query.max_domain_size < 1) throw std::invalid_argument("the bound must be at least 1");
  if (query.logic == Logic::Fuzzy && query.grid < 1) {
    throw std::invalid_argument("the grid must be at least 1");
  }
  if (!query.profile.empty() && !query.free_logic) {
    throw std::invalid_argument("theory profiles need free-logic mode");
  }
  int grid = effective_grid(query.logic, query.grid);

  Signature sig = query_signature(query);
  std::uint64_t total = count_models(sig, query.max_domain_size, query.logic, grid, query.free_logic);
  if (total > query.budget) {
    throw BudgetError("bounded search needs " + count_text(total) +
                          " models, over the budget of " + std::to_string(query.budget),
                      total);
  }

  Verdict verdict;
  verdict.bound = query.max_domain_size;
  if (query.logic == Logic::Fuzzy) verdict.grid = grid;

  std::uint64_t examined = 0;
  for (std::size_t n = 1; n <= query.max_domain_size; ++n) {
    ModelSpace space(sig, n, query.logic, grid, query.free_logic);
    const Vocabulary& vocabulary = space.vocabulary();
    std::vector<std::string> vars;
    auto conclusion = compile_for(query.conclusion, query, vocabulary, &vars);
    CompiledQuery q{{}, std::move(conclusion), std::move(vars), 0};
    q.slots = q.conclusion.slot_count();
    for (const auto& p : query.premises) {
      q.premises.push_back(compile_for(p, query, vocabulary));
      q.slots = std::max(q.slots, q.premises.back().slot_count());
    }

    auto hit = search_size(space, q, query.profile, std::max(1u, query.workers));
    if (hit) {
      verdict.outcome = Verdict::Outcome::Countermodel;
      verdict.models_examined = examined + hit->index + 1;
      Interpretation<GridValue> m = space.at(hit->index);
      verdict.witness = to_model(m);
      for (std::size_t i = 0; i < q.conclusion_vars.size(); ++i) {
        verdict.environment[q.conclusion_vars[i]] = m.domain()[hit->assignment[i]];
      }
      break;
    }
    examined += space.size();
  }
  if (verdict.holds()) verdict.models_examined = examined;
  verdict.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return verdict;
}

Verdict tautology_check(const Formula& f, std::size_t bound, Logic logic, int grid,
                        bool free_logic) {
  EntailmentQuery q;
  q.conclusion = f;
  q.logic = logic;
  q.max_domain_size = bound;
  q.grid = grid;
  q.free_logic = free_logic;
  return entails(q);
}

std::string verdict_to_json(const Verdict& v, int indent) {
  detail::ordered_json out;
  out["outcome"] = v.holds() ? "holds_up_to_bound" : "countermodel";
  out["bound"] = v.bound;
  out["grid"] = v.grid ? detail::ordered_json(*v.grid) : detail::ordered_json(nullptr);
  if (v.witness) {
    detail::ordered_json w;
    w["model"] = detail::model_json(*v.witness);
    w["environment"] = detail::environment_json(v.environment);
    out["witness"] = std::move(w);
  } else {
    out["witness"] = nullptr;
  }
  out["models_examined"] = v.models_examined;
  out["elapsed_ms"] = v.elapsed_ms;
  return out.dump(indent);
}

}  // namespace bilogic
