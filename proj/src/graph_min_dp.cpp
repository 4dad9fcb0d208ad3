// Copyright 2026 The softeq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "softeq/graph_min_dp.hpp"

#include <algorithm>
#include <utility>

#include "softeq/error.hpp"
#include "softeq/occurrence.hpp"

namespace softeq {

DPTable::DPTable(Value lambda)
    : lambda_(lambda), cost_(cells(lambda), 0), choice_(cells(lambda), 0) {}

DPTable fill_dp_table(const Instance& instance, std::size_t max_cells) {
  instance.require_contiguous("max_equalities_dp");
  const Value lambda = instance.num_values();
  if (DPTable::cells(lambda) > max_cells)
    throw BudgetExceeded("max_equalities_dp: " + std::to_string(DPTable::cells(lambda)) +
                         " table cells exceed the cap of " + std::to_string(max_cells));
  DPTable table(lambda);

  // Variables sorted by max so that X[a,b] is a prefix scan per (a, b).
  std::vector<Interval> doms;
  doms.reserve(instance.num_variables());
  for (const Domain& d : instance.domains()) doms.push_back(d.hull());
  std::sort(doms.begin(), doms.end(),
            [](const Interval& x, const Interval& y) { return x.hi < y.hi; });

  // Scratch derivative reused for every cell.
  std::vector<std::int64_t> delta(static_cast<std::size_t>(lambda) + 2, 0);
  for (Value width = 0; width < lambda; ++width) {
    for (Value a = 1; a + width <= lambda; ++a) {
      const Value b = a + width;
      for (const Interval& d : doms) {
        if (d.hi > b) break;
        if (d.lo < a) continue;
        ++delta[static_cast<std::size_t>(d.lo)];
        --delta[static_cast<std::size_t>(d.hi) + 1];
      }
      std::int64_t enclosing = 0;
      std::int64_t best = -1;
      Value best_c = a;
      for (Value c = a; c <= b; ++c) {
        enclosing += delta[static_cast<std::size_t>(c)];
        delta[static_cast<std::size_t>(c)] = 0;
        const std::int64_t here = pairs(enclosing) + table.cost(a, c - 1) + table.cost(c + 1, b);
        if (here > best) {
          best = here;
          best_c = c;
        }
      }
      delta[static_cast<std::size_t>(b) + 1] = 0;
      table.set(a, b, best, best_c);
    }
  }
  return table;
}

std::int64_t count_enclosing(const Instance& instance, Value a, Value b, Value c) {
  instance.require_contiguous("count_enclosing");
  if (c < a || b < c) throw PreconditionError("count_enclosing: requires a <= c <= b");
  std::int64_t count = 0;
  for (const Domain& d : instance.domains())
    if (a <= d.min() && d.max() <= b && d.contains(c)) ++count;
  return count;
}

namespace {

// Walks the choice table: every variable of X[a,b,c*] takes c*, then the
// two sides are solved independently.
std::vector<Value> reconstruct(const Instance& instance, const DPTable& table) {
  const std::size_t n = instance.num_variables();
  std::vector<Value> values(n, 0);
  std::vector<VarIndex> order(n);
  for (VarIndex x = 0; x < n; ++x) order[x] = x;

  std::vector<std::pair<Value, Value>> stack;
  if (table.lambda() > 0) stack.emplace_back(1, table.lambda());
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    if (b < a) continue;
    const Value c = table.choice(a, b);
    for (VarIndex x = 0; x < n; ++x) {
      const Domain& d = instance.domain(x);
      if (values[x] == 0 && a <= d.min() && d.max() <= b && d.contains(c)) values[x] = c;
    }
    stack.emplace_back(a, c - 1);
    stack.emplace_back(c + 1, b);
  }
  for (VarIndex x = 0; x < n; ++x)
    if (values[x] == 0) throw InternalError("max_equalities_dp: variable left unassigned");
  return values;
}

}  // namespace

OptimumResult max_equalities_dp(const Instance& instance, const DpOptions& options) {
  instance.require_contiguous("max_equalities_dp");
  OptimumResult result;
  if (instance.num_variables() == 0) {
    result.witness = Assignment(instance, {});
    return result;
  }
  if (!options.use_crest_reduction) {
    const DPTable table = fill_dp_table(instance, options.max_cells);
    result.equalities = table.cost(1, instance.num_values());
    result.witness = Assignment(instance, reconstruct(instance, table));
    return result;
  }

  const CrestPartition part = crest_partition(instance);
  const Instance reduced = reduce_by_crests(instance, part);
  const DPTable table = fill_dp_table(reduced, options.max_cells);
  result.equalities = table.cost(1, reduced.num_values());
  const std::vector<Value> on_crests = reconstruct(reduced, table);

  // All domains overlapping one crest share a value; the largest left end
  // (clipped to the crest) is one.
  std::vector<Value> common(part.size() + 1, 0);
  for (VarIndex x = 0; x < instance.num_variables(); ++x) {
    const Interval& crest = part.crests[static_cast<std::size_t>(on_crests[x] - 1)];
    Value& v = common[static_cast<std::size_t>(on_crests[x])];
    v = std::max({v, instance.domain(x).min(), crest.lo});
  }
  std::vector<Value> values(instance.num_variables());
  for (VarIndex x = 0; x < instance.num_variables(); ++x) {
    values[x] = common[static_cast<std::size_t>(on_crests[x])];
    if (!instance.domain(x).contains(values[x]))
      throw InternalError("max_equalities_dp: crest group without a common value");
  }
  result.witness = Assignment(instance, std::move(values));
  return result;
}

PropagationOutcome rc_filter_graph_min(const Instance& instance, CostBounds n_bounds,
                                       const DpOptions& options) {
  instance.require_contiguous("rc_filter_graph_min");
  if (n_bounds.empty()) return PropagationOutcome::failure(n_bounds);
  const auto n = static_cast<std::int64_t>(instance.num_variables());
  const std::int64_t required = pairs(n) - n_bounds.hi;

  // Crest reduction pays off once values outnumber variables.
  DpOptions opts = options;
  opts.use_crest_reduction =
      options.use_crest_reduction && instance.num_values() > static_cast<Value>(n);

  const std::int64_t optimum = max_equalities_dp(instance, opts).equalities;
  if (optimum < required) return PropagationOutcome::failure(n_bounds);

  PropagationOutcome out;
  out.cost = {std::max(n_bounds.lo, pairs(n) - optimum), n_bounds.hi};
  if (required <= 0) return out;
  for (VarIndex x = 0; x < instance.num_variables(); ++x) {
    const Domain& d = instance.domain(x);
    std::vector<Value> kept;
    d.for_each_value([&](Value v) {
      const Instance unit = instance.with_domain(x, Domain::singleton(v));
      if (max_equalities_dp(unit, opts).equalities >= required) kept.push_back(v);
    });
    if (kept.empty()) throw InternalError("rc_filter_graph_min: optimum without support");
    Domain narrowed = Domain::of_values(std::move(kept));
    if (!(narrowed == d)) out.pruned.emplace(x, std::move(narrowed));
  }
  return out;
}

}  // namespace softeq
