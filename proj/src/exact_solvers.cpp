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

#include "softeq/exact_solvers.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "softeq/cost.hpp"
#include "softeq/error.hpp"
#include "softeq/matching.hpp"

namespace softeq {

namespace {

std::vector<std::int64_t> occurrence_counts(const Instance& instance) {
  std::vector<std::int64_t> occ(static_cast<std::size_t>(instance.num_values()) + 1, 0);
  for (const Domain& d : instance.domains())
    d.for_each_value([&](Value v) { ++occ[static_cast<std::size_t>(v)]; });
  return occ;
}

// k! if it fits under the budget.
bool factorial_within(std::uint64_t k, std::uint64_t budget) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= k; ++i) {
    if (f > budget / i) return false;
    f *= i;
  }
  return f <= budget;
}

std::int64_t equal_pairs(std::span<const Value> values, std::vector<std::int64_t>& scratch) {
  std::int64_t total = 0;
  for (Value v : values) total += scratch[static_cast<std::size_t>(v)]++;
  for (Value v : values) scratch[static_cast<std::size_t>(v)] = 0;
  return total;
}

}  // namespace

IntersectionGraph build_intersection_graph(const Instance& instance) {
  IntersectionGraph g;
  g.num_vertices = instance.num_variables();
  std::vector<std::vector<VarIndex>> holders(static_cast<std::size_t>(instance.num_values()) + 1);
  for (VarIndex x = 0; x < instance.num_variables(); ++x)
    instance.domain(x).for_each_value([&](Value v) { holders[static_cast<std::size_t>(v)].push_back(x); });
  // Values in increasing order, so the first value creating an edge is the
  // smallest common one.
  std::set<std::pair<VarIndex, VarIndex>> seen;
  for (Value v = 1; v <= instance.num_values(); ++v) {
    const auto& h = holders[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < h.size(); ++i)
      for (std::size_t j = i + 1; j < h.size(); ++j)
        if (seen.insert({h[i], h[j]}).second) g.edges.push_back({h[i], h[j], v});
  }
  return g;
}

std::vector<IntersectionGraph::Edge> max_matching(const IntersectionGraph& graph) {
  std::vector<GraphEdge> plain;
  plain.reserve(graph.edges.size());
  for (const auto& e : graph.edges) plain.push_back({e.u, e.v});
  const auto mate = maximum_matching(graph.num_vertices, plain);
  std::vector<IntersectionGraph::Edge> out;
  for (const auto& e : graph.edges) {
    if (mate[e.u] == e.v) {
      out.push_back(e);
    }
  }
  // Parallel edges cannot occur (one edge per pair), so out is a matching.
  return out;
}

ValueClassification classify_values(const Instance& instance) {
  const auto occ = occurrence_counts(instance);
  ValueClassification out;
  std::vector<bool> conflicting(occ.size(), false);
  for (const Domain& d : instance.domains()) {
    std::int64_t heavy_here = 0;
    d.for_each_value([&](Value v) { heavy_here += occ[static_cast<std::size_t>(v)] >= 3; });
    if (heavy_here >= 2)
      d.for_each_value([&](Value v) {
        if (occ[static_cast<std::size_t>(v)] >= 3) conflicting[static_cast<std::size_t>(v)] = true;
      });
  }
  for (std::size_t v = 1; v < occ.size(); ++v) {
    if (occ[v] >= 3) out.heavy.push_back(static_cast<Value>(v));
    if (conflicting[v]) out.conflicting.push_back(static_cast<Value>(v));
  }
  return out;
}

OptimumResult solve_matching_class(const Instance& instance) {
  const auto occ = occurrence_counts(instance);
  for (std::size_t v = 1; v < occ.size(); ++v)
    if (occ[v] > 2)
      throw PreconditionError("solve_matching_class: value " +
                              std::to_string(instance.label(static_cast<Value>(v))) + " occurs in " +
                              std::to_string(occ[v]) + " domains");
  const IntersectionGraph graph = build_intersection_graph(instance);
  const auto matching = max_matching(graph);
  std::vector<Value> values(instance.num_variables(), 0);
  for (const auto& e : matching) values[e.u] = values[e.v] = e.witness;
  for (VarIndex x = 0; x < values.size(); ++x)
    if (values[x] == 0) values[x] = instance.domain(x).min();
  OptimumResult result;
  result.witness = Assignment(instance, std::move(values));
  result.equalities = static_cast<std::int64_t>(matching.size());
  if (evaluate(result.witness).equalities != result.equalities)
    throw InternalError("solve_matching_class: matching and assignment disagree");
  return result;
}

OptimumResult solve_heavy_class(const Instance& instance) {
  const auto occ = occurrence_counts(instance);
  const std::size_t n = instance.num_variables();
  std::vector<Value> values(n, 0);
  std::vector<std::int64_t> taken(occ.size(), 0);
  std::vector<VarIndex> residual;
  for (VarIndex x = 0; x < n; ++x) {
    instance.domain(x).for_each_value([&](Value v) {
      if (occ[static_cast<std::size_t>(v)] < 3) return;
      if (values[x] != 0)
        throw PreconditionError("solve_heavy_class: domain of " + instance.name(x) +
                                " holds two heavy values");
      values[x] = v;
    });
    if (values[x] != 0) {
      ++taken[static_cast<std::size_t>(values[x])];
    } else {
      residual.push_back(x);
    }
  }
  OptimumResult result;
  for (std::int64_t t : taken) result.equalities += pairs(t);

  // Non-heavy values occur at most twice overall, so the residual is a
  // matching instance.
  const Instance rest = instance.subset(residual);
  const OptimumResult matched = solve_matching_class(rest);
  result.equalities += matched.equalities;
  for (std::size_t i = 0; i < residual.size(); ++i) values[residual[i]] = matched.witness[i];
  result.witness = Assignment(instance, std::move(values));
  return result;
}

Assignment induced_solution(const Instance& instance, std::span<const Value> order) {
  const auto lambda = static_cast<std::size_t>(instance.num_values());
  std::vector<std::size_t> rank(lambda + 1, lambda + 1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Value v = order[i];
    if (v < 1 || static_cast<std::size_t>(v) > lambda || rank[static_cast<std::size_t>(v)] <= lambda)
      throw PreconditionError("induced_solution: order is not a permutation of [1, lambda]");
    rank[static_cast<std::size_t>(v)] = i;
  }
  if (order.size() != lambda)
    throw PreconditionError("induced_solution: order is not a permutation of [1, lambda]");
  std::vector<Value> values(instance.num_variables());
  for (VarIndex x = 0; x < instance.num_variables(); ++x) {
    Value best = 0;
    instance.domain(x).for_each_value([&](Value v) {
      if (best == 0 || rank[static_cast<std::size_t>(v)] < rank[static_cast<std::size_t>(best)]) best = v;
    });
    values[x] = best;
  }
  return Assignment(instance, std::move(values));
}

OptimumResult solve_fpt_values(const Instance& instance, std::uint64_t budget) {
  const auto lambda = static_cast<std::uint64_t>(instance.num_values());
  if (!factorial_within(lambda, budget))
    throw BudgetExceeded("solve_fpt_values: " + std::to_string(lambda) +
                         "! orders exceed the budget of " + std::to_string(budget) +
                         "; use fpt-conflict or dp");
  const std::int64_t ceiling = pairs(static_cast<std::int64_t>(instance.num_variables()));
  std::vector<Value> order(lambda);
  std::iota(order.begin(), order.end(), Value{1});
  std::vector<std::int64_t> scratch(lambda + 1, 0);
  OptimumResult best;
  best.equalities = -1;
  do {
    Assignment s = induced_solution(instance, order);
    const std::int64_t value = equal_pairs(s.values(), scratch);
    if (value > best.equalities) {
      best.equalities = value;
      best.witness = std::move(s);
      if (value == ceiling) break;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  if (best.equalities < 0) {
    best.equalities = 0;
    best.witness = Assignment(instance, {});
  }
  return best;
}

OptimumResult solve_fpt_conflicting(const Instance& instance, std::uint64_t budget) {
  ValueClassification cls = classify_values(instance);
  std::vector<Value>& conflicting = cls.conflicting;
  if (!factorial_within(conflicting.size(), budget))
    throw BudgetExceeded("solve_fpt_conflicting: " + std::to_string(conflicting.size()) +
                         "! orders of conflicting values exceed the budget of " +
                         std::to_string(budget));
  std::vector<std::size_t> rank(static_cast<std::size_t>(instance.num_values()) + 1, 0);
  const std::int64_t ceiling = pairs(static_cast<std::int64_t>(instance.num_variables()));
  OptimumResult best;
  best.equalities = -1;
  do {
    for (std::size_t i = 0; i < conflicting.size(); ++i)
      rank[static_cast<std::size_t>(conflicting[i])] = i + 1;
    std::vector<Domain> reduced;
    reduced.reserve(instance.num_variables());
    for (const Domain& d : instance.domains()) {
      Value first = 0;
      d.for_each_value([&](Value v) {
        const std::size_t r = rank[static_cast<std::size_t>(v)];
        if (r != 0 && (first == 0 || r < rank[static_cast<std::size_t>(first)])) first = v;
      });
      if (first == 0) {
        reduced.push_back(d);
        continue;
      }
      std::vector<Value> kept;
      d.for_each_value([&](Value v) {
        if (v == first || rank[static_cast<std::size_t>(v)] == 0) kept.push_back(v);
      });
      reduced.push_back(Domain::of_values(std::move(kept)));
    }
    const Instance stage(std::vector<std::string>(instance.names().begin(), instance.names().end()),
                         std::move(reduced), instance.num_values(), instance.labels());
    OptimumResult here;
    try {
      here = solve_heavy_class(stage);
    } catch (const PreconditionError& e) {
      throw InternalError(std::string("solve_fpt_conflicting: residual outside the heavy class: ") +
                          e.what());
    }
    if (here.equalities > best.equalities) {
      best.equalities = here.equalities;
      best.witness = Assignment(instance, std::vector<Value>(here.witness.values().begin(),
                                                             here.witness.values().end()));
      if (best.equalities == ceiling) break;
    }
  } while (std::next_permutation(conflicting.begin(), conflicting.end()));
  return best;
}

}  // namespace softeq
