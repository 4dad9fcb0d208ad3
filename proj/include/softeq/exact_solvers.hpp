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

#ifndef SOFTEQ_EXACT_SOLVERS_HPP
#define SOFTEQ_EXACT_SOLVERS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "softeq/graph_min_dp.hpp"
#include "softeq/instance.hpp"

namespace softeq {

/// One vertex per variable, an edge between two variables whose domains
/// intersect, labelled with their smallest common value.
struct IntersectionGraph {
  struct Edge {
    VarIndex u;
    VarIndex v;
    Value witness;
    friend bool operator==(const Edge&, const Edge&) = default;
  };
  std::size_t num_vertices = 0;
  std::vector<Edge> edges;
};

IntersectionGraph build_intersection_graph(const Instance& instance);

/// Maximum-cardinality matching of the graph, as a subset of its edges.
std::vector<IntersectionGraph::Edge> max_matching(const IntersectionGraph& graph);

/// Heavy values occur in at least three domains. A heavy value is conflicting
/// when some domain holds it together with another heavy value.
struct ValueClassification {
  std::vector<Value> heavy;
  std::vector<Value> conflicting;
};

ValueClassification classify_values(const Instance& instance);

/// No value in more than two domains: the optimum is a maximum matching of
/// the intersection graph. Matched pairs take their edge witness, the other
/// variables their smallest value.
OptimumResult solve_matching_class(const Instance& instance);

/// At most one heavy value per domain: every variable holding a heavy value
/// takes it, the rest is a matching instance.
OptimumResult solve_heavy_class(const Instance& instance);

/// Each variable takes the first value of `order` present in its domain.
/// `order` must be a permutation of [1, lambda].
Assignment induced_solution(const Instance& instance, std::span<const Value> order);

inline constexpr std::uint64_t default_permutation_budget = 3'628'800;  // 10!

/// Best induced solution over all lambda! orders (lexicographic, first best
/// kept). Throws BudgetExceeded when lambda! > budget.
OptimumResult solve_fpt_values(const Instance& instance,
                               std::uint64_t budget = default_permutation_budget);

/// Enumerates orders of the conflicting values only. Each order keeps, in
/// every domain, the first conflicting value present and drops the others;
/// the residual has at most one heavy value per domain.
OptimumResult solve_fpt_conflicting(const Instance& instance,
                                    std::uint64_t budget = default_permutation_budget);

}  // namespace softeq

#endif  // SOFTEQ_EXACT_SOLVERS_HPP
