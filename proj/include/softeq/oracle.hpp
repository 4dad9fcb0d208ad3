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

#ifndef SOFTEQ_ORACLE_HPP
#define SOFTEQ_ORACLE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "softeq/cost.hpp"
#include "softeq/diversity.hpp"
#include "softeq/instance.hpp"

namespace softeq {

// Exhaustive ground truth. Everything here enumerates; nothing is clever.

inline constexpr std::uint64_t default_search_cap = 10'000'000;

struct BruteForceResult {
  std::int64_t optimum = 0;
  std::vector<Assignment> optima;  // every maximiser, enumeration order
};

/// Maximum number of equal pairs over all assignments, with all maximisers.
/// Throws BudgetExceeded when the product of domain sizes exceeds cap.
BruteForceResult brute_force_optimum(const Instance& instance,
                                     std::uint64_t cap = default_search_cap);

/// Same optimum by enumerating the partitions of the variables into groups
/// that share a common value; optima holds one witness per optimal partition
/// (each group on the smallest value it shares). Visits at most Bell(n)
/// partitions, so it reaches instances whose domain product is far past
/// the cap. Throws BudgetExceeded after cap partial partitions.
BruteForceResult brute_force_partitions(const Instance& instance,
                                        std::uint64_t cap = default_search_cap);

/// The six soft constraints of difference and equality, each relating the
/// cost variable N to one cost of the assignment.
enum class SoftConstraint {
  AllDiffVarMin,     // N >= n - nvalues
  AllDiffVarMax,     // N <= n - nvalues
  AllDiffGraphMin,   // N >= equalities         (== AllEqual graph max)
  AllEqualGraphMin,  // N >= disequalities      (== AllDiff graph max)
  AllEqualVarMin,    // N >= n - max multiplicity
  AllEqualVarMax,    // N <= n - max multiplicity
};

/// Some N in bounds satisfies the constraint for this cost report.
bool satisfiable(SoftConstraint constraint, const CostReport& report, CostBounds bounds);

enum class SupportKind {
  Domain,  // other variables drawn from their domains
  Range,   // other variables drawn from [min, max]
};

/// (variable, value in its domain) -> whether a support exists.
using SupportMap = std::map<std::pair<VarIndex, Value>, bool>;

SupportMap brute_force_supports(const Instance& instance, SoftConstraint constraint,
                                CostBounds bounds, SupportKind kind,
                                std::uint64_t cap = default_search_cap);

/// Three disjoint element sets and a list of triples (x, y, z) given as
/// element indices into xs, ys, zs.
struct ThreeDMInstance {
  std::vector<std::string> xs, ys, zs;
  struct Triple {
    std::size_t x, y, z;
  };
  std::vector<Triple> triples;
};

/// `elem x|y|z <name>` and `triple <x> <y> <z>` lines.
ThreeDMInstance parse_3dm(std::string_view text);
std::string format_3dm(const ThreeDMInstance& tdm);

/// Variables X_1..X_n for the elements xs, ys, zs in that order. Triple l
/// puts value l into its three domains; pair i < j puts |T| + (i-1)n + j into
/// D(X_i) and D(X_j). The result is normalized, labels keep the raw values.
Instance reduce_3dm(const ThreeDMInstance& tdm);

/// Largest set of pairwise element-disjoint triples, by subset enumeration.
std::int64_t brute_force_3dm(const ThreeDMInstance& tdm);

/// Ground truth for the similarity network over the full grid, with the
/// other grid cells drawn from their [min, max] hulls.
struct CnSimTruth {
  bool feasible = false;
  std::map<std::pair<std::size_t, std::size_t>, Domain> supported;  // (copy, column)
  CostBounds objective;                  // tightened N
  std::vector<CostBounds> column_bounds;  // tightened N_i
};

CnSimTruth brute_force_cn_sim(const MultiInstance& multi, std::vector<CostBounds> column_bounds,
                              std::uint64_t cap = default_search_cap);

}  // namespace softeq

#endif  // SOFTEQ_ORACLE_HPP
