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

#ifndef SOFTEQ_DIVERSITY_HPP
#define SOFTEQ_DIVERSITY_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "softeq/cost.hpp"
#include "softeq/graph_min_dp.hpp"
#include "softeq/instance.hpp"
#include "softeq/propagation.hpp"

namespace softeq {

// k copies of an n-variable problem. Variable X[j][i] is column i of copy j.
// The sum of pairwise Hamming distances between the copies is the sum, over
// columns, of the unequal pairs inside each column; minimising it is the
// network
//
//   N >= sum_i N_i,   N_i >= |{j<l : X[j][i] != X[l][i]}|   (one per column)

std::int64_t hamming(const Assignment& a, const Assignment& b);

/// Sum over copy pairs of their Hamming distance, computed column by column.
std::int64_t sum_pairwise_distance(std::span<const Assignment> solutions);

class MultiInstance {
 public:
  /// grid[j][i] is the renamed domain of column i in copy j. All copies share
  /// one value alphabet.
  MultiInstance(std::vector<std::string> columns, std::vector<std::vector<Domain>> grid,
                Value num_values, ValueLabels labels, CostBounds objective);

  std::size_t copies() const { return grid_.size(); }
  std::size_t columns() const { return columns_.size(); }
  const std::string& column_name(std::size_t i) const { return columns_[i]; }
  const Domain& domain(std::size_t copy, std::size_t column) const { return grid_[copy][column]; }
  Value num_values() const { return num_values_; }
  const ValueLabels& labels() const { return labels_; }
  CostBounds objective() const { return objective_; }

  /// Column i as an instance with variables named "<copy>.<column>".
  Instance column(std::size_t i) const;
  /// [0, C(k, 2)], the unconstrained range of each N_i.
  CostBounds column_range() const { return {0, pairs(static_cast<std::int64_t>(copies()))}; }

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Domain>> grid_;
  Value num_values_;
  ValueLabels labels_;
  CostBounds objective_;
};

/// Format:
///   copies <k>
///   var <copy>.<name> set ... | interval ...     (copies numbered 1..k)
///   cost max <N>
/// Every copy must declare the same column names. Without `cost max` the
/// objective is unbounded above (N <= n C(k, 2)).
MultiInstance parse_multi_instance(std::string_view text);
/// Inverse of parse_multi_instance, copies in order, original labels.
std::string format_multi_instance(const MultiInstance& multi);

struct CnSimOutcome {
  Status status = Status::Fixpoint;
  std::map<std::pair<std::size_t, std::size_t>, Domain> pruned;  // (copy, column)
  CostBounds objective;
  std::vector<CostBounds> column_bounds;

  bool failed() const { return status == Status::Failed; }
};

/// Range consistency on the similarity network in three passes: raise every
/// N_i.lo to the column optimum, bound the sum N >= sum N_i, then filter each
/// column against its N_i.hi. `column_bounds` defaults to column_range().
CnSimOutcome propagate_cn_sim(const MultiInstance& multi, const DpOptions& options = {});
CnSimOutcome propagate_cn_sim(const MultiInstance& multi, std::vector<CostBounds> column_bounds,
                              const DpOptions& options = {});

/// A constraint network as a hypergraph: one scope (list of variable ids)
/// per constraint.
struct ConstraintHypergraph {
  std::size_t num_variables = 0;
  std::vector<std::vector<std::size_t>> scopes;
};

/// True when the hypergraph has no Berge cycle, i.e. its variable/constraint
/// incidence graph is a forest.
bool check_berge_acyclic(const ConstraintHypergraph& graph);

/// The network built by propagate_cn_sim: variables are the k*n grid cells,
/// then N_1..N_n, then N.
ConstraintHypergraph cn_sim_hypergraph(const MultiInstance& multi);

}  // namespace softeq

#endif  // SOFTEQ_DIVERSITY_HPP
