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

#ifndef SOFTEQ_GRAPH_MIN_DP_HPP
#define SOFTEQ_GRAPH_MIN_DP_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "softeq/cost.hpp"
#include "softeq/instance.hpp"
#include "softeq/propagation.hpp"

namespace softeq {

// Maximum number of equal pairs over interval domains (SOFTALLEQUAL with
// graph-based cost, minimised), by dynamic programming over value ranges:
//
//   C[a,b] = max_{a<=c<=b} C(|X[a,b,c]|, 2) + C[a,c-1] + C[c+1,b]
//
// where X[a,b] are the variables whose domain lies inside [a,b] and
// X[a,b,c] those of X[a,b] containing c.

/// Best known value plus a witness reaching it. Shared by every exact solver.
struct OptimumResult {
  std::int64_t equalities = 0;
  Assignment witness;
};

/// Triangular C[a,b] table with the maximising c of every cell.
class DPTable {
 public:
  DPTable() = default;
  explicit DPTable(Value lambda);

  Value lambda() const { return lambda_; }
  /// 0 when b < a.
  std::int64_t cost(Value a, Value b) const { return b < a ? 0 : cost_[index(a, b)]; }
  Value choice(Value a, Value b) const { return choice_[index(a, b)]; }

  void set(Value a, Value b, std::int64_t cost, Value choice) {
    cost_[index(a, b)] = cost;
    choice_[index(a, b)] = choice;
  }

  static std::size_t cells(Value lambda) {
    const auto l = static_cast<std::size_t>(lambda);
    return l * (l + 1) / 2;
  }

 private:
  // Row a holds b = a..lambda.
  std::size_t index(Value a, Value b) const {
    const auto ua = static_cast<std::size_t>(a - 1);
    const auto l = static_cast<std::size_t>(lambda_);
    return ua * l - ua * (ua - 1) / 2 + static_cast<std::size_t>(b - a);
  }

  Value lambda_ = 0;
  std::vector<std::int64_t> cost_;
  std::vector<Value> choice_;
};

struct DpOptions {
  bool use_crest_reduction = true;
  /// Upper bound on the number of table cells (the DP needs O(lambda^2)).
  std::size_t max_cells = std::size_t{1} << 24;
};

/// Fills the table for an instance with contiguous domains. Ties in the
/// argmax go to the smallest c.
DPTable fill_dp_table(const Instance& instance, std::size_t max_cells = DpOptions{}.max_cells);

/// |X[a,b,c]|: variables with D(X) inside [a,b] and containing c.
std::int64_t count_enclosing(const Instance& instance, Value a, Value b, Value c);

/// The optimum C[1,lambda] and an assignment attaining it. With crest
/// reduction the table is built on one value per crest and the witness is
/// mapped back to a value common to each group.
OptimumResult max_equalities_dp(const Instance& instance, const DpOptions& options = {});

/// Range consistency for  N >= |{i<j : X_i != X_j}|.  Only n_bounds.hi
/// restricts the variables; n_bounds.lo is raised to C(n,2) - optimum. A value
/// v of X is removed when fixing X = v leaves fewer than C(n,2) - N.hi equal
/// pairs reachable.
PropagationOutcome rc_filter_graph_min(const Instance& instance, CostBounds n_bounds,
                                       const DpOptions& options = {});

}  // namespace softeq

#endif  // SOFTEQ_GRAPH_MIN_DP_HPP
