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

#include "softeq/var_min_prop.hpp"

#include <algorithm>

#include "softeq/occurrence.hpp"

namespace softeq {

namespace {

InverseOcc inverse_for(const Instance& instance, Consistency mode) {
  if (mode == Consistency::Arc) return count_occurrences(instance);
  return inverse_occurrence(instance);
}

}  // namespace

std::int64_t max_shared_occurrence(const Instance& instance, Consistency mode) {
  return inverse_for(instance, mode).max_count();
}

PropagationOutcome propagate_var_min(const Instance& instance, CostBounds nprime,
                                     Consistency mode) {
  if (nprime.empty()) return PropagationOutcome::failure(nprime);
  const InverseOcc occ = inverse_for(instance, mode);
  const std::int64_t best = occ.max_count();
  if (nprime.lo > best) return PropagationOutcome::failure(nprime);

  PropagationOutcome out;
  out.cost = {nprime.lo, std::min(nprime.hi, best)};
  // Pruning needs N' pinned at k*. A caller-side hi below k* also pins N'
  // but every value keeps a support, so the trigger is lo == k*.
  if (nprime.lo != best || best == 0) return out;

  // Every optimal assignment puts at least N' variables on a value of V, so a
  // variable whose domain contains all of V must take one of them.
  const Domain shared = occ.values_with(best);
  const Domain narrowed =
      mode == Consistency::Bounds ? Domain::interval(shared.min(), shared.max()) : shared;
  for (VarIndex x = 0; x < instance.num_variables(); ++x) {
    const Domain& d = instance.domain(x);
    if (d.contains(shared) && !(d == narrowed)) out.pruned.emplace(x, narrowed);
  }
  return out;
}

}  // namespace softeq
