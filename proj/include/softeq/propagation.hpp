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

#ifndef SOFTEQ_PROPAGATION_HPP
#define SOFTEQ_PROPAGATION_HPP

#include <map>

#include "softeq/cost.hpp"
#include "softeq/domain.hpp"
#include "softeq/instance.hpp"

namespace softeq {

enum class Status { Failed, Fixpoint };

/// Result of one propagator call. Only changed domains are listed; callers
/// own the domain store and apply them.
struct PropagationOutcome {
  Status status = Status::Fixpoint;
  std::map<VarIndex, Domain> pruned;
  CostBounds cost;

  bool failed() const { return status == Status::Failed; }

  static PropagationOutcome failure(CostBounds cost) {
    PropagationOutcome out;
    out.status = Status::Failed;
    out.cost = cost;
    return out;
  }
};

/// Consistency level requested from a propagator.
enum class Consistency {
  Arc,     // AC, supports drawn from the exact domains
  Range,   // RC, supports drawn from [min, max] hulls
  Bounds,  // BC, only min and max need range supports
};

/// Domain of variable x after applying the outcome.
inline const Domain& domain_after(const Instance& instance, const PropagationOutcome& out,
                                  VarIndex x) {
  auto it = out.pruned.find(x);
  return it == out.pruned.end() ? instance.domain(x) : it->second;
}

}  // namespace softeq

#endif  // SOFTEQ_PROPAGATION_HPP
