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

#ifndef SOFTEQ_VAR_MIN_PROP_HPP
#define SOFTEQ_VAR_MIN_PROP_HPP

#include <cstdint>

#include "softeq/instance.hpp"
#include "softeq/propagation.hpp"

namespace softeq {

// SOFTALLEQUAL with variable-based cost, minimised, in the complemented form
//
//   N' <= max_v |{i : X_i = v}|        (N' = n - N)
//
// i.e. at least N' variables must share a value.

/// k*, the largest number of domains sharing a value. Arc counts values
/// exactly; Range and Bounds sweep the domain bounds (contiguous domains).
std::int64_t max_shared_occurrence(const Instance& instance, Consistency mode);

/// One propagation pass. Fails when N'.lo > k*, otherwise sets N'.hi to
/// min(N'.hi, k*) and, when N'.lo == k*, restricts every domain containing the
/// whole set V = occ^-1(k*) to V (Arc, Range) or to the hull of V (Bounds).
PropagationOutcome propagate_var_min(const Instance& instance, CostBounds nprime,
                                     Consistency mode);

}  // namespace softeq

#endif  // SOFTEQ_VAR_MIN_PROP_HPP
