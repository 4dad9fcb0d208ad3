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

#ifndef SOFTEQ_COST_HPP
#define SOFTEQ_COST_HPP

#include <cstdint>
#include <map>
#include <string>

#include "softeq/instance.hpp"

namespace softeq {

/// C(x, 2) in 64-bit arithmetic. Exact for x < 2^32.
constexpr std::int64_t pairs(std::int64_t x) { return x < 2 ? 0 : x * (x - 1) / 2; }

/// The five quantities behind the six soft difference/equality constraints.
struct CostReport {
  std::int64_t equalities = 0;     // graph cost of alldiff, |{i<j : Xi = Xj}|
  std::int64_t disequalities = 0;  // graph cost of allequal
  std::int64_t alldiff_var = 0;    // n - #distinct values
  std::int64_t allequal_var = 0;   // n - largest multiplicity
  std::int64_t nvalues = 0;

  friend bool operator==(const CostReport&, const CostReport&) = default;
};

/// Bounds on a cost variable. Holes are not represented.
struct CostBounds {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  bool empty() const { return lo > hi; }
  friend bool operator==(const CostBounds&, const CostBounds&) = default;
};

std::map<Value, std::int64_t> count_multiplicities(const Assignment& s);

CostReport evaluate(const Assignment& s);
inline CostReport evaluate(const Instance&, const Assignment& s) { return evaluate(s); }

/// `<metric>=<value>` lines in the fixed order equalities, disequalities,
/// alldiff_var, allequal_var, nvalues.
std::string format_cost_report(const CostReport& report);

}  // namespace softeq

#endif  // SOFTEQ_COST_HPP
