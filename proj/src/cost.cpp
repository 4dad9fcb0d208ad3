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

#include "softeq/cost.hpp"

#include <algorithm>
#include <sstream>

namespace softeq {

std::map<Value, std::int64_t> count_multiplicities(const Assignment& s) {
  std::map<Value, std::int64_t> mult;
  for (Value v : s.values()) ++mult[v];
  return mult;
}

CostReport evaluate(const Assignment& s) {
  const auto n = static_cast<std::int64_t>(s.size());
  CostReport r;
  std::int64_t largest = 0;
  for (const auto& [value, count] : count_multiplicities(s)) {
    r.equalities += pairs(count);
    largest = std::max(largest, count);
    ++r.nvalues;
  }
  r.disequalities = pairs(n) - r.equalities;
  r.alldiff_var = n - r.nvalues;
  r.allequal_var = n - largest;
  return r;
}

std::string format_cost_report(const CostReport& r) {
  std::ostringstream out;
  out << "equalities=" << r.equalities << '\n'
      << "disequalities=" << r.disequalities << '\n'
      << "alldiff_var=" << r.alldiff_var << '\n'
      << "allequal_var=" << r.allequal_var << '\n'
      << "nvalues=" << r.nvalues << '\n';
  return out.str();
}

}  // namespace softeq
