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

#ifndef SOFTEQ_TESTS_SUPPORT_HPP
#define SOFTEQ_TESTS_SUPPORT_HPP

#include <string_view>
#include <vector>

#include "softeq.hpp"

namespace softeq::testing {

inline Instance inst(std::string_view text) { return parse_instance(text); }

/// X1..Xn over the given raw domains, normalized.
inline Instance of_domains(std::vector<Domain> domains) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= domains.size(); ++i) names.push_back("X" + std::to_string(i));
  return Instance::normalize(std::move(names), std::move(domains));
}

inline Instance random_instance(Rng& rng, GenKind kind, std::size_t n, Value lambda,
                                std::size_t max_size = 4) {
  GenParams p;
  p.n = n;
  p.lambda = lambda;
  p.max_size = max_size;
  return generate_instance(kind, p, rng);
}

/// Equal pairs by the O(n^2) definition.
inline std::int64_t equal_pairs(const Assignment& s) {
  std::int64_t e = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) e += s[i] == s[j];
  return e;
}

/// Tight instance for the greedy bound: X1 {a}, X2 {b}, X3 {a, c}, X4 {b, c} with
/// a = 1, b = 2, c = 3.
inline Instance tight_greedy_instance() {
  return inst("var X1 set 1\nvar X2 set 2\nvar X3 set 1 3\nvar X4 set 2 3\n");
}

}  // namespace softeq::testing

#endif  // SOFTEQ_TESTS_SUPPORT_HPP
