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

#ifndef SOFTEQ_MATCHING_HPP
#define SOFTEQ_MATCHING_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace softeq {

struct GraphEdge {
  std::size_t u;
  std::size_t v;
};

/// Maximum-cardinality matching in a general graph (Edmonds' blossom
/// algorithm, O(V^3)). Returns mate[v], or `unmatched` for an exposed vertex.
std::vector<std::size_t> maximum_matching(std::size_t num_vertices,
                                          std::span<const GraphEdge> edges);

inline constexpr std::size_t unmatched = static_cast<std::size_t>(-1);

}  // namespace softeq

#endif  // SOFTEQ_MATCHING_HPP
