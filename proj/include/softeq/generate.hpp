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

#ifndef SOFTEQ_GENERATE_HPP
#define SOFTEQ_GENERATE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "softeq/diversity.hpp"
#include "softeq/instance.hpp"
#include "softeq/oracle.hpp"
#include "softeq/rng.hpp"

namespace softeq {

enum class GenKind { Set, Interval, TwoOcc, OneHeavy, ThreeDM, Multi };

std::optional<GenKind> parse_gen_kind(std::string_view name);
std::string_view gen_kind_name(GenKind kind);

struct GenParams {
  std::size_t n = 6;          // variables, columns, or elements per 3dm set
  Value lambda = 8;           // values drawn from [1, lambda]
  std::size_t max_size = 4;   // domain size cap, 0 for none
  std::size_t copies = 3;     // multi only
  std::size_t triples = 4;    // 3dm only
  std::optional<std::int64_t> cost_max;  // multi only, random when unset
};

/// Throws PreconditionError for parameters outside their ranges:
/// n >= 1, lambda >= 1, copies >= 2, and for 3dm n^3 >= triples.
void check_params(GenKind kind, const GenParams& params);

/// Set, Interval, TwoOcc and OneHeavy instances, normalized. TwoOcc keeps
/// every value in at most two domains, OneHeavy at most one value of
/// occurrence three or more per domain; both are checked before returning.
Instance generate_instance(GenKind kind, const GenParams& params, Rng& rng);

/// Sets of n elements each and `triples` distinct random triples.
ThreeDMInstance generate_3dm(const GenParams& params, Rng& rng);

/// `copies` x n grid of interval domains in [1, lambda].
MultiInstance generate_multi(const GenParams& params, Rng& rng);

/// Text in the matching file format; same seed and params give equal bytes.
std::string generate_text(GenKind kind, const GenParams& params, std::uint64_t seed);

}  // namespace softeq

#endif  // SOFTEQ_GENERATE_HPP
