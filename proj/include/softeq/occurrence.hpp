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

#ifndef SOFTEQ_OCCURRENCE_HPP
#define SOFTEQ_OCCURRENCE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "softeq/domain.hpp"
#include "softeq/instance.hpp"

namespace softeq {

// The occurrence function occ(v) = |{X : v in D(X)}| and the sweeps built
// on its derivative. Keys are doubled so that half points are exact: the
// integer point v has key 2v and the half point v + 1/2 has key 2v + 1.

constexpr std::int64_t point_key(Value v) { return 2 * v; }
constexpr std::int64_t half_key(Value v) { return 2 * v + 1; }

struct DeltaEvent {
  std::int64_t key;
  std::int64_t delta;
  friend bool operator==(const DeltaEvent&, const DeltaEvent&) = default;
};

/// Sparse derivative of occ: a list kept sorted by key, updated by binary
/// search. Entries whose delta cancels to zero are dropped.
class DeltaList {
 public:
  void add(std::int64_t key, std::int64_t delta);
  std::int64_t at(std::int64_t key) const;
  std::span<const DeltaEvent> events() const { return events_; }
  std::size_t size() const { return events_.size(); }
  bool empty() const { return events_.empty(); }

 private:
  std::vector<DeltaEvent> events_;
};

/// Where a domain [lo, hi] puts its closing event.
enum class DomainEnd {
  NextInteger,  // key 2(hi + 1), integer sweep
  HalfPoint,    // key 2hi + 1, crest sweep over half points
};

/// Requires contiguous domains.
DeltaList build_delta(const Instance& instance, DomainEnd end);

/// occ^-1: bucket x lists the value intervals occurring in exactly x domains.
/// Buckets run over x in [0, n] and partition [1, lambda].
struct InverseOcc {
  std::vector<std::vector<Interval>> buckets;

  /// Largest x with a non-empty bucket (k*), 0 for an empty instance.
  std::int64_t max_count() const;
  Domain values_with(std::int64_t count) const;
};

enum class OccBackend {
  Auto,        // Array when lambda < n log2 n, SortedList otherwise
  SortedList,  // O(n log n)
  Array,       // O(n + lambda)
};

/// Interval sweep over min/max of every domain; requires contiguous domains.
InverseOcc inverse_occurrence(const Instance& instance, OccBackend backend = OccBackend::Auto);

/// Exact per-value counting over arbitrary (interval union) domains.
InverseOcc count_occurrences(const Instance& instance);

/// Partition of [1, lambda] into crests: intervals on which occ (evaluated on
/// integer and half points) first does not decrease, then does not increase.
struct CrestPartition {
  std::vector<Interval> crests;

  /// 1-based crest index of a value.
  Value crest_of(Value v) const;
  std::size_t size() const { return crests.size(); }
};

/// Requires contiguous domains.
CrestPartition crest_partition(const Instance& instance);

/// Replaces every domain by the contiguous run of crest indices it overlaps.
/// The result has one value per crest.
Instance reduce_by_crests(const Instance& instance, const CrestPartition& part);

}  // namespace softeq

#endif  // SOFTEQ_OCCURRENCE_HPP
