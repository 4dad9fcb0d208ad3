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

#include "softeq/occurrence.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "softeq/error.hpp"

namespace softeq {

void DeltaList::add(std::int64_t key, std::int64_t delta) {
  auto it = std::lower_bound(events_.begin(), events_.end(), key,
                             [](const DeltaEvent& e, std::int64_t k) { return e.key < k; });
  if (it != events_.end() && it->key == key) {
    it->delta += delta;
    if (it->delta == 0) events_.erase(it);
  } else if (delta != 0) {
    events_.insert(it, {key, delta});
  }
}

std::int64_t DeltaList::at(std::int64_t key) const {
  auto it = std::lower_bound(events_.begin(), events_.end(), key,
                             [](const DeltaEvent& e, std::int64_t k) { return e.key < k; });
  return it != events_.end() && it->key == key ? it->delta : 0;
}

DeltaList build_delta(const Instance& instance, DomainEnd end) {
  instance.require_contiguous("build_delta");
  DeltaList delta;
  for (const Domain& d : instance.domains()) {
    delta.add(point_key(d.min()), +1);
    delta.add(end == DomainEnd::NextInteger ? point_key(d.max() + 1) : half_key(d.max()), -1);
  }
  return delta;
}

std::int64_t InverseOcc::max_count() const {
  for (std::size_t x = buckets.size(); x-- > 0;)
    if (!buckets[x].empty()) return static_cast<std::int64_t>(x);
  return 0;
}

Domain InverseOcc::values_with(std::int64_t count) const {
  if (count < 0 || static_cast<std::size_t>(count) >= buckets.size()) return {};
  return Domain::of_intervals(buckets[static_cast<std::size_t>(count)]);
}

namespace {

// Appends [lo, hi] to bucket x, merging with the previous piece if adjacent.
void push_piece(InverseOcc& occ, std::int64_t x, Value lo, Value hi) {
  if (hi < lo) return;
  auto& bucket = occ.buckets.at(static_cast<std::size_t>(x));
  if (!bucket.empty() && bucket.back().hi + 1 == lo) {
    bucket.back().hi = hi;
  } else {
    bucket.push_back({lo, hi});
  }
}

// Walks (value, delta) change points in increasing value order.
template <class Events>
InverseOcc sweep(std::size_t n, Value lambda, const Events& events) {
  InverseOcc occ;
  occ.buckets.resize(n + 1);
  std::int64_t x = 0;
  Value cur = 1;
  for (const auto& [value, delta] : events) {
    if (value > lambda + 1) break;
    push_piece(occ, x, cur, value - 1);
    x += delta;
    cur = std::max(cur, value);
  }
  push_piece(occ, x, cur, lambda);
  return occ;
}

}  // namespace

InverseOcc inverse_occurrence(const Instance& instance, OccBackend backend) {
  instance.require_contiguous("inverse_occurrence");
  const std::size_t n = instance.num_variables();
  const Value lambda = instance.num_values();
  if (backend == OccBackend::Auto) {
    const double threshold = n < 2 ? 0.0 : static_cast<double>(n) * std::log2(static_cast<double>(n));
    backend = static_cast<double>(lambda) < threshold ? OccBackend::Array : OccBackend::SortedList;
  }
  std::vector<std::pair<Value, std::int64_t>> events;
  if (backend == OccBackend::SortedList) {
    DeltaList delta = build_delta(instance, DomainEnd::NextInteger);
    events.reserve(delta.size());
    for (const auto& e : delta.events()) events.emplace_back(e.key / 2, e.delta);
  } else {
    std::vector<std::int64_t> diff(static_cast<std::size_t>(lambda) + 2, 0);
    for (const Domain& d : instance.domains()) {
      ++diff[static_cast<std::size_t>(d.min())];
      --diff[static_cast<std::size_t>(d.max()) + 1];
    }
    for (Value v = 1; v <= lambda + 1; ++v)
      if (diff[static_cast<std::size_t>(v)] != 0) events.emplace_back(v, diff[static_cast<std::size_t>(v)]);
  }
  return sweep(n, lambda, events);
}

InverseOcc count_occurrences(const Instance& instance) {
  const Value lambda = instance.num_values();
  std::vector<std::int64_t> diff(static_cast<std::size_t>(lambda) + 2, 0);
  for (const Domain& d : instance.domains()) {
    for (const auto& p : d.intervals()) {
      ++diff[static_cast<std::size_t>(p.lo)];
      --diff[static_cast<std::size_t>(p.hi) + 1];
    }
  }
  std::vector<std::pair<Value, std::int64_t>> events;
  for (Value v = 1; v <= lambda + 1; ++v)
    if (diff[static_cast<std::size_t>(v)] != 0) events.emplace_back(v, diff[static_cast<std::size_t>(v)]);
  return sweep(instance.num_variables(), lambda, events);
}

Value CrestPartition::crest_of(Value v) const {
  auto it = std::upper_bound(crests.begin(), crests.end(), v,
                             [](Value x, const Interval& c) { return x < c.lo; });
  if (it == crests.begin() || std::prev(it)->hi < v)
    throw PreconditionError("crest_of: value " + std::to_string(v) + " outside the partition");
  return static_cast<Value>(it - crests.begin());
}

CrestPartition crest_partition(const Instance& instance) {
  const DeltaList delta = build_delta(instance, DomainEnd::HalfPoint);
  const Value lambda = instance.num_values();
  CrestPartition part;
  if (lambda == 0) return part;
  bool rising = true;
  Value start = 1;
  for (const auto& e : delta.events()) {
    if (e.delta < 0) {
      rising = false;
    } else if (!rising) {
      // occ rises again at key e.key: the crest stops at the last integer
      // strictly before that point, ceil(key / 2) - 1.
      const Value end = (e.key + 1) / 2 - 1;
      part.crests.push_back({start, end});
      start = end + 1;
      rising = true;
    }
  }
  part.crests.push_back({start, lambda});
  return part;
}

Instance reduce_by_crests(const Instance& instance, const CrestPartition& part) {
  instance.require_contiguous("reduce_by_crests");
  std::vector<Domain> reduced;
  reduced.reserve(instance.num_variables());
  for (const Domain& d : instance.domains())
    reduced.push_back(Domain::interval(part.crest_of(d.min()), part.crest_of(d.max())));
  return Instance(std::vector<std::string>(instance.names().begin(), instance.names().end()),
                  std::move(reduced), static_cast<Value>(part.size()));
}

}  // namespace softeq
