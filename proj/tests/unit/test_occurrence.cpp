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

#include <catch_amalgamated.hpp>

#include <cmath>

#include "support.hpp"

using namespace softeq;
using namespace softeq::testing;

namespace {

using Events = std::vector<DeltaEvent>;

Events events(const DeltaList& d) { return {d.events().begin(), d.events().end()}; }

std::int64_t direct_occ(const Instance& i, Value v) {
  std::int64_t c = 0;
  for (const Domain& d : i.domains()) c += d.contains(v);
  return c;
}

Instance iv(std::vector<std::pair<Value, Value>> ranges) {
  std::vector<Domain> d;
  for (auto [lo, hi] : ranges) d.push_back(Domain::interval(lo, hi));
  return Instance(std::move(d));
}

}  // namespace

TEST_CASE("delta list keeps keys sorted and drops zeros", "[occurrence]") {
  DeltaList d;
  d.add(8, -1);
  d.add(2, 1);
  d.add(5, 1);
  d.add(5, -1);
  CHECK(events(d) == Events{{2, 1}, {8, -1}});
  CHECK(d.at(5) == 0);
  CHECK(d.at(8) == -1);
}

TEST_CASE("build_delta on the integer grid", "[occurrence]") {
  CHECK(events(build_delta(iv({{1, 3}}), DomainEnd::NextInteger)) == Events{{2, 1}, {8, -1}});
  CHECK(events(build_delta(iv({{1, 2}, {2, 3}}), DomainEnd::NextInteger)) ==
        Events{{2, 1}, {4, 1}, {6, -1}, {8, -1}});
  CHECK(events(build_delta(iv({{1, 3}}), DomainEnd::HalfPoint)) == Events{{2, 1}, {7, -1}});
}

TEST_CASE("build_delta names the non-contiguous variable", "[occurrence]") {
  const Instance i = inst("var A set 1 2\nvar Odd set 1 3\n");
  try {
    build_delta(i, DomainEnd::NextInteger);
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("Odd") != std::string::npos);
  }
}

TEST_CASE("inverse occurrence examples", "[occurrence]") {
  for (OccBackend b : {OccBackend::SortedList, OccBackend::Array, OccBackend::Auto}) {
    const InverseOcc one = inverse_occurrence(iv({{1, 3}}), b);
    CHECK(one.values_with(1) == Domain::interval(1, 3));
    CHECK(one.max_count() == 1);

    const InverseOcc two = inverse_occurrence(iv({{1, 2}, {2, 3}}), b);
    CHECK(two.values_with(1) == Domain::of_values({1, 3}));
    CHECK(two.values_with(2) == Domain::singleton(2));

    const InverseOcc four =
        inverse_occurrence(inst("var A set 5\nvar B set 5\nvar C set 5\nvar D set 5\n"), b);
    CHECK(four.values_with(4) == Domain::singleton(1));
    CHECK(four.max_count() == 4);
  }
}

TEST_CASE("sweep buckets equal direct counting", "[occurrence][property]") {
  Rng rng(3);
  for (int t = 0; t < 500; ++t) {
    const Instance i = random_instance(rng, GenKind::Interval, static_cast<std::size_t>(rng.uniform(1, 9)),
                                       rng.uniform(1, 20), 0);
    const InverseOcc sorted = inverse_occurrence(i, OccBackend::SortedList);
    const InverseOcc array = inverse_occurrence(i, OccBackend::Array);
    const InverseOcc exact = count_occurrences(i);
    CHECK(sorted.buckets == array.buckets);
    CHECK(sorted.buckets == exact.buckets);
    std::int64_t weighted = 0, covered = 0;
    for (std::size_t x = 0; x < sorted.buckets.size(); ++x)
      for (const Interval& piece : sorted.buckets[x]) {
        weighted += static_cast<std::int64_t>(x) * piece.width();
        covered += piece.width();
        for (Value v = piece.lo; v <= piece.hi; ++v)
          CHECK(direct_occ(i, v) == static_cast<std::int64_t>(x));
      }
    CHECK(weighted == i.total_domain_size());
    CHECK(covered == i.num_values());
  }
}

TEST_CASE("exact counting handles set domains", "[occurrence]") {
  const Instance i = inst("var A set 1 3\nvar B set 2 3\nvar C set 3\n");
  const InverseOcc inv = count_occurrences(i);
  CHECK(inv.values_with(1) == Domain::of_values({1, 2}));
  CHECK(inv.values_with(3) == Domain::singleton(3));
}

TEST_CASE("crest partition examples", "[occurrence]") {
  CHECK(crest_partition(iv({{1, 5}, {2, 4}, {3, 3}})).crests == std::vector<Interval>{{1, 5}});
  CHECK(crest_partition(iv({{1, 2}, {4, 5}})).crests == std::vector<Interval>{{1, 3}, {4, 5}});
  CHECK(crest_partition(iv({{1, 2}, {2, 3}})).crests == std::vector<Interval>{{1, 3}});
  // A variable ending at t keeps t in its crest.
  CHECK(crest_partition(iv({{1, 2}, {3, 4}})).crests == std::vector<Interval>{{1, 2}, {3, 4}});
}

TEST_CASE("crest reduction examples", "[occurrence]") {
  const Instance single = iv({{1, 5}, {2, 4}, {3, 3}});
  const Instance r1 = reduce_by_crests(single, crest_partition(single));
  CHECK(r1.num_values() == 1);
  for (const Domain& d : r1.domains()) CHECK(d == Domain::singleton(1));

  const Instance split = iv({{1, 2}, {4, 5}});
  const CrestPartition part = crest_partition(split);
  CHECK(part.crest_of(3) == 1);
  CHECK(part.crest_of(4) == 2);
  const Instance r2 = reduce_by_crests(split, part);
  CHECK(r2.domain(0) == Domain::singleton(1));
  CHECK(r2.domain(1) == Domain::singleton(2));
}

TEST_CASE("crests are unimodal, cover the values and number at most n", "[occurrence][property]") {
  Rng rng(5);
  for (int t = 0; t < 500; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 8));
    const Instance i = random_instance(rng, GenKind::Interval, n, rng.uniform(1, 15), 0);
    const CrestPartition part = crest_partition(i);
    REQUIRE_FALSE(part.crests.empty());
    CHECK(part.size() <= n);
    CHECK(part.crests.front().lo == 1);
    CHECK(part.crests.back().hi == i.num_values());
    for (std::size_t c = 1; c < part.size(); ++c)
      CHECK(part.crests[c - 1].hi + 1 == part.crests[c].lo);
    // occ over half points of each crest: rises, then falls.
    for (const Interval& crest : part.crests) {
      auto occ_key = [&](std::int64_t key) {
        std::int64_t c = 0;
        for (const Domain& d : i.domains()) c += 2 * d.min() <= key && key <= 2 * d.max();
        return c;
      };
      bool falling = false;
      std::int64_t prev = occ_key(2 * crest.lo);
      for (std::int64_t key = 2 * crest.lo + 1; key <= 2 * crest.hi; ++key) {
        const std::int64_t cur = occ_key(key);
        if (cur < prev) falling = true;
        if (falling) CHECK(cur <= prev);
        prev = cur;
      }
    }
    const Instance reduced = reduce_by_crests(i, part);
    CHECK(reduced.num_values() == static_cast<Value>(part.size()));
    CHECK(reduced.all_contiguous());
  }
}

TEST_CASE("crest reduction keeps the optimum", "[occurrence][property]") {
  Rng rng(8);
  for (int t = 0; t < 200; ++t) {
    const Instance i = random_instance(rng, GenKind::Interval, static_cast<std::size_t>(rng.uniform(1, 6)),
                                       rng.uniform(1, 12), 0);
    const Instance reduced = reduce_by_crests(i, crest_partition(i));
    CHECK(brute_force_optimum(i).optimum == brute_force_optimum(reduced).optimum);
  }
}

TEST_CASE("array backend is chosen for dense alphabets", "[occurrence]") {
  // Both backends must agree whatever Auto picks; this pins the threshold
  // inputs on each side of lambda = n log2 n.
  const Instance dense = iv({{1, 2}, {1, 3}, {2, 3}, {1, 1}});
  const Instance sparse = iv({{1, 40}, {30, 90}});
  CHECK(static_cast<double>(dense.num_values()) < 4 * std::log2(4.0));
  CHECK(static_cast<double>(sparse.num_values()) >= 2 * std::log2(2.0));
  CHECK(inverse_occurrence(dense).buckets == inverse_occurrence(dense, OccBackend::Array).buckets);
  CHECK(inverse_occurrence(sparse).buckets ==
        inverse_occurrence(sparse, OccBackend::SortedList).buckets);
}
