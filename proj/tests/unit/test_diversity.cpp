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

#include "support.hpp"

using namespace softeq;
using namespace softeq::testing;

namespace {

std::int64_t rowwise(const std::vector<Assignment>& rows) {
  std::int64_t total = 0;
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = a + 1; b < rows.size(); ++b) total += hamming(rows[a], rows[b]);
  return total;
}

MultiInstance random_multi(Rng& rng, std::size_t copies, std::size_t columns, Value lambda) {
  GenParams p;
  p.copies = copies;
  p.n = columns;
  p.lambda = lambda;
  p.max_size = 0;
  return generate_multi(p, rng);
}

}  // namespace

TEST_CASE("hamming distance", "[diversity]") {
  const Assignment a = Assignment::relaxed({1, 2, 3});
  CHECK(hamming(a, Assignment::relaxed({1, 3, 3})) == 1);
  CHECK(hamming(a, a) == 0);
  CHECK(hamming(a, Assignment::relaxed({4, 5, 6})) == 3);
  CHECK_THROWS_AS(hamming(a, Assignment::relaxed({1})), PreconditionError);
}

TEST_CASE("sum of pairwise distances", "[diversity]") {
  const Assignment a = Assignment::relaxed({1, 2, 3});
  const Assignment b = Assignment::relaxed({1, 3, 3});
  const std::vector<Assignment> same = {a, a, a};
  CHECK(sum_pairwise_distance(same) == 0);
  const std::vector<Assignment> two = {a, b};
  CHECK(sum_pairwise_distance(two) == hamming(a, b));
  const std::vector<Assignment> one = {a};
  CHECK_THROWS_AS(sum_pairwise_distance(one), PreconditionError);
}

TEST_CASE("column-wise distance equals row-wise distance", "[diversity][property]") {
  Rng rng(44);
  for (int t = 0; t < 500; ++t) {
    std::vector<Assignment> rows;
    const auto k = static_cast<std::size_t>(rng.uniform(2, 5));
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<Value> v(5);
      for (auto& x : v) x = rng.uniform(1, 4);
      rows.push_back(Assignment::relaxed(v));
    }
    CHECK(sum_pairwise_distance(rows) == rowwise(rows));
  }
}

TEST_CASE("multi-instance text", "[diversity]") {
  const MultiInstance m = parse_multi_instance(
      "copies 2\nvar 1.a interval 10 12\nvar 1.b set 12\nvar 2.a set 11\nvar 2.b interval 12 13\n"
      "cost max 1\n");
  CHECK(m.copies() == 2);
  CHECK(m.columns() == 2);
  CHECK(m.column_name(1) == "b");
  CHECK(m.num_values() == 4);
  CHECK(m.domain(1, 0) == Domain::singleton(2));
  CHECK(m.objective() == CostBounds{0, 1});
  CHECK(m.column(0).name(1) == "2.a");
  CHECK(format_multi_instance(parse_multi_instance(format_multi_instance(m))) ==
        format_multi_instance(m));
  CHECK(parse_multi_instance("copies 3\nvar 1.a set 1\nvar 2.a set 1\nvar 3.a set 2\n").objective() ==
        CostBounds{0, 3});
  CHECK_THROWS_AS(parse_multi_instance("var 1.a set 1\n"), ParseError);
  CHECK_THROWS_AS(parse_multi_instance("copies 2\nvar 1.a set 1\n"), ParseError);
  CHECK_THROWS_AS(parse_multi_instance("copies 2\nvar 3.a set 1\n"), ParseError);
  CHECK_THROWS_AS(parse_multi_instance("copies 1\n"), ParseError);
  CHECK_THROWS_AS(parse_multi_instance("copies 2\nvar a set 1\n"), ParseError);
}

TEST_CASE("similarity network examples", "[diversity]") {
  const MultiInstance equal = parse_multi_instance("copies 2\nvar 1.a set 1\nvar 2.a set 1\n");
  const CnSimOutcome e = propagate_cn_sim(equal);
  CHECK_FALSE(e.failed());
  CHECK(e.column_bounds[0].lo == 0);
  CHECK(e.objective.lo == 0);

  const std::string distinct = "copies 3\nvar 1.a set 1\nvar 2.a set 2\nvar 3.a set 3\n";
  const CnSimOutcome d = propagate_cn_sim(parse_multi_instance(distinct));
  CHECK_FALSE(d.failed());
  CHECK(d.column_bounds[0].lo == 3);
  CHECK(d.objective.lo == 3);
  CHECK(propagate_cn_sim(parse_multi_instance(distinct + "cost max 2\n")).failed());

  CHECK_THROWS_AS(
      propagate_cn_sim(parse_multi_instance("copies 2\nvar 1.a set 1 3\nvar 2.a set 2\n")),
      PreconditionError);
}

TEST_CASE("similarity network is Berge-acyclic", "[diversity]") {
  Rng rng(1);
  const MultiInstance m = random_multi(rng, 3, 4, 4);
  CHECK(check_berge_acyclic(cn_sim_hypergraph(m)));
  CHECK(check_berge_acyclic(cn_sim_hypergraph(random_multi(rng, 2, 1, 3))));
  ConstraintHypergraph merged = cn_sim_hypergraph(m);
  merged.scopes[0].push_back(1);  // column 1 shares a grid cell with column 2
  CHECK_FALSE(check_berge_acyclic(merged));
  CHECK_FALSE(check_berge_acyclic({3, {{0, 1}, {1, 2}, {2, 0}}}));
  CHECK(check_berge_acyclic({3, {{0, 1}, {1, 2}}}));
}

TEST_CASE("similarity propagation matches the grid oracle", "[diversity][property]") {
  Rng rng(2718);
  for (int t = 0; t < 150; ++t) {
    const MultiInstance m = random_multi(rng, 3, 3, rng.uniform(1, 4));
    std::vector<CostBounds> bounds(m.columns(), m.column_range());
    for (auto& b : bounds)
      if (rng.uniform(0, 2) == 0) b.hi = rng.uniform(0, b.hi);
    const CnSimTruth truth = brute_force_cn_sim(m, bounds);
    const CnSimOutcome out = propagate_cn_sim(m, bounds);
    INFO(format_multi_instance(m));
    REQUIRE(out.failed() == !truth.feasible);
    if (out.failed()) continue;
    for (std::size_t j = 0; j < m.copies(); ++j)
      for (std::size_t i = 0; i < m.columns(); ++i) {
        auto it = out.pruned.find({j, i});
        const Domain& got = it == out.pruned.end() ? m.domain(j, i) : it->second;
        CHECK(got == truth.supported.at({j, i}));
      }
    CHECK(out.objective == truth.objective);
    CHECK(out.column_bounds == truth.column_bounds);
  }
}

TEST_CASE("similarity propagation only tightens", "[diversity][property]") {
  Rng rng(3141);
  for (int t = 0; t < 100; ++t) {
    const MultiInstance m = random_multi(rng, 3, 3, 4);
    const CnSimOutcome out = propagate_cn_sim(m);
    if (out.failed()) continue;
    CHECK(out.objective.lo >= m.objective().lo);
    CHECK(out.objective.hi == m.objective().hi);
    for (const CostBounds& b : out.column_bounds) {
      CHECK(b.lo >= 0);
      CHECK(b.hi <= m.column_range().hi);
    }
    for (const auto& [cell, d] : out.pruned) CHECK(m.domain(cell.first, cell.second).contains(d));
  }
}
