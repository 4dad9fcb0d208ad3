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

std::vector<Label> labels_of(const Instance& i, VarIndex x) {
  std::vector<Label> out;
  i.domain(x).for_each_value([&](Value v) { out.push_back(i.label(v)); });
  return out;
}

/// Largest disjoint triple set by include/exclude recursion.
std::int64_t recount(const ThreeDMInstance& t, std::size_t next, std::vector<bool>& used) {
  if (next == t.triples.size()) return 0;
  std::int64_t best = recount(t, next + 1, used);
  const auto& tr = t.triples[next];
  const std::size_t nx = t.xs.size(), ny = t.ys.size();
  const std::size_t ids[3] = {tr.x, nx + tr.y, nx + ny + tr.z};
  if (!used[ids[0]] && !used[ids[1]] && !used[ids[2]]) {
    for (std::size_t id : ids) used[id] = true;
    best = std::max(best, 1 + recount(t, next + 1, used));
    for (std::size_t id : ids) used[id] = false;
  }
  return best;
}

ThreeDMInstance random_3dm(Rng& rng) {
  GenParams p;
  p.n = static_cast<std::size_t>(rng.uniform(1, 3));
  p.triples = static_cast<std::size_t>(rng.uniform(0, std::min<std::int64_t>(6, static_cast<std::int64_t>(p.n * p.n * p.n))));
  return generate_3dm(p, rng);
}

}  // namespace

TEST_CASE("brute force optimum examples", "[oracle][examples]") {
  const BruteForceResult t7 = brute_force_optimum(tight_greedy_instance());
  CHECK(t7.optimum == 2);
  const Assignment abab = Assignment::relaxed({1, 2, 1, 2});
  CHECK(std::find(t7.optima.begin(), t7.optima.end(), abab) != t7.optima.end());

  CHECK(brute_force_optimum(inst("var A set 1 2 3\n")).optimum == 0);
  const BruteForceResult same = brute_force_optimum(inst("var A set 3\nvar B set 3\nvar C set 3\nvar D set 3\n"));
  CHECK(same.optimum == 6);
  CHECK(same.optima.size() == 1);
  CHECK_THROWS_AS(brute_force_optimum(tight_greedy_instance(), 3), BudgetExceeded);
}

TEST_CASE("brute force optima are complete and ordered", "[oracle][property]") {
  Rng rng(10);
  for (int t = 0; t < 100; ++t) {
    const Instance i = random_instance(rng, GenKind::Set, 4, 4);
    const BruteForceResult r = brute_force_optimum(i);
    std::int64_t best = -1, count = 0;
    for (Value a : i.domain(0).values())
      for (Value b : i.domain(1).values())
        for (Value c : i.domain(2).values())
          for (Value d : i.domain(3).values()) {
            const std::int64_t e = evaluate(Assignment::relaxed({a, b, c, d})).equalities;
            if (e > best) best = e, count = 0;
            count += e == best;
          }
    CHECK(r.optimum == best);
    CHECK(static_cast<std::int64_t>(r.optima.size()) == count);
    const BruteForceResult p = brute_force_partitions(i);
    CHECK(p.optimum == best);
    for (const Assignment& s : p.optima) CHECK(evaluate(s).equalities >= best);
    CHECK(std::is_sorted(r.optima.begin(), r.optima.end()));
  }
}

TEST_CASE("support oracle trivial bounds", "[oracle]") {
  const Instance i = inst("var A set 1 2\nvar B set 2 3\n");
  const SupportMap all =
      brute_force_supports(i, SoftConstraint::AllDiffGraphMin, {0, 1}, SupportKind::Domain);
  CHECK(all.size() == 4);
  for (const auto& [key, ok] : all) CHECK(ok);
  const SupportMap none =
      brute_force_supports(i, SoftConstraint::AllDiffGraphMin, {1, 0}, SupportKind::Domain);
  for (const auto& [key, ok] : none) CHECK_FALSE(ok);
}

TEST_CASE("satisfiable reads each constraint's direction", "[oracle]") {
  const CostReport r = evaluate(Assignment::relaxed({1, 1, 1, 1, 2, 2, 3}));
  CHECK(satisfiable(SoftConstraint::AllDiffVarMin, r, {0, 4}));
  CHECK_FALSE(satisfiable(SoftConstraint::AllDiffVarMin, r, {0, 3}));
  CHECK(satisfiable(SoftConstraint::AllDiffVarMax, r, {4, 9}));
  CHECK_FALSE(satisfiable(SoftConstraint::AllDiffVarMax, r, {5, 9}));
  CHECK(satisfiable(SoftConstraint::AllDiffGraphMin, r, {0, 7}));
  CHECK_FALSE(satisfiable(SoftConstraint::AllDiffGraphMin, r, {0, 6}));
  CHECK(satisfiable(SoftConstraint::AllEqualGraphMin, r, {0, 14}));
  CHECK_FALSE(satisfiable(SoftConstraint::AllEqualGraphMin, r, {0, 13}));
  CHECK(satisfiable(SoftConstraint::AllEqualVarMin, r, {0, 3}));
  CHECK_FALSE(satisfiable(SoftConstraint::AllEqualVarMin, r, {0, 2}));
  CHECK(satisfiable(SoftConstraint::AllEqualVarMax, r, {3, 3}));
  CHECK_FALSE(satisfiable(SoftConstraint::AllEqualVarMax, r, {4, 7}));
}

TEST_CASE("domain supports are range supports", "[oracle][property]") {
  Rng rng(12);
  const SoftConstraint all[] = {SoftConstraint::AllDiffVarMin,  SoftConstraint::AllDiffVarMax,
                                SoftConstraint::AllDiffGraphMin, SoftConstraint::AllEqualGraphMin,
                                SoftConstraint::AllEqualVarMin, SoftConstraint::AllEqualVarMax};
  for (int t = 0; t < 100; ++t) {
    const Instance i = random_instance(rng, GenKind::Set, 4, 5);
    const std::int64_t lo = rng.uniform(0, 6);
    const CostBounds b{lo, rng.uniform(lo, 6)};
    for (SoftConstraint c : all) {
      const SupportMap d = brute_force_supports(i, c, b, SupportKind::Domain);
      const SupportMap r = brute_force_supports(i, c, b, SupportKind::Range);
      for (const auto& [key, ok] : d)
        if (ok) CHECK(r.at(key));
    }
  }
}

TEST_CASE("3dm gadget example", "[oracle]") {
  const ThreeDMInstance t = parse_3dm("elem x a\nelem y b\nelem z c\ntriple a b c\n");
  const Instance g = reduce_3dm(t);
  CHECK(g.num_variables() == 3);
  CHECK(labels_of(g, 0) == std::vector<Label>{1, 3, 4});
  CHECK(labels_of(g, 1) == std::vector<Label>{1, 3, 7});
  CHECK(labels_of(g, 2) == std::vector<Label>{1, 4, 7});
  CHECK(g.normalized());

  ThreeDMInstance empty = t;
  empty.triples.clear();
  CHECK(brute_force_optimum(reduce_3dm(empty)).optimum == 1);
}

TEST_CASE("3dm text format", "[oracle]") {
  const std::string text = "elem x a\nelem x b\nelem y c\nelem z d\ntriple a c d\ntriple b c d\n";
  const ThreeDMInstance t = parse_3dm(text);
  CHECK(format_3dm(t) == text);
  CHECK_THROWS_AS(parse_3dm("elem x a\nelem y a\n"), ParseError);
  CHECK_THROWS_AS(parse_3dm("elem x a\ntriple a a a\n"), ParseError);
  CHECK_THROWS_AS(parse_3dm("elem w a\n"), ParseError);
}

TEST_CASE("3dm brute force", "[oracle]") {
  CHECK(brute_force_3dm(parse_3dm("elem x a\nelem y b\nelem z c\ntriple a b c\n")) == 1);
  CHECK(brute_force_3dm(parse_3dm(
            "elem x a\nelem x d\nelem y b\nelem y e\nelem z c\ntriple a b c\ntriple d e c\n")) == 1);
  ThreeDMInstance big;
  big.xs = {"a"};
  big.ys = {"b"};
  big.zs = {"c"};
  big.triples.assign(21, {0, 0, 0});
  CHECK_THROWS_AS(brute_force_3dm(big), BudgetExceeded);
  Rng rng(15);
  for (int t = 0; t < 100; ++t) {
    const ThreeDMInstance r = random_3dm(rng);
    std::vector<bool> used(3 * r.xs.size());
    CHECK(brute_force_3dm(r) == recount(r, 0, used));
  }
}

TEST_CASE("3dm gadget optimum", "[oracle][property]") {
  Rng rng(16);
  for (int t = 0; t < 100; ++t) {
    const ThreeDMInstance r = random_3dm(rng);
    const Instance g = reduce_3dm(r);
    const auto n = static_cast<std::int64_t>(g.num_variables());
    CHECK(brute_force_partitions(g).optimum == (3 * brute_force_3dm(r) + n) / 2);
    if (n <= 6) CHECK(brute_force_optimum(g, 100'000'000).optimum == (3 * brute_force_3dm(r) + n) / 2);
    CHECK(count_occurrences(g).max_count() <= 3);
  }
}
