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

#include "softeq/oracle.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "softeq/error.hpp"
#include "text_util.hpp"

namespace softeq {

namespace {

// Odometer over per-variable candidate lists, last variable fastest.
template <class F>
void enumerate(const std::vector<std::vector<Value>>& choices, std::uint64_t cap,
               const char* who, F&& visit) {
  std::uint64_t total = 1;
  for (const auto& c : choices) {
    if (c.empty()) return;
    if (total > cap / c.size())
      throw BudgetExceeded(std::string(who) + ": search space exceeds the cap of " +
                           std::to_string(cap));
    total *= c.size();
  }
  std::vector<std::size_t> digit(choices.size(), 0);
  std::vector<Value> values(choices.size());
  for (std::size_t i = 0; i < choices.size(); ++i) values[i] = choices[i][0];
  while (true) {
    visit(values);
    std::size_t i = choices.size();
    while (i > 0) {
      --i;
      if (++digit[i] < choices[i].size()) {
        values[i] = choices[i][digit[i]];
        break;
      }
      digit[i] = 0;
      values[i] = choices[i][0];
      if (i == 0) return;
    }
    if (choices.empty()) return;
  }
}

std::int64_t equal_pairs(const std::vector<Value>& values) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j) total += values[i] == values[j];
  return total;
}

}  // namespace

BruteForceResult brute_force_optimum(const Instance& instance, std::uint64_t cap) {
  std::vector<std::vector<Value>> choices;
  for (const Domain& d : instance.domains()) choices.push_back(d.values());
  BruteForceResult result;
  result.optimum = -1;
  enumerate(choices, cap, "brute_force_optimum", [&](const std::vector<Value>& values) {
    const std::int64_t e = equal_pairs(values);
    if (e > result.optimum) {
      result.optimum = e;
      result.optima.clear();
    }
    if (e == result.optimum) result.optima.push_back(Assignment(instance, values));
  });
  if (result.optimum < 0) result.optimum = 0;
  return result;
}

namespace {

struct PartitionSearch {
  const Instance& instance;
  std::uint64_t cap;
  std::uint64_t visited = 0;
  std::vector<Domain> common;        // per group, the values all members share
  std::vector<std::size_t> members;  // per group, its size
  std::vector<std::size_t> group_of;
  BruteForceResult result;

  void record(std::int64_t equalities) {
    if (equalities > result.optimum) {
      result.optimum = equalities;
      result.optima.clear();
    }
    if (equalities < result.optimum) return;
    std::vector<Value> values(group_of.size());
    for (std::size_t x = 0; x < group_of.size(); ++x) values[x] = common[group_of[x]].min();
    result.optima.push_back(Assignment(instance, std::move(values)));
  }

  void visit(std::size_t x, std::int64_t equalities) {
    if (++visited > cap)
      throw BudgetExceeded("brute_force_partitions: more than " + std::to_string(cap) +
                           " partial partitions");
    if (x == group_of.size()) {
      record(equalities);
      return;
    }
    const Domain& d = instance.domain(x);
    for (std::size_t g = 0; g < common.size(); ++g) {
      Domain shared = common[g].intersect(d);
      if (shared.empty()) continue;
      std::swap(common[g], shared);
      ++members[g];
      group_of[x] = g;
      visit(x + 1, equalities + static_cast<std::int64_t>(members[g]) - 1);
      --members[g];
      std::swap(common[g], shared);
    }
    common.push_back(d);
    members.push_back(1);
    group_of[x] = common.size() - 1;
    visit(x + 1, equalities);
    common.pop_back();
    members.pop_back();
  }
};

}  // namespace

BruteForceResult brute_force_partitions(const Instance& instance, std::uint64_t cap) {
  PartitionSearch search{instance, cap, 0, {}, {}, {}, {}};
  search.group_of.assign(instance.num_variables(), 0);
  search.result.optimum = -1;
  search.visit(0, 0);
  return std::move(search.result);
}

bool satisfiable(SoftConstraint constraint, const CostReport& r, CostBounds b) {
  if (b.empty()) return false;
  switch (constraint) {
    case SoftConstraint::AllDiffVarMin:
      return b.hi >= r.alldiff_var;
    case SoftConstraint::AllDiffVarMax:
      return b.lo <= r.alldiff_var;
    case SoftConstraint::AllDiffGraphMin:
      return b.hi >= r.equalities;
    case SoftConstraint::AllEqualGraphMin:
      return b.hi >= r.disequalities;
    case SoftConstraint::AllEqualVarMin:
      return b.hi >= r.allequal_var;
    case SoftConstraint::AllEqualVarMax:
      return b.lo <= r.allequal_var;
  }
  return false;
}

SupportMap brute_force_supports(const Instance& instance, SoftConstraint constraint,
                                CostBounds bounds, SupportKind kind, std::uint64_t cap) {
  SupportMap supports;
  std::vector<std::vector<Value>> choices;
  for (VarIndex x = 0; x < instance.num_variables(); ++x) {
    const Domain& d = instance.domain(x);
    d.for_each_value([&](Value v) { supports[{x, v}] = false; });
    choices.push_back(kind == SupportKind::Domain ? d.values()
                                                  : Domain::interval(d.min(), d.max()).values());
  }
  // A satisfying assignment over the candidates supports every (X, s[X])
  // whose value lies in D(X).
  enumerate(choices, cap, "brute_force_supports", [&](const std::vector<Value>& values) {
    if (!satisfiable(constraint, evaluate(Assignment::relaxed(values)), bounds)) return;
    for (VarIndex x = 0; x < values.size(); ++x) {
      auto it = supports.find({x, values[x]});
      if (it != supports.end()) it->second = true;
    }
  });
  return supports;
}

ThreeDMInstance parse_3dm(std::string_view text) {
  ThreeDMInstance tdm;
  std::unordered_map<std::string, std::pair<char, std::size_t>> elements;
  detail::for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& w) {
    if (w[0] == "elem") {
      if (w.size() != 3 || (w[1] != "x" && w[1] != "y" && w[1] != "z"))
        throw ParseError(line, "expected 'elem x|y|z <name>'");
      std::string name(w[2]);
      auto& list = w[1] == "x" ? tdm.xs : w[1] == "y" ? tdm.ys : tdm.zs;
      if (!elements.try_emplace(name, w[1][0], list.size()).second)
        throw ParseError(line, "duplicate element " + name);
      list.push_back(name);
    } else if (w[0] == "triple") {
      if (w.size() != 4) throw ParseError(line, "expected 'triple <x> <y> <z>'");
      std::size_t idx[3];
      const char sets[3] = {'x', 'y', 'z'};
      for (int i = 0; i < 3; ++i) {
        auto it = elements.find(std::string(w[static_cast<std::size_t>(i) + 1]));
        if (it == elements.end() || it->second.first != sets[i])
          throw ParseError(line, "triple coordinate " + std::to_string(i + 1) +
                                     " is not a declared " + sets[i] + " element");
        idx[i] = it->second.second;
      }
      tdm.triples.push_back({idx[0], idx[1], idx[2]});
    } else {
      throw ParseError(line, "unknown directive '" + std::string(w[0]) + "'");
    }
  });
  return tdm;
}

std::string format_3dm(const ThreeDMInstance& tdm) {
  std::ostringstream out;
  for (const auto& x : tdm.xs) out << "elem x " << x << '\n';
  for (const auto& y : tdm.ys) out << "elem y " << y << '\n';
  for (const auto& z : tdm.zs) out << "elem z " << z << '\n';
  for (const auto& t : tdm.triples)
    out << "triple " << tdm.xs[t.x] << ' ' << tdm.ys[t.y] << ' ' << tdm.zs[t.z] << '\n';
  return out.str();
}

Instance reduce_3dm(const ThreeDMInstance& tdm) {
  std::vector<std::string> names;
  for (const auto* set : {&tdm.xs, &tdm.ys, &tdm.zs})
    for (const auto& e : *set) names.push_back(e);
  const auto n = static_cast<Value>(names.size());
  const auto t = static_cast<Value>(tdm.triples.size());
  std::vector<std::vector<Value>> raw(names.size());
  for (std::size_t l = 0; l < tdm.triples.size(); ++l) {
    const auto& tr = tdm.triples[l];
    const auto value = static_cast<Value>(l + 1);
    raw[tr.x].push_back(value);
    raw[tdm.xs.size() + tr.y].push_back(value);
    raw[tdm.xs.size() + tdm.ys.size() + tr.z].push_back(value);
  }
  for (Value i = 1; i <= n; ++i) {
    for (Value j = i + 1; j <= n; ++j) {
      const Value value = t + (i - 1) * n + j;
      raw[static_cast<std::size_t>(i - 1)].push_back(value);
      raw[static_cast<std::size_t>(j - 1)].push_back(value);
    }
  }
  // Normalization keeps occurrence counts, so the bound is checked on the
  // raw values.
  std::unordered_map<Value, int> occ;
  for (const auto& d : raw)
    for (Value v : d)
      if (++occ[v] > 3) throw InternalError("reduce_3dm: value in more than three domains");
  std::vector<Domain> domains;
  for (auto& d : raw) domains.push_back(Domain::of_values(std::move(d)));
  return Instance::normalize(std::move(names), std::move(domains));
}

std::int64_t brute_force_3dm(const ThreeDMInstance& tdm) {
  const std::size_t t = tdm.triples.size();
  if (t > 20) throw BudgetExceeded("brute_force_3dm: more than 20 triples");
  std::int64_t best = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << t); ++mask) {
    std::vector<bool> used_x(tdm.xs.size()), used_y(tdm.ys.size()), used_z(tdm.zs.size());
    bool ok = true;
    std::int64_t size = 0;
    for (std::size_t l = 0; l < t && ok; ++l) {
      if (!(mask >> l & 1U)) continue;
      const auto& tr = tdm.triples[l];
      if (used_x[tr.x] || used_y[tr.y] || used_z[tr.z]) ok = false;
      used_x[tr.x] = used_y[tr.y] = used_z[tr.z] = true;
      ++size;
    }
    if (ok) best = std::max(best, size);
  }
  return best;
}

CnSimTruth brute_force_cn_sim(const MultiInstance& multi, std::vector<CostBounds> column_bounds,
                              std::uint64_t cap) {
  const std::size_t k = multi.copies();
  const std::size_t n = multi.columns();
  const CostBounds objective = multi.objective();
  CnSimTruth truth;
  std::vector<std::vector<Value>> choices;  // cell index = column * k + copy
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const Domain& d = multi.domain(j, i);
      choices.push_back(Domain::interval(d.min(), d.max()).values());
    }
  std::vector<std::vector<bool>> seen(k * n);
  for (std::size_t c = 0; c < k * n; ++c) seen[c].assign(choices[c].size(), false);

  constexpr std::int64_t none = std::numeric_limits<std::int64_t>::max();
  std::int64_t n_lo = none;
  std::vector<std::int64_t> col_lo(n, none), col_hi(n, std::numeric_limits<std::int64_t>::min());
  std::vector<std::int64_t> diseq(n), floor(n);

  enumerate(choices, cap, "brute_force_cn_sim", [&](const std::vector<Value>& values) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t eq = 0;
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) eq += values[i * k + a] == values[i * k + b];
      diseq[i] = pairs(static_cast<std::int64_t>(k)) - eq;
      if (diseq[i] > column_bounds[i].hi || column_bounds[i].empty()) return;
      floor[i] = std::max(column_bounds[i].lo, diseq[i]);
      sum += floor[i];
    }
    if (objective.empty() || sum > objective.hi) return;
    truth.feasible = true;
    n_lo = std::min(n_lo, std::max(objective.lo, sum));
    for (std::size_t i = 0; i < n; ++i) {
      col_lo[i] = std::min(col_lo[i], floor[i]);
      col_hi[i] = std::max(col_hi[i], std::min(column_bounds[i].hi, objective.hi - (sum - floor[i])));
    }
    for (std::size_t c = 0; c < k * n; ++c)
      seen[c][static_cast<std::size_t>(values[c] - choices[c].front())] = true;
  });

  if (!truth.feasible) return truth;
  truth.objective = {n_lo, objective.hi};
  for (std::size_t i = 0; i < n; ++i) {
    truth.column_bounds.push_back({col_lo[i], col_hi[i]});
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t c = i * k + j;
      std::vector<Value> kept;
      multi.domain(j, i).for_each_value([&](Value v) {
        if (seen[c][static_cast<std::size_t>(v - choices[c].front())]) kept.push_back(v);
      });
      truth.supported.emplace(std::make_pair(j, i), Domain::of_values(std::move(kept)));
    }
  }
  return truth;
}

}  // namespace softeq
