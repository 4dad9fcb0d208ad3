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

#include "softeq/diversity.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <unordered_map>

#include "softeq/error.hpp"
#include "text_util.hpp"

namespace softeq {

std::int64_t hamming(const Assignment& a, const Assignment& b) {
  if (a.size() != b.size())
    throw PreconditionError("hamming: assignments of different lengths");
  std::int64_t d = 0;
  for (VarIndex x = 0; x < a.size(); ++x) d += a[x] != b[x];
  return d;
}

std::int64_t sum_pairwise_distance(std::span<const Assignment> solutions) {
  if (solutions.size() < 2) throw PreconditionError("sum_pairwise_distance: needs k >= 2");
  const std::size_t n = solutions[0].size();
  for (const auto& s : solutions)
    if (s.size() != n)
      throw PreconditionError("sum_pairwise_distance: assignments of different lengths");
  const auto k = static_cast<std::int64_t>(solutions.size());
  std::int64_t total = 0;
  for (VarIndex i = 0; i < n; ++i) {
    std::unordered_map<Value, std::int64_t> mult;
    for (const auto& s : solutions) ++mult[s[i]];
    std::int64_t eq = 0;
    for (const auto& [v, c] : mult) eq += pairs(c);
    total += pairs(k) - eq;
  }
  return total;
}

MultiInstance::MultiInstance(std::vector<std::string> columns,
                             std::vector<std::vector<Domain>> grid, Value num_values,
                             ValueLabels labels, CostBounds objective)
    : columns_(std::move(columns)),
      grid_(std::move(grid)),
      num_values_(num_values),
      labels_(std::move(labels)),
      objective_(objective) {
  if (grid_.size() < 2) throw PreconditionError("multi-instance needs at least two copies");
  if (columns_.empty()) throw PreconditionError("multi-instance needs at least one column");
  for (const auto& row : grid_) {
    if (row.size() != columns_.size())
      throw PreconditionError("every copy must have one domain per column");
    for (const auto& d : row)
      if (d.empty() || d.min() < 1 || d.max() > num_values_)
        throw PreconditionError("multi-instance domain empty or outside [1, num_values]");
  }
}

Instance MultiInstance::column(std::size_t i) const {
  std::vector<std::string> names;
  std::vector<Domain> domains;
  for (std::size_t j = 0; j < copies(); ++j) {
    names.push_back(std::to_string(j + 1) + "." + columns_[i]);
    domains.push_back(grid_[j][i]);
  }
  return Instance(std::move(names), std::move(domains), num_values_, labels_);
}

MultiInstance parse_multi_instance(std::string_view text) {
  std::size_t k = 0;
  std::optional<std::int64_t> cost_max;
  struct Cell {
    std::size_t copy;
    std::string column;
    Domain raw;
    std::size_t line;
  };
  std::vector<Cell> cells;
  std::set<std::pair<std::size_t, std::string>> seen;
  detail::for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& w) {
    if (w[0] == "copies") {
      if (w.size() != 2 || k != 0) throw ParseError(line, "expected one 'copies <k>' line");
      const Label v = detail::parse_label(w[1], line);
      if (v < 2) throw ParseError(line, "copies must be at least 2");
      k = static_cast<std::size_t>(v);
    } else if (w[0] == "cost") {
      if (w.size() != 3 || w[1] != "max") throw ParseError(line, "expected 'cost max <N>'");
      const Label v = detail::parse_label(w[2], line);
      if (v < 0) throw ParseError(line, "cost max must be non-negative");
      cost_max = v;
    } else if (w[0] == "var") {
      if (k == 0) throw ParseError(line, "'copies <k>' must come before the variables");
      if (w.size() < 2) throw ParseError(line, "missing variable name");
      const std::string_view full = w[1];
      const auto dot = full.find('.');
      if (dot == std::string_view::npos || dot + 1 == full.size())
        throw ParseError(line, "variable name must be <copy>.<name>");
      const Label copy = detail::parse_label(full.substr(0, dot), line);
      if (copy < 1 || static_cast<std::size_t>(copy) > k)
        throw ParseError(line, "copy index out of range 1.." + std::to_string(k));
      std::string column(full.substr(dot + 1));
      if (!seen.emplace(static_cast<std::size_t>(copy - 1), column).second)
        throw ParseError(line, "duplicate variable " + std::string(full));
      cells.push_back({static_cast<std::size_t>(copy - 1), std::move(column),
                       detail::parse_domain_words(std::span(w).subspan(2), line, full), line});
    } else {
      throw ParseError(line, "unknown directive '" + std::string(w[0]) + "'");
    }
  });
  if (k == 0) throw ParseError(1, "missing 'copies <k>' line");

  std::vector<std::string> columns;
  std::unordered_map<std::string, std::size_t> column_index;
  for (const auto& c : cells)
    if (c.copy == 0 && column_index.emplace(c.column, columns.size()).second)
      columns.push_back(c.column);
  if (columns.empty()) throw ParseError(1, "copy 1 declares no variables");
  for (const auto& c : cells)
    if (!column_index.contains(c.column))
      throw ParseError(c.line, "column " + c.column + " is missing from copy 1");
  if (cells.size() != k * columns.size()) {
    // Some copy lacks a column; name the first one.
    for (std::size_t j = 0; j < k; ++j)
      for (const auto& col : columns)
        if (!seen.contains({j, col}))
          throw ParseError(1, "copy " + std::to_string(j + 1) + " has no column " + col);
  }

  // Rename all cells over one shared alphabet.
  std::vector<std::string> names;
  std::vector<Domain> raw;
  std::vector<std::pair<std::size_t, std::size_t>> where;
  for (auto& c : cells) {
    names.push_back(std::to_string(c.copy + 1) + "." + c.column);
    raw.push_back(std::move(c.raw));
    where.emplace_back(c.copy, column_index.at(c.column));
  }
  Instance flat = Instance::normalize(std::move(names), std::move(raw));
  std::vector<std::vector<Domain>> grid(k, std::vector<Domain>(columns.size()));
  for (VarIndex x = 0; x < flat.num_variables(); ++x)
    grid[where[x].first][where[x].second] = flat.domain(x);
  const std::int64_t unbounded =
      static_cast<std::int64_t>(columns.size()) * pairs(static_cast<std::int64_t>(k));
  return MultiInstance(std::move(columns), std::move(grid), flat.num_values(), flat.labels(),
                       {0, cost_max.value_or(unbounded)});
}

std::string format_multi_instance(const MultiInstance& multi) {
  std::vector<std::string> names;
  std::vector<Domain> domains;
  for (std::size_t j = 0; j < multi.copies(); ++j)
    for (std::size_t i = 0; i < multi.columns(); ++i) {
      names.push_back(std::to_string(j + 1) + "." + multi.column_name(i));
      domains.push_back(multi.domain(j, i));
    }
  const Instance flat(std::move(names), std::move(domains), multi.num_values(), multi.labels());
  return "copies " + std::to_string(multi.copies()) + "\n" + format_instance(flat) +
         "cost max " + std::to_string(multi.objective().hi) + "\n";
}

namespace {

CnSimOutcome fail(CnSimOutcome out) {
  out.status = Status::Failed;
  out.pruned.clear();
  return out;
}

CnSimOutcome run_phases(const MultiInstance& multi, std::vector<CostBounds> bounds,
                        const DpOptions& options) {
  const std::size_t n = multi.columns();
  const std::int64_t full = pairs(static_cast<std::int64_t>(multi.copies()));
  CnSimOutcome out;
  out.objective = multi.objective();
  out.column_bounds = std::move(bounds);
  if (out.objective.empty()) return fail(std::move(out));

  std::vector<Instance> columns;
  for (std::size_t i = 0; i < n; ++i) {
    columns.push_back(multi.column(i));
    columns.back().require_contiguous("propagate_cn_sim");
  }

  // Phase 1: the fewest unequal pairs a column can reach.
  for (std::size_t i = 0; i < n; ++i) {
    auto& b = out.column_bounds[i];
    b.lo = std::max(b.lo, full - max_equalities_dp(columns[i], options).equalities);
    if (b.empty()) return fail(std::move(out));
  }

  // Phase 2: bounds on N >= sum N_i.
  std::int64_t sum_lo = 0;
  for (const auto& b : out.column_bounds) sum_lo += b.lo;
  out.objective.lo = std::max(out.objective.lo, sum_lo);
  if (out.objective.empty()) return fail(std::move(out));
  for (auto& b : out.column_bounds) {
    b.hi = std::min(b.hi, out.objective.hi - (sum_lo - b.lo));
    if (b.empty()) return fail(std::move(out));
  }

  // Phase 3: filter each column against its cap.
  for (std::size_t i = 0; i < n; ++i) {
    PropagationOutcome col = rc_filter_graph_min(columns[i], out.column_bounds[i], options);
    if (col.failed()) return fail(std::move(out));
    for (auto& [x, d] : col.pruned) out.pruned.emplace(std::make_pair(x, i), std::move(d));
  }
  return out;
}

}  // namespace

CnSimOutcome propagate_cn_sim(const MultiInstance& multi, const DpOptions& options) {
  return propagate_cn_sim(multi, std::vector<CostBounds>(multi.columns(), multi.column_range()),
                          options);
}

CnSimOutcome propagate_cn_sim(const MultiInstance& multi, std::vector<CostBounds> column_bounds,
                              const DpOptions& options) {
  if (column_bounds.size() != multi.columns())
    throw PreconditionError("propagate_cn_sim: one bound pair per column expected");
  assert(check_berge_acyclic(cn_sim_hypergraph(multi)));
  CnSimOutcome out = run_phases(multi, std::move(column_bounds), options);
#ifndef NDEBUG
  // The second pass needs contiguous domains; holes left by the filter skip it.
  const bool contiguous = std::all_of(out.pruned.begin(), out.pruned.end(),
                                      [](const auto& p) { return p.second.contiguous(); });
  if (!out.failed() && contiguous) {
    std::vector<std::vector<Domain>> grid(multi.copies());
    for (std::size_t j = 0; j < multi.copies(); ++j)
      for (std::size_t i = 0; i < multi.columns(); ++i) {
        auto it = out.pruned.find({j, i});
        grid[j].push_back(it == out.pruned.end() ? multi.domain(j, i) : it->second);
      }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < multi.columns(); ++i) names.push_back(multi.column_name(i));
    MultiInstance reduced(std::move(names), std::move(grid), multi.num_values(), multi.labels(),
                          out.objective);
    CnSimOutcome again = run_phases(reduced, out.column_bounds, options);
    if (again.failed() || !again.pruned.empty() || again.objective != out.objective ||
        again.column_bounds != out.column_bounds)
      throw InternalError("propagate_cn_sim: second pass changed the network");
  }
#endif
  return out;
}

bool check_berge_acyclic(const ConstraintHypergraph& graph) {
  // Incidence graph: variables 0..V-1, constraints V..V+C-1. A forest has no
  // edge joining two nodes already connected.
  const std::size_t total = graph.num_variables + graph.scopes.size();
  std::vector<std::size_t> parent(total);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t c = 0; c < graph.scopes.size(); ++c) {
    const std::size_t node = graph.num_variables + c;
    std::set<std::size_t> distinct(graph.scopes[c].begin(), graph.scopes[c].end());
    if (distinct.size() != graph.scopes[c].size()) return false;
    for (std::size_t v : distinct) {
      const std::size_t a = find(v), b = find(node);
      if (a == b) return false;
      parent[a] = b;
    }
  }
  return true;
}

ConstraintHypergraph cn_sim_hypergraph(const MultiInstance& multi) {
  const std::size_t k = multi.copies(), n = multi.columns();
  ConstraintHypergraph g;
  g.num_variables = k * n + n + 1;
  std::vector<std::size_t> sum_scope;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> scope;
    for (std::size_t j = 0; j < k; ++j) scope.push_back(j * n + i);
    scope.push_back(k * n + i);
    g.scopes.push_back(std::move(scope));
    sum_scope.push_back(k * n + i);
  }
  sum_scope.push_back(k * n + n);
  g.scopes.push_back(std::move(sum_scope));
  return g;
}

}  // namespace softeq
