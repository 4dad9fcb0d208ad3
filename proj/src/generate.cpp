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

#include "softeq/generate.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "softeq/error.hpp"
#include "softeq/exact_solvers.hpp"
#include "softeq/occurrence.hpp"

namespace softeq {

namespace {

constexpr std::pair<GenKind, std::string_view> kind_names[] = {
    {GenKind::Set, "set"},           {GenKind::Interval, "interval"},
    {GenKind::TwoOcc, "two-occ"},    {GenKind::OneHeavy, "one-heavy"},
    {GenKind::ThreeDM, "3dm"},       {GenKind::Multi, "multi"},
};

std::int64_t size_cap(const GenParams& p) {
  return p.max_size == 0 ? p.lambda : std::min<std::int64_t>(p.lambda, static_cast<std::int64_t>(p.max_size));
}

std::vector<std::string> numbered(std::string_view prefix, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return names;
}

/// s distinct values of [1, lambda], ascending.
std::vector<Value> sample_values(Rng& rng, Value lambda, std::int64_t s) {
  std::vector<Value> out;
  if (2 * s > lambda) {
    std::vector<Value> all(static_cast<std::size_t>(lambda));
    for (Value v = 1; v <= lambda; ++v) all[static_cast<std::size_t>(v - 1)] = v;
    rng.shuffle(all);
    out.assign(all.begin(), all.begin() + s);
  } else {
    std::set<Value> picked;
    while (static_cast<std::int64_t>(picked.size()) < s) picked.insert(rng.uniform(1, lambda));
    out.assign(picked.begin(), picked.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Domain random_interval(Rng& rng, Value lambda, std::int64_t cap) {
  const Value lo = rng.uniform(1, lambda);
  const Value len = rng.uniform(1, std::min<std::int64_t>(cap, lambda - lo + 1));
  return Domain::interval(lo, lo + len - 1);
}

/// c distinct variables among [0, n).
std::vector<std::size_t> pick_vars(Rng& rng, std::size_t n, std::size_t c) {
  std::set<std::size_t> picked;
  while (picked.size() < c)
    picked.insert(static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1)));
  return {picked.begin(), picked.end()};
}

/// Spreads `values` over the variables, each value into one or two domains,
/// skipping variables already at the size cap.
void add_light_values(Rng& rng, std::vector<std::vector<Value>>& raw,
                      const std::vector<Value>& values, std::int64_t cap) {
  const std::size_t n = raw.size();
  for (Value v : values) {
    const auto c = static_cast<std::size_t>(rng.uniform(1, n >= 2 ? 2 : 1));
    for (std::size_t x : pick_vars(rng, n, c))
      if (static_cast<std::int64_t>(raw[x].size()) < cap) raw[x].push_back(v);
  }
}

/// Gives every empty domain a value of its own above `next`.
void fill_empty(std::vector<std::vector<Value>>& raw, Value next) {
  for (auto& d : raw)
    if (d.empty()) d.push_back(++next);
}

Instance from_raw(std::size_t n, std::vector<std::vector<Value>> raw) {
  std::vector<Domain> domains;
  for (auto& d : raw) domains.push_back(Domain::of_values(std::move(d)));
  return Instance::normalize(numbered("X", n), std::move(domains));
}

}  // namespace

std::optional<GenKind> parse_gen_kind(std::string_view name) {
  for (const auto& [kind, text] : kind_names)
    if (text == name) return kind;
  return std::nullopt;
}

std::string_view gen_kind_name(GenKind kind) {
  for (const auto& [k, text] : kind_names)
    if (k == kind) return text;
  return "?";
}

void check_params(GenKind kind, const GenParams& p) {
  if (p.n < 1) throw PreconditionError("generate: n must be at least 1");
  if (p.lambda < 1) throw PreconditionError("generate: lambda must be at least 1");
  if (kind == GenKind::Multi && p.copies < 2)
    throw PreconditionError("generate: copies must be at least 2");
  if (kind == GenKind::Multi && p.cost_max && *p.cost_max < 0)
    throw PreconditionError("generate: cost max must be non-negative");
  if (kind == GenKind::ThreeDM) {
    if (p.n > 100) throw PreconditionError("generate: 3dm sets hold at most 100 elements");
    if (p.n * p.n * p.n < p.triples)
      throw PreconditionError("generate: more triples than n^3 distinct ones");
  }
}

Instance generate_instance(GenKind kind, const GenParams& p, Rng& rng) {
  check_params(kind, p);
  const std::size_t n = p.n;
  const std::int64_t cap = size_cap(p);
  std::vector<std::vector<Value>> raw(n);
  switch (kind) {
    case GenKind::Set:
      for (auto& d : raw) d = sample_values(rng, p.lambda, rng.uniform(1, cap));
      return from_raw(n, std::move(raw));
    case GenKind::Interval: {
      std::vector<Domain> domains;
      for (std::size_t x = 0; x < n; ++x) domains.push_back(random_interval(rng, p.lambda, cap));
      return Instance::normalize(numbered("X", n), std::move(domains));
    }
    case GenKind::TwoOcc: {
      std::vector<Value> values(static_cast<std::size_t>(p.lambda));
      for (Value v = 1; v <= p.lambda; ++v) values[static_cast<std::size_t>(v - 1)] = v;
      add_light_values(rng, raw, values, std::max<std::int64_t>(cap, 1));
      fill_empty(raw, p.lambda);
      Instance inst = from_raw(n, std::move(raw));
      if (count_occurrences(inst).max_count() > 2)
        throw InternalError("generate: two-occ instance has a value in three domains");
      return inst;
    }
    case GenKind::OneHeavy: {
      // Disjoint groups of three to five variables, one heavy value each.
      std::vector<std::size_t> order(n);
      for (std::size_t x = 0; x < n; ++x) order[x] = x;
      rng.shuffle(order);
      std::vector<std::vector<std::size_t>> groups;
      std::size_t pos = 0;
      while (n - pos >= 3 && rng.uniform(0, 2) != 0) {
        const auto size = static_cast<std::size_t>(
            rng.uniform(3, static_cast<std::int64_t>(std::min<std::size_t>(5, n - pos))));
        groups.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(pos),
                            order.begin() + static_cast<std::ptrdiff_t>(pos + size));
        pos += size;
      }
      const Value total = std::max<Value>(p.lambda, static_cast<Value>(groups.size()) + 1);
      std::vector<Value> labels(static_cast<std::size_t>(total));
      for (Value v = 1; v <= total; ++v) labels[static_cast<std::size_t>(v - 1)] = v;
      rng.shuffle(labels);
      for (std::size_t g = 0; g < groups.size(); ++g)
        for (std::size_t x : groups[g]) raw[x].push_back(labels[g]);
      add_light_values(rng, raw, {labels.begin() + static_cast<std::ptrdiff_t>(groups.size()), labels.end()},
                       std::max<std::int64_t>(cap, 1));
      fill_empty(raw, total);
      Instance inst = from_raw(n, std::move(raw));
      const auto classes = classify_values(inst);
      if (!classes.conflicting.empty())
        throw InternalError("generate: one-heavy instance has two heavy values in a domain");
      return inst;
    }
    case GenKind::ThreeDM:
    case GenKind::Multi:
      break;
  }
  throw PreconditionError("generate: kind " + std::string(gen_kind_name(kind)) +
                          " does not produce a plain instance");
}

ThreeDMInstance generate_3dm(const GenParams& p, Rng& rng) {
  check_params(GenKind::ThreeDM, p);
  ThreeDMInstance tdm;
  tdm.xs = numbered("x", p.n);
  tdm.ys = numbered("y", p.n);
  tdm.zs = numbered("z", p.n);
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  const auto top = static_cast<std::int64_t>(p.n) - 1;
  while (tdm.triples.size() < p.triples) {
    const auto x = static_cast<std::size_t>(rng.uniform(0, top));
    const auto y = static_cast<std::size_t>(rng.uniform(0, top));
    const auto z = static_cast<std::size_t>(rng.uniform(0, top));
    if (seen.emplace(x, y, z).second) tdm.triples.push_back({x, y, z});
  }
  return tdm;
}

MultiInstance generate_multi(const GenParams& p, Rng& rng) {
  check_params(GenKind::Multi, p);
  const std::int64_t cap = size_cap(p);
  std::ostringstream text;
  text << "copies " << p.copies << '\n';
  for (std::size_t j = 1; j <= p.copies; ++j)
    for (std::size_t i = 1; i <= p.n; ++i) {
      const Domain d = random_interval(rng, p.lambda, cap);
      text << "var " << j << ".x" << i << " interval " << d.min() << ' ' << d.max() << '\n';
    }
  const std::int64_t top =
      static_cast<std::int64_t>(p.n) * pairs(static_cast<std::int64_t>(p.copies));
  text << "cost max " << (p.cost_max ? *p.cost_max : rng.uniform(0, top)) << '\n';
  return parse_multi_instance(text.str());
}

std::string generate_text(GenKind kind, const GenParams& params, std::uint64_t seed) {
  Rng rng(seed);
  switch (kind) {
    case GenKind::ThreeDM:
      return format_3dm(generate_3dm(params, rng));
    case GenKind::Multi:
      return format_multi_instance(generate_multi(params, rng));
    default:
      return format_instance(generate_instance(kind, params, rng));
  }
}

}  // namespace softeq
