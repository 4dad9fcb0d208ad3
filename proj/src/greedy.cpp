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

#include "softeq/greedy.hpp"

#include <algorithm>
#include <queue>

#include "softeq/cost.hpp"
#include "softeq/error.hpp"

namespace softeq {

GreedyState::GreedyState(const Instance& instance) {
  const auto lambda = static_cast<std::size_t>(instance.num_values());
  const std::size_t n = instance.num_variables();
  occ_.assign(lambda + 1, 0);
  for (const Domain& d : instance.domains())
    d.for_each_value([&](Value v) { ++occ_[static_cast<std::size_t>(v)]; });

  holder_start_.assign(lambda + 2, 0);
  for (std::size_t v = 1; v <= lambda; ++v)
    holder_start_[v + 1] = holder_start_[v] + static_cast<std::size_t>(occ_[v]);
  holders_.resize(holder_start_[lambda + 1]);
  std::vector<std::size_t> fill(holder_start_.begin(), holder_start_.end() - 1);
  for (VarIndex x = 0; x < n; ++x)
    instance.domain(x).for_each_value(
        [&](Value v) { holders_[fill[static_cast<std::size_t>(v)]++] = x; });

  head_.assign(n + 1, 0);
  tail_.assign(n + 1, 0);
  bucket_size_.assign(n + 1, 0);
  next_.assign(lambda + 1, 0);
  prev_.assign(lambda + 1, 0);
  for (std::size_t v = 1; v <= lambda; ++v) link(static_cast<Value>(v), occ_[v]);
  assigned_.assign(n, false);
}

std::vector<Value> GreedyState::bucket(std::int64_t count) const {
  std::vector<Value> out;
  for (Value v = head_[static_cast<std::size_t>(count)]; v != 0; v = next_[static_cast<std::size_t>(v)])
    out.push_back(v);
  return out;
}

std::span<const VarIndex> GreedyState::holders(Value v) const {
  const auto uv = static_cast<std::size_t>(v);
  return std::span<const VarIndex>(holders_).subspan(holder_start_[uv],
                                                     holder_start_[uv + 1] - holder_start_[uv]);
}

void GreedyState::link(Value v, std::int64_t count) {
  const auto c = static_cast<std::size_t>(count);
  const auto uv = static_cast<std::size_t>(v);
  occ_[uv] = count;
  prev_[uv] = tail_[c];
  next_[uv] = 0;
  if (tail_[c] != 0) {
    next_[static_cast<std::size_t>(tail_[c])] = v;
  } else {
    head_[c] = v;
  }
  tail_[c] = v;
  ++bucket_size_[c];
}

void GreedyState::unlink(Value v) {
  const auto uv = static_cast<std::size_t>(v);
  const auto c = static_cast<std::size_t>(occ_[uv]);
  const Value p = prev_[uv];
  const Value q = next_[uv];
  if (p != 0) {
    next_[static_cast<std::size_t>(p)] = q;
  } else {
    head_[c] = q;
  }
  if (q != 0) {
    prev_[static_cast<std::size_t>(q)] = p;
  } else {
    tail_[c] = p;
  }
  --bucket_size_[c];
}

void GreedyState::move(Value v, std::int64_t new_count) {
  unlink(v);
  link(v, new_count);
}

bool GreedyState::consistent(const Instance& instance) const {
  std::vector<std::int64_t> live(occ_.size(), 0);
  for (VarIndex x = 0; x < instance.num_variables(); ++x)
    if (!assigned_[x])
      instance.domain(x).for_each_value([&](Value v) { ++live[static_cast<std::size_t>(v)]; });
  std::vector<int> seen(occ_.size(), 0);
  for (std::size_t c = 0; c < head_.size(); ++c) {
    std::int64_t size = 0;
    for (Value v = head_[c]; v != 0; v = next_[static_cast<std::size_t>(v)]) {
      if (occ_[static_cast<std::size_t>(v)] != static_cast<std::int64_t>(c)) return false;
      ++seen[static_cast<std::size_t>(v)];
      ++size;
    }
    if (size != bucket_size_[c]) return false;
  }
  for (std::size_t v = 1; v < occ_.size(); ++v)
    if (seen[v] != 1 || occ_[v] != live[v]) return false;
  return true;
}

namespace {

// Picks among the values of the top bucket. Smallest and Priority keep a
// lazy min-heap per bucket: a value is pushed when it enters a bucket and
// stale entries are discarded on pop. occ never increases, so a value enters
// each bucket at most once.
class Picker {
 public:
  Picker(const Instance& instance, const TieBreak& tie, const GreedyState& state,
         GreedyStats& stats)
      : kind_(tie.kind()), state_(state), stats_(stats) {
    if (kind_ == TieBreak::Kind::First) return;
    const auto lambda = static_cast<std::size_t>(instance.num_values());
    rank_.resize(lambda + 1);
    const auto listed = static_cast<Value>(tie.order().size());
    for (std::size_t v = 0; v <= lambda; ++v) rank_[v] = listed + static_cast<Value>(v);
    if (kind_ == TieBreak::Kind::Priority) {
      for (std::size_t i = tie.order().size(); i-- > 0;) {
        const Value v = tie.order()[i];
        if (v >= 1 && v <= static_cast<Value>(lambda)) rank_[static_cast<std::size_t>(v)] = static_cast<Value>(i);
      }
    }
    heaps_.resize(instance.num_variables() + 1);
    for (Value v = 1; v <= static_cast<Value>(lambda); ++v) entered(v);
  }

  void entered(Value v) {
    if (kind_ == TieBreak::Kind::First) return;
    ++stats_.operations;
    heaps_[static_cast<std::size_t>(state_.occ(v))].push({rank_[static_cast<std::size_t>(v)], v});
  }

  Value pick(std::int64_t count) {
    if (kind_ == TieBreak::Kind::First) return state_.bucket_head(count);
    auto& heap = heaps_[static_cast<std::size_t>(count)];
    while (true) {
      ++stats_.operations;
      const Value v = heap.top().second;
      heap.pop();
      if (state_.occ(v) == count) return v;
    }
  }

 private:
  using Entry = std::pair<Value, Value>;  // (rank, value)
  TieBreak::Kind kind_;
  const GreedyState& state_;
  GreedyStats& stats_;
  std::vector<Value> rank_;
  std::vector<std::priority_queue<Entry, std::vector<Entry>, std::greater<>>> heaps_;
};

}  // namespace

GreedyResult greedy_max_equalities(const Instance& instance, const TieBreak& tie_break,
                                   const GreedyObserver& observer) {
  GreedyResult result;
  GreedyStats& stats = result.stats;
  const std::size_t n = instance.num_variables();
  GreedyState state(instance);
  stats.operations += instance.total_domain_size();
  Picker picker(instance, tie_break, state, stats);
  std::vector<Value> values(n, 0);

  auto k = static_cast<std::int64_t>(n);
  while (true) {
    while (k > 0 && state.bucket_size(k) == 0) {
      --k;
      ++stats.operations;
    }
    if (k <= 1) break;
    const Value v = picker.pick(k);
    std::int64_t taken = 0;
    for (VarIndex x : state.holders(v)) {
      ++stats.operations;
      if (state.assigned(x)) continue;  // stale entry, assigned in an earlier round
      instance.domain(x).for_each_value([&](Value w) {
        if (w == v) return;
        ++stats.pairs_processed;
        ++stats.operations;
        state.move(w, state.occ(w) - 1);
        picker.entered(w);
      });
      state.mark_assigned(x);
      values[x] = v;
      ++taken;
    }
    if (taken != k) throw InternalError("greedy: occurrence count out of sync");
    state.move(v, 0);
    result.lower_bound += pairs(k);
    ++stats.rounds;
    if (observer) observer(state);
  }

  for (VarIndex x = 0; x < n; ++x) {
    if (values[x] == 0) {
      values[x] = instance.domain(x).min();
      ++stats.operations;
    }
  }
  result.assignment = Assignment(instance, std::move(values));
  result.objective = report_objective(result.assignment);
  return result;
}

std::int64_t report_objective(const Assignment& s) { return evaluate(s).equalities; }

}  // namespace softeq
