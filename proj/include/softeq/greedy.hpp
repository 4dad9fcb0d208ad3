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

#ifndef SOFTEQ_GREEDY_HPP
#define SOFTEQ_GREEDY_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "softeq/instance.hpp"

namespace softeq {

/// Which value to take when several share the largest occurrence count.
class TieBreak {
 public:
  enum class Kind {
    Smallest,  // smallest value id
    First,     // head of the bucket list, O(1)
    Priority,  // earliest in an explicit list, unlisted values after it by id
  };

  static TieBreak smallest() { return TieBreak(Kind::Smallest, {}); }
  static TieBreak first() { return TieBreak(Kind::First, {}); }
  static TieBreak priority(std::vector<Value> order) {
    return TieBreak(Kind::Priority, std::move(order));
  }

  Kind kind() const { return kind_; }
  std::span<const Value> order() const { return order_; }

 private:
  TieBreak(Kind kind, std::vector<Value> order) : kind_(kind), order_(std::move(order)) {}
  Kind kind_;
  std::vector<Value> order_;
};

/// The data of the greedy sweep: for every value the variables containing it
/// (var), its live occurrence count (occ) and its place in the bucket val(occ).
/// Buckets are intrusive doubly-linked lists, so moving a value between
/// buckets is O(1).
class GreedyState {
 public:
  explicit GreedyState(const Instance& instance);

  std::int64_t occ(Value v) const { return occ_[static_cast<std::size_t>(v)]; }
  std::int64_t bucket_size(std::int64_t count) const {
    return bucket_size_[static_cast<std::size_t>(count)];
  }
  /// Values of bucket `count`, list order.
  std::vector<Value> bucket(std::int64_t count) const;
  Value bucket_head(std::int64_t count) const { return head_[static_cast<std::size_t>(count)]; }
  std::span<const VarIndex> holders(Value v) const;
  bool assigned(VarIndex x) const { return assigned_[x]; }

  void move(Value v, std::int64_t new_count);
  void mark_assigned(VarIndex x) { assigned_[x] = true; }

  /// Recounts occ from the unassigned variables and checks every value sits
  /// in bucket occ(v) exactly once.
  bool consistent(const Instance& instance) const;

 private:
  void link(Value v, std::int64_t count);
  void unlink(Value v);

  std::vector<std::size_t> holder_start_;  // CSR offsets into holders_
  std::vector<VarIndex> holders_;
  std::vector<std::int64_t> occ_;
  std::vector<Value> head_, tail_;  // per bucket, 0 = none
  std::vector<Value> next_, prev_;  // per value
  std::vector<std::int64_t> bucket_size_;
  std::vector<bool> assigned_;
};

struct GreedyStats {
  std::int64_t rounds = 0;
  std::int64_t pairs_processed = 0;  // (X, w) decrements, bounded by m
  std::int64_t operations = 0;       // every elementary step of the sweep
};

struct GreedyResult {
  std::int64_t lower_bound = 0;  // sum of C(k, 2) over chosen values
  std::int64_t objective = 0;    // equal pairs of the returned assignment
  Assignment assignment;
  GreedyStats stats;
};

/// Called after every round with the state.
using GreedyObserver = std::function<void(const GreedyState&)>;

/// Repeatedly assigns every unassigned variable containing a most frequent
/// value to it. The returned lower bound E satisfies optimum/2 <= E <= optimum.
/// Variables left when no value occurs twice take their smallest value.
GreedyResult greedy_max_equalities(const Instance& instance,
                                   const TieBreak& tie_break = TieBreak::smallest(),
                                   const GreedyObserver& observer = {});

/// Number of equal pairs in s.
std::int64_t report_objective(const Assignment& s);

}  // namespace softeq

#endif  // SOFTEQ_GREEDY_HPP
