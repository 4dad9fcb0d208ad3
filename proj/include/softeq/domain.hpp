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

#ifndef SOFTEQ_DOMAIN_HPP
#define SOFTEQ_DOMAIN_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace softeq {

// Values are integers. After normalization they live in [1, lambda].
using Value = std::int64_t;

struct Interval {
  Value lo = 0;
  Value hi = -1;

  Value width() const { return hi < lo ? 0 : hi - lo + 1; }
  bool contains(Value v) const { return lo <= v && v <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A finite set of integers stored as sorted, disjoint, non-adjacent
/// intervals. Explicit value sets and interval domains share this form.
class Domain {
 public:
  Domain() = default;

  static Domain interval(Value lo, Value hi);
  static Domain singleton(Value v) { return interval(v, v); }
  /// Any order, duplicates allowed.
  static Domain of_values(std::vector<Value> values);
  static Domain of_values(std::initializer_list<Value> values) {
    return of_values(std::vector<Value>(values));
  }
  /// Normalizes overlapping or adjacent pieces.
  static Domain of_intervals(std::vector<Interval> pieces);

  bool empty() const { return intervals_.empty(); }
  /// Number of values (|D(X)|).
  std::int64_t size() const;
  Value min() const { return intervals_.front().lo; }
  Value max() const { return intervals_.back().hi; }
  bool contiguous() const { return intervals_.size() == 1; }
  Interval hull() const { return {min(), max()}; }
  std::span<const Interval> intervals() const { return intervals_; }

  bool contains(Value v) const;
  bool contains(const Domain& other) const;
  bool intersects(const Domain& other) const;
  Domain intersect(const Domain& other) const;
  std::vector<Value> values() const;

  template <class F>
  void for_each_value(F&& f) const {
    for (const auto& piece : intervals_)
      for (Value v = piece.lo; v <= piece.hi; ++v) f(v);
  }

  /// "1..3,5" style text over the raw values.
  std::string to_string() const;

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  explicit Domain(std::vector<Interval> canonical) : intervals_(std::move(canonical)) {}
  std::vector<Interval> intervals_;
};

}  // namespace softeq

#endif  // SOFTEQ_DOMAIN_HPP
