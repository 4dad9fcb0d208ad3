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

#include "softeq/domain.hpp"

#include <algorithm>

namespace softeq {

Domain Domain::interval(Value lo, Value hi) {
  if (hi < lo) return Domain{};
  return Domain(std::vector<Interval>{{lo, hi}});
}

Domain Domain::of_values(std::vector<Value> values) {
  std::sort(values.begin(), values.end());
  std::vector<Interval> pieces;
  for (Value v : values) {
    if (!pieces.empty() && v <= pieces.back().hi + 1) {
      pieces.back().hi = std::max(pieces.back().hi, v);
    } else {
      pieces.push_back({v, v});
    }
  }
  return Domain(std::move(pieces));
}

Domain Domain::of_intervals(std::vector<Interval> pieces) {
  std::erase_if(pieces, [](const Interval& i) { return i.hi < i.lo; });
  std::sort(pieces.begin(), pieces.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> out;
  for (const auto& p : pieces) {
    if (!out.empty() && p.lo <= out.back().hi + 1) {
      out.back().hi = std::max(out.back().hi, p.hi);
    } else {
      out.push_back(p);
    }
  }
  return Domain(std::move(out));
}

std::int64_t Domain::size() const {
  std::int64_t total = 0;
  for (const auto& p : intervals_) total += p.width();
  return total;
}

bool Domain::contains(Value v) const {
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), v,
                             [](Value x, const Interval& i) { return x < i.lo; });
  if (it == intervals_.begin()) return false;
  return std::prev(it)->hi >= v;
}

bool Domain::contains(const Domain& other) const {
  for (const auto& p : other.intervals_) {
    auto it = std::upper_bound(intervals_.begin(), intervals_.end(), p.lo,
                               [](Value x, const Interval& i) { return x < i.lo; });
    if (it == intervals_.begin()) return false;
    if (std::prev(it)->hi < p.hi) return false;
  }
  return true;
}

bool Domain::intersects(const Domain& other) const {
  auto a = intervals_.begin();
  auto b = other.intervals_.begin();
  while (a != intervals_.end() && b != other.intervals_.end()) {
    if (a->hi < b->lo) {
      ++a;
    } else if (b->hi < a->lo) {
      ++b;
    } else {
      return true;
    }
  }
  return false;
}

Domain Domain::intersect(const Domain& other) const {
  std::vector<Interval> out;
  auto a = intervals_.begin();
  auto b = other.intervals_.begin();
  while (a != intervals_.end() && b != other.intervals_.end()) {
    Value lo = std::max(a->lo, b->lo);
    Value hi = std::min(a->hi, b->hi);
    if (lo <= hi) out.push_back({lo, hi});
    if (a->hi < b->hi) {
      ++a;
    } else {
      ++b;
    }
  }
  return Domain(std::move(out));
}

std::vector<Value> Domain::values() const {
  std::vector<Value> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each_value([&](Value v) { out.push_back(v); });
  return out;
}

std::string Domain::to_string() const {
  std::string out;
  for (const auto& p : intervals_) {
    if (!out.empty()) out += ',';
    out += std::to_string(p.lo);
    if (p.hi != p.lo) out += ".." + std::to_string(p.hi);
  }
  return out;
}

}  // namespace softeq
