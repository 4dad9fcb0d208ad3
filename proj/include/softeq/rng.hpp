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

#ifndef SOFTEQ_RNG_HPP
#define SOFTEQ_RNG_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace softeq {

/// Portable seeded generator: std::mt19937_64 (MT19937-64, Matsumoto and
/// Nishimura) for the raw 64-bit stream, with bounded integers drawn by
/// rejection so that the same seed gives the same numbers everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [lo, hi]. Draws x until x >= 2^64 mod r, then returns
  /// lo + x mod r, where r = hi - lo + 1.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t r = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (r == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t threshold = (0 - r) % r;
    std::uint64_t x = next();
    while (x < threshold) x = next();
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % r);
  }

  /// Fisher-Yates, last index first.
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(i) - 1))]);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace softeq

#endif  // SOFTEQ_RNG_HPP
