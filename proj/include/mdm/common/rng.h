// Copyright 2026 The MDM Link Prediction Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace mdm {

// xoshiro256** seeded through splitmix64. All sampling in the toolkit goes
// through this type; the standard distributions are avoided because their
// output is implementation-defined and fixtures must match across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();

  // Uniform in [0, 1) with 53 bits of precision.
  double uniform();

  // Uniform in [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound);

  // Uniform in [lo, hi], inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi);

  bool bernoulli(double p) { return uniform() < p; }

  // Index drawn proportionally to non-negative weights (at least one > 0).
  std::size_t weighted(std::span<const double> weights);

  // Fisher-Yates.
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

  // Independent stream derived from this generator's seed and a label.
  Rng fork(std::uint64_t stream) const;

 private:
  std::uint64_t seed_;
  std::uint64_t s_[4];
};

std::uint64_t splitmix64(std::uint64_t& state);

// 64-bit FNV-1a, used for content hashes and feature hashing.
std::uint64_t fnv1a64(std::span<const unsigned char> bytes,
                      std::uint64_t h = 14695981039346656037ULL);
std::uint64_t fnv1a64(const std::string_view text,
                      std::uint64_t h = 14695981039346656037ULL);

}  // namespace mdm
