// Copyright 2026 The AWE Authors.
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

#include <cstdint>
#include <span>
#include <vector>

#include "awe/types.hpp"

namespace awe {

// SplitMix64 (Steele, Lea & Flood 2014), in its counter form: the i-th
// output (i starting at 1) is mix(seed + i * 0x9e3779b97f4a7c15). Chosen
// because the whole generator fits in six lines and can be reimplemented
// anywhere to reproduce a subset bit-for-bit.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform integer in [0, bound) by rejection of the biased low range.
  // bound must be non-zero.
  constexpr std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

struct SampleSpec {
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

// Indices of a uniform sample without replacement, ascending. Algorithm:
// Fisher-Yates over [0, population) driven by SplitMix64(seed), swapping
// position i with below(population - i) + i for i = 0, 1, ..., keep the
// first n positions, then sort. Throws SampleTooLarge if n > population.
std::vector<std::size_t> sample_indices(std::size_t population, const SampleSpec& spec);

// The sampled questions in their original relative order.
std::vector<Question> sample_subset(std::span<const Question> questions, const SampleSpec& spec);

}  // namespace awe
