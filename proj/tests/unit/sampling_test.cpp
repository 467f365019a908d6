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

#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "awe/errors.hpp"
#include "awe/sampling.hpp"

namespace awe {
namespace {

TEST(SplitMix64, MatchesReferenceSequence) {
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(rng.next(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(rng.next(), 0x06c45d188009454fULL);
}

TEST(SplitMix64, BelowStaysInRange) {
  SplitMix64 rng(5);
  for (std::uint64_t bound : {1ULL, 2ULL, 3ULL, 7ULL, 1000ULL, (1ULL << 63) + 1}) {
    for (int i = 0; i < 200; ++i) EXPECT_LT(rng.below(bound), bound);
  }
}

// Values computed with an independent Python implementation of the same
// shuffle.
TEST(SampleIndices, GoldenDraws) {
  EXPECT_EQ(sample_indices(10, {3, 0}), (std::vector<std::size_t>{1, 5, 9}));
  EXPECT_EQ(sample_indices(10, {3, 42}), (std::vector<std::size_t>{2, 3, 4}));
  const auto big = sample_indices(2942, {1739, 20250701});
  ASSERT_EQ(big.size(), 1739u);
  EXPECT_EQ(std::vector<std::size_t>(big.begin(), big.begin() + 10),
            (std::vector<std::size_t>{0, 1, 2, 5, 6, 7, 12, 13, 14, 15}));
  EXPECT_EQ(std::accumulate(big.begin(), big.end(), std::size_t{0}), 2551801u);
}

TEST(SampleIndices, FullPopulationIsIdentity) {
  std::vector<std::size_t> all(10);
  std::iota(all.begin(), all.end(), 0);
  EXPECT_EQ(sample_indices(10, {10, 7}), all);
  EXPECT_TRUE(sample_indices(0, {0, 1}).empty());
  EXPECT_TRUE(sample_indices(5, {0, 1}).empty());
}

TEST(SampleIndices, TooLargeThrows) {
  EXPECT_THROW(sample_indices(10, {11, 0}), SampleTooLarge);
  EXPECT_THROW(sample_indices(0, {1, 0}), SampleTooLarge);
}

TEST(SampleIndices, OrderedDistinctSubsequence) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t pop = 1 + seed % 37;
    const std::size_t n = seed % (pop + 1);
    const auto s = sample_indices(pop, {n, seed});
    ASSERT_EQ(s.size(), n);
    EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
    EXPECT_EQ(std::set<std::size_t>(s.begin(), s.end()).size(), n);
    for (auto i : s) EXPECT_LT(i, pop);
    EXPECT_EQ(sample_indices(pop, {n, seed}), s);
  }
}

TEST(SampleIndices, SeedsDiffer) {
  EXPECT_NE(sample_indices(1000, {10, 1}), sample_indices(1000, {10, 2}));
}

TEST(SampleSubset, PreservesOriginalOrder) {
  std::vector<Question> qs;
  for (int i = 0; i < 10; ++i) qs.push_back({"q" + std::to_string(i), "text", {}});
  const auto s = sample_subset(qs, {3, 0});
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0].id, "q1");
  EXPECT_EQ(s[1].id, "q5");
  EXPECT_EQ(s[2].id, "q9");
}

}  // namespace
}  // namespace awe
