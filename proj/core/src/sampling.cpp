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

#include "awe/sampling.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "awe/errors.hpp"

namespace awe {

std::vector<std::size_t> sample_indices(std::size_t population, const SampleSpec& spec) {
  if (spec.n > population) {
    throw SampleTooLarge("cannot sample " + std::to_string(spec.n) + " of " +
                         std::to_string(population));
  }
  std::vector<std::size_t> order(population);
  std::iota(order.begin(), order.end(), std::size_t{0});
  SplitMix64 rng(spec.seed);
  // Only the first n positions are needed, so the shuffle stops there.
  for (std::size_t i = 0; i < spec.n; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(population - i));
    std::swap(order[i], order[j]);
  }
  order.resize(spec.n);
  std::sort(order.begin(), order.end());
  return order;
}

std::vector<Question> sample_subset(std::span<const Question> questions, const SampleSpec& spec) {
  std::vector<Question> out;
  out.reserve(spec.n);
  for (const auto i : sample_indices(questions.size(), spec)) out.push_back(questions[i]);
  return out;
}

}  // namespace awe
