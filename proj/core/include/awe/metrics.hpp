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

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "awe/types.hpp"

namespace awe {

// count out of n. Kept as integers; value() is the full-precision fraction.
struct Proportion {
  std::uint64_t count = 0;
  std::uint64_t n = 0;

  double value() const noexcept { return n == 0 ? 0.0 : static_cast<double>(count) / n; }
  double percent() const noexcept { return 100.0 * value(); }

  friend bool operator==(const Proportion&, const Proportion&) = default;
};

// (question, source) -> Badge, with a fixed question universe and source
// order. At most one badge per cell.
class BadgeTable {
 public:
  BadgeTable() = default;
  explicit BadgeTable(std::vector<std::string> sources);

  // Registers a source if new; returns its index.
  std::size_t add_source(const std::string& source_id);
  // Registers a question if new; returns its index.
  std::size_t add_question(const std::string& question_id);

  // Throws DuplicateRecord if the cell is already set.
  void set(const std::string& question_id, const std::string& source_id, Badge badge);

  std::optional<Badge> get(const std::string& question_id, const std::string& source_id) const;
  std::optional<Badge> at(std::size_t question, std::size_t source) const {
    return cells_[question][source];
  }

  const std::vector<std::string>& sources() const noexcept { return sources_; }
  const std::vector<std::string>& questions() const noexcept { return questions_; }
  std::size_t cell_count() const noexcept { return cell_count_; }

  // Throws UnknownSource.
  std::size_t source_index(const std::string& source_id) const;
  bool has_source(const std::string& source_id) const noexcept;

  // Question indices badged by every listed source, in universe order.
  std::vector<std::size_t> intersection(std::span<const std::size_t> sources) const;

  friend bool operator==(const BadgeTable& a, const BadgeTable& b);

 private:
  std::vector<std::string> sources_;
  std::unordered_map<std::string, std::size_t> source_index_;
  std::vector<std::string> questions_;
  std::unordered_map<std::string, std::size_t> question_index_;
  std::vector<std::vector<std::optional<Badge>>> cells_;  // [question][source]
  std::size_t cell_count_ = 0;
};

struct SummaryReport {
  std::string source_id;
  std::array<std::uint64_t, 3> counts{};  // indexed by badge_index
  std::uint64_t total = 0;

  Proportion share(Badge b) const noexcept { return {counts[badge_index(b)], total}; }
};

struct PairAgreement {
  std::string source_a;
  std::string source_b;
  std::array<std::array<std::uint64_t, 3>, 3> matrix{};  // [badge a][badge b]
  std::array<std::uint64_t, 3> row_totals{};
  std::array<std::uint64_t, 3> col_totals{};
  std::uint64_t n = 0;
  Proportion green_concordance;      // both Green
  Proportion yr_group_concordance;   // both in {Yellow, Red}
  Proportion overall_binarized_agreement;  // sum of the two above

  Proportion cell(Badge a, Badge b) const noexcept {
    return {matrix[badge_index(a)][badge_index(b)], n};
  }
};

// Badge-tuple counts over the sources' common questions. Zero-count tuples
// are not stored.
struct JointDistribution {
  std::vector<std::string> sources;
  std::map<std::vector<Badge>, std::uint64_t> counts;
  std::uint64_t n = 0;

  std::uint64_t count(const std::vector<Badge>& tuple) const;
  // Rows ordered the way the published joint table lists them: by badge
  // name, lexicographically (Green < Red < Yellow).
  std::vector<std::pair<std::vector<Badge>, std::uint64_t>> rows_by_name() const;
};

// Throws UnknownSource or EmptyIntersection (no badges for the source).
SummaryReport summarize(const BadgeTable& table, const std::string& source);

Proportion green_rate(const BadgeTable& table, const std::string& source);

PairAgreement pair_agreement(const BadgeTable& table, const std::string& a, const std::string& b);

JointDistribution joint_distribution(const BadgeTable& table, std::span<const std::string> sources);

// P(source Green and every other source not Green) over the common questions.
Proportion novelty(const BadgeTable& table, const std::string& source,
                   std::span<const std::string> others);

// P(at least one source Green) over the common questions.
Proportion union_coverage(const BadgeTable& table, std::span<const std::string> sources);

// P(added Green and base not Green) over the pair's common questions, i.e.
// union_coverage({base, added}) - green_rate(base).
Proportion incremental_gain(const BadgeTable& table, const std::string& base,
                            const std::string& added);

// Pairwise matrix of two sources obtained by marginalising a joint
// distribution.
std::array<std::array<std::uint64_t, 3>, 3> project_pair(const JointDistribution& joint,
                                                         std::size_t a, std::size_t b);

}  // namespace awe
