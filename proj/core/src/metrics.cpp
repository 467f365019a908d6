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

#include "awe/metrics.hpp"

#include <algorithm>

#include "awe/errors.hpp"

namespace awe {
namespace {

std::string join(std::span<const std::string> names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

struct Common {
  std::vector<std::size_t> sources;
  std::vector<std::size_t> questions;
};

Common common_questions(const BadgeTable& table, std::span<const std::string> names) {
  if (names.empty()) throw std::invalid_argument("metric needs at least one source");
  Common c;
  for (const auto& name : names) c.sources.push_back(table.source_index(name));
  c.questions = table.intersection(c.sources);
  if (c.questions.empty()) {
    throw EmptyIntersection("no question is badged by every source in {" + join(names) + "}");
  }
  return c;
}

bool is_green(const BadgeTable& table, std::size_t q, std::size_t s) {
  return table.at(q, s) == Badge::Green;
}

}  // namespace

BadgeTable::BadgeTable(std::vector<std::string> sources) {
  for (const auto& s : sources) add_source(s);
}

std::size_t BadgeTable::add_source(const std::string& source_id) {
  const auto [it, inserted] = source_index_.emplace(source_id, sources_.size());
  if (inserted) {
    sources_.push_back(source_id);
    for (auto& row : cells_) row.emplace_back();
  }
  return it->second;
}

std::size_t BadgeTable::add_question(const std::string& question_id) {
  const auto [it, inserted] = question_index_.emplace(question_id, questions_.size());
  if (inserted) {
    questions_.push_back(question_id);
    cells_.emplace_back(sources_.size());
  }
  return it->second;
}

void BadgeTable::set(const std::string& question_id, const std::string& source_id, Badge badge) {
  const std::size_t s = add_source(source_id);
  const std::size_t q = add_question(question_id);
  auto& cell = cells_[q][s];
  if (cell) {
    throw DuplicateRecord("duplicate badge for (" + question_id + ", " + source_id + ")");
  }
  cell = badge;
  ++cell_count_;
}

std::optional<Badge> BadgeTable::get(const std::string& question_id,
                                     const std::string& source_id) const {
  const auto q = question_index_.find(question_id);
  const auto s = source_index_.find(source_id);
  if (q == question_index_.end() || s == source_index_.end()) return std::nullopt;
  return cells_[q->second][s->second];
}

std::size_t BadgeTable::source_index(const std::string& source_id) const {
  const auto it = source_index_.find(source_id);
  if (it == source_index_.end()) throw UnknownSource("unknown source '" + source_id + "'");
  return it->second;
}

bool BadgeTable::has_source(const std::string& source_id) const noexcept {
  return source_index_.contains(source_id);
}

std::vector<std::size_t> BadgeTable::intersection(std::span<const std::size_t> sources) const {
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < questions_.size(); ++q) {
    const auto& row = cells_[q];
    if (std::all_of(sources.begin(), sources.end(),
                    [&](std::size_t s) { return row[s].has_value(); })) {
      out.push_back(q);
    }
  }
  return out;
}

bool operator==(const BadgeTable& a, const BadgeTable& b) {
  return a.sources_ == b.sources_ && a.questions_ == b.questions_ && a.cells_ == b.cells_;
}

std::uint64_t JointDistribution::count(const std::vector<Badge>& tuple) const {
  const auto it = counts.find(tuple);
  return it == counts.end() ? 0 : it->second;
}

std::vector<std::pair<std::vector<Badge>, std::uint64_t>> JointDistribution::rows_by_name() const {
  std::vector<std::pair<std::vector<Badge>, std::uint64_t>> rows(counts.begin(), counts.end());
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
    return std::lexicographical_compare(
        x.first.begin(), x.first.end(), y.first.begin(), y.first.end(),
        [](Badge l, Badge r) { return to_string(l) < to_string(r); });
  });
  return rows;
}

SummaryReport summarize(const BadgeTable& table, const std::string& source) {
  const std::size_t s = table.source_index(source);
  SummaryReport report;
  report.source_id = source;
  for (std::size_t q = 0; q < table.questions().size(); ++q) {
    if (const auto badge = table.at(q, s)) {
      ++report.counts[badge_index(*badge)];
      ++report.total;
    }
  }
  if (report.total == 0) throw EmptyIntersection("source '" + source + "' has no badges");
  return report;
}

Proportion green_rate(const BadgeTable& table, const std::string& source) {
  return summarize(table, source).share(Badge::Green);
}

PairAgreement pair_agreement(const BadgeTable& table, const std::string& a, const std::string& b) {
  const std::string names[] = {a, b};
  const Common c = common_questions(table, names);
  PairAgreement p;
  p.source_a = a;
  p.source_b = b;
  for (const auto q : c.questions) {
    const std::size_t i = badge_index(*table.at(q, c.sources[0]));
    const std::size_t j = badge_index(*table.at(q, c.sources[1]));
    ++p.matrix[i][j];
    ++p.row_totals[i];
    ++p.col_totals[j];
  }
  p.n = c.questions.size();
  const std::size_t g = badge_index(Badge::Green);
  const std::size_t y = badge_index(Badge::Yellow);
  const std::size_t r = badge_index(Badge::Red);
  p.green_concordance = {p.matrix[g][g], p.n};
  p.yr_group_concordance = {p.matrix[y][y] + p.matrix[y][r] + p.matrix[r][y] + p.matrix[r][r], p.n};
  p.overall_binarized_agreement = {p.green_concordance.count + p.yr_group_concordance.count, p.n};
  return p;
}

JointDistribution joint_distribution(const BadgeTable& table, std::span<const std::string> sources) {
  const Common c = common_questions(table, sources);
  JointDistribution joint;
  joint.sources.assign(sources.begin(), sources.end());
  std::vector<Badge> tuple(sources.size());
  for (const auto q : c.questions) {
    for (std::size_t k = 0; k < c.sources.size(); ++k) tuple[k] = *table.at(q, c.sources[k]);
    ++joint.counts[tuple];
  }
  joint.n = c.questions.size();
  return joint;
}

Proportion novelty(const BadgeTable& table, const std::string& source,
                   std::span<const std::string> others) {
  std::vector<std::string> names{source};
  for (const auto& o : others) {
    if (o != source && std::find(names.begin(), names.end(), o) == names.end()) names.push_back(o);
  }
  const Common c = common_questions(table, names);
  Proportion p{0, c.questions.size()};
  for (const auto q : c.questions) {
    if (!is_green(table, q, c.sources[0])) continue;
    const bool only = std::none_of(c.sources.begin() + 1, c.sources.end(),
                                   [&](std::size_t s) { return is_green(table, q, s); });
    if (only) ++p.count;
  }
  return p;
}

Proportion union_coverage(const BadgeTable& table, std::span<const std::string> sources) {
  const Common c = common_questions(table, sources);
  Proportion p{0, c.questions.size()};
  for (const auto q : c.questions) {
    if (std::any_of(c.sources.begin(), c.sources.end(),
                    [&](std::size_t s) { return is_green(table, q, s); })) {
      ++p.count;
    }
  }
  return p;
}

Proportion incremental_gain(const BadgeTable& table, const std::string& base,
                            const std::string& added) {
  const std::string names[] = {base, added};
  const Common c = common_questions(table, names);
  Proportion p{0, c.questions.size()};
  for (const auto q : c.questions) {
    if (is_green(table, q, c.sources[1]) && !is_green(table, q, c.sources[0])) ++p.count;
  }
  return p;
}

std::array<std::array<std::uint64_t, 3>, 3> project_pair(const JointDistribution& joint,
                                                         std::size_t a, std::size_t b) {
  if (a >= joint.sources.size() || b >= joint.sources.size()) {
    throw std::out_of_range("project_pair: source position out of range");
  }
  std::array<std::array<std::uint64_t, 3>, 3> m{};
  for (const auto& [tuple, count] : joint.counts) {
    m[badge_index(tuple[a])][badge_index(tuple[b])] += count;
  }
  return m;
}

}  // namespace awe
