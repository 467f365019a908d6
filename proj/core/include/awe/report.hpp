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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "awe/metrics.hpp"

namespace awe {

struct NoveltyEntry {
  std::string source;
  std::vector<std::string> others;
  Proportion rate;
};

struct CoverageEntry {
  std::vector<std::string> sources;
  Proportion coverage;
};

struct GainEntry {
  std::string base;
  std::string added;
  Proportion gain;
};

// Everything the reports print, computed once from a badge table. Every
// Proportion carries its own denominator.
struct ReportBundle {
  std::vector<std::string> sources;
  std::vector<SummaryReport> summaries;   // sources with at least one badge
  std::vector<PairAgreement> pairs;       // every i < j with common questions
  std::optional<JointDistribution> joint; // all sources, when they overlap
  std::vector<NoveltyEntry> novelty;      // each source against the rest
  std::vector<CoverageEntry> coverage;    // every subset of size >= 2
  std::vector<GainEntry> gains;           // every ordered pair
  std::vector<std::string> warnings;      // metrics skipped for lack of data
};

// sources selects and orders the analysed sources; empty means all.
ReportBundle build_bundle(const BadgeTable& table, const std::vector<std::string>& sources = {});

enum class Format { Csv, Markdown, Json };

// Accepts "csv", "md"/"markdown", "json". Throws std::invalid_argument.
Format parse_format(std::string_view name);

struct Document {
  std::string text;
  std::vector<std::string> warnings;
};

// Per-source Badge/Count/Percentage tables with a Total row.
//   CSV columns: source,badge,count,percentage
Document emit_summary(const ReportBundle& bundle, Format format);

// 3x3 matrices with "count (pct%)" cells and marginals, each followed by a
// concordance footer.
//   CSV columns: source_a,source_b,badge_a,badge_b,count,percentage
Document emit_agreement(const ReportBundle& bundle, Format format);

// Joint tuple table.
//   CSV columns: <source>...,count,percentage   (loadable by load_joint_csv)
Document emit_joint(const ReportBundle& bundle, Format format);

// Green coverage by source combination: single-source green rates, then
// unions and novelty, then incremental gains.
//   CSV columns: metric,sources,count,n,percentage
Document emit_coverage(const ReportBundle& bundle, Format format);

// All sections concatenated (JSON: one object keyed by section).
Document emit_report(const ReportBundle& bundle, Format format);

// Machine-readable bundle with full-precision fractions.
nlohmann::json bundle_to_json(const ReportBundle& bundle);

// Two decimals, rounded half away from zero.
std::string format_percent(double percent);
// 1,473 style grouping for human-facing output.
std::string group_thousands(std::uint64_t value);

// "green 11.10%, yellow/red 45.26%, overall 56.35% (n=1739)"
std::string concordance_footer(const PairAgreement& pair);

}  // namespace awe
