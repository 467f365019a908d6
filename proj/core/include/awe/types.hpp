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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace awe {

// Three-valued "Answered with Evidence" grade. Enumerator order is the
// display order (best first); it carries no other meaning.
enum class Badge { Green = 0, Yellow = 1, Red = 2 };

inline constexpr std::array<Badge, 3> kAllBadges = {Badge::Green, Badge::Yellow,
                                                    Badge::Red};

constexpr std::size_t badge_index(Badge b) noexcept {
  return static_cast<std::size_t>(b);
}

std::string_view to_string(Badge b) noexcept;

// Accepts "Green"/"Yellow"/"Red" in any letter case.
std::optional<Badge> parse_badge(std::string_view text) noexcept;

struct Question {
  std::string id;
  std::string text;
  std::vector<std::string> tags;

  friend bool operator==(const Question&, const Question&) = default;
};

struct ContextRecord {
  std::string doc_id;
  std::string text;

  friend bool operator==(const ContextRecord&, const ContextRecord&) = default;
};

// One evidence source's answer for one question. An empty context list is a
// retrieval miss and is still judged.
struct SourceResponse {
  std::string question_id;
  std::string source_id;
  std::string answer_text;
  std::vector<ContextRecord> context;
  bool source_failed = false;

  friend bool operator==(const SourceResponse&, const SourceResponse&) = default;
};

struct CriteriaVerdict {
  bool context_answers_question_directly = false;
  bool context_addresses_question = false;
  bool answer_grounded_in_context = false;
  std::string assessment;

  friend bool operator==(const CriteriaVerdict&, const CriteriaVerdict&) = default;
};

struct JudgeMeta {
  std::string judge_model_id;
  std::string prompt_hash;
  int attempts = 1;
  bool judge_failed = false;

  friend bool operator==(const JudgeMeta&, const JudgeMeta&) = default;
};

struct EvaluationRecord {
  std::string question_id;
  std::string source_id;
  CriteriaVerdict verdict;
  Badge badge = Badge::Red;
  JudgeMeta judge_meta;
  bool source_failed = false;
  std::string cache_key;
  std::string evaluated_at;  // ISO-8601 UTC

  friend bool operator==(const EvaluationRecord&, const EvaluationRecord&) = default;
};

}  // namespace awe
