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

#include <string_view>

#include "awe/judge.hpp"
#include "awe/types.hpp"

namespace awe {

// Offline, deterministic stand-in for an LLM judge:
//   related  : some word of 4+ letters/digits in the question also occurs
//              as a word in the context (case-insensitive)
//   directly : related, and the context has a token containing a digit or
//              '%', or a bare "OR"/"HR" token
//   grounded : the context is non-empty and every digit-bearing token of
//              the answer occurs verbatim in it
// The sentinel context counts as empty. The "[doc_id]" header lines of a
// rendered context are ignored by the first two rules.
CriteriaVerdict mock_verdict(std::string_view question, std::string_view context,
                             std::string_view answer);

// Reply in the canonical quality_assessment JSON shape.
RawJudgeReply mock_judge(const Question& question, const SourceResponse& response);

// CompletionBackend that reads the question, context and answer back out of
// a grading prompt and answers with mock_verdict.
class MockJudgeBackend final : public CompletionBackend {
 public:
  std::string complete(std::string_view prompt, std::chrono::milliseconds timeout) override;
};

}  // namespace awe
