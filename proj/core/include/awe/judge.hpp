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

#include <chrono>
#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "awe/types.hpp"

namespace awe {

// Rendered in place of the context when a source retrieved nothing.
inline constexpr std::string_view kNoContextSentinel = "no context retrieved";

struct JudgePrompt {
  std::string text;
  std::string prompt_hash;  // sha256 of text, lowercase hex
};

struct RawJudgeReply {
  std::string text;
};

// The grading prompt with its three slots still unsubstituted.
std::string_view prompt_template() noexcept;

// Hash of the unsubstituted template; identifies the prompt version of a run.
const std::string& prompt_template_hash();

// "[doc_id]\ntext" blocks joined by a blank line, or kNoContextSentinel for
// an empty list.
std::string render_context(std::span<const ContextRecord> records);

// An empty context string is replaced by kNoContextSentinel.
JudgePrompt build_prompt(std::string_view question, std::string_view context,
                         std::string_view answer);

// Extracts the verdict from a free-form judge reply. Tolerates surrounding
// prose, code fences, the "quality_assessment" wrapper (or its absence),
// Python-literal dicts and title-case "True"/"False" strings. Throws
// ParseError when no object is found, a criterion key is missing, or a
// criterion value is not a boolean.
CriteriaVerdict parse_verdict(const RawJudgeReply& reply);

// Canonical JSON reply: {"quality_assessment": {...}}.
std::string serialize_verdict(const CriteriaVerdict& verdict);

// A text-completion endpoint. Implementations must be safe to call from
// several threads at once.
class CompletionBackend {
 public:
  virtual ~CompletionBackend() = default;
  // Throws TransportError on timeout or transport failure.
  virtual std::string complete(std::string_view prompt, std::chrono::milliseconds timeout) = 0;
};

inline constexpr std::string_view kJudgeApiKeyEnv = "AWE_JUDGE_API_KEY";

struct JudgeConfig {
  // "mock" (offline rule-based judge) or "openai" (chat-completions API).
  std::string backend_id = "mock";
  std::string model_id = "mock-judge-v1";
  std::string endpoint;
  int max_attempts = 3;
  std::chrono::milliseconds request_timeout{60'000};
  // Always sent as temperature 0 where the backend supports it.
  double temperature = 0.0;
};

// Validates the config and builds the matching backend. Unknown backend,
// missing endpoint or missing credential throw ConfigError.
std::shared_ptr<CompletionBackend> make_backend(const JudgeConfig& config);

// Backend that POSTs an OpenAI-style chat-completions request and returns
// choices[0].message.content.
class OpenAIChatBackend final : public CompletionBackend {
 public:
  OpenAIChatBackend(std::string endpoint, std::string model_id, std::string api_key,
                    double temperature);
  std::string complete(std::string_view prompt, std::chrono::milliseconds timeout) override;

 private:
  std::string endpoint_;
  std::string model_id_;
  std::string api_key_;
  double temperature_;
};

struct JudgeOutcome {
  EvaluationRecord record;
  // Raw text of every attempt, in order. Transport failures are recorded as
  // an empty string.
  std::vector<std::string> replies;
  int backend_calls = 0;
};

// Builds the prompt, asks the backend up to config.max_attempts times until
// the reply parses, and returns the badged record. On exhaustion the record
// is Red with judge_failed set and a diagnostic assessment.
JudgeOutcome judge_one_detailed(const SourceResponse& response, const Question& question,
                                const JudgeConfig& config, CompletionBackend& backend);

EvaluationRecord judge_one(const SourceResponse& response, const Question& question,
                           const JudgeConfig& config, CompletionBackend& backend);

}  // namespace awe
