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
#include "awe/judge.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <optional>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "awe/badge.hpp"
#include "awe/errors.hpp"
#include "awe/hash.hpp"
#include "awe/mock_judge.hpp"
#include "http.hpp"

namespace awe {
namespace {

using nlohmann::json;

// Reproduced byte-for-byte, including the leading newline of the
// triple-quoted original and the hard line breaks.
constexpr std::string_view kTemplate = R"(
# Task
You are an expert in medical research. Your job is to evaluate an AI
assistant's answer based on the provided context and question.

# Evaluation Criteria (respond True or False for each)
1. The context directly answers the question with relevant information.
2. The context is related to the question, even if it doesn't answer the
question.
3. The AI's answer is well-grounded in the provided context (no external
information or hallucinations).

# Original question
{question}

# Context provided:
{context}

# AI's answer:
{answer}

# Format
Provide your response as a structured output with 3 booleans
'quality_assessment': {
    'context_answers_question_directly': False,
    'context_addresses_question': True,
    'answer_grounded_in_context': True,
    'assessment': 'The response accurately reflects the information available
in the context, noting the lack of direct comparison between CGM and
traditional monitoring methods regarding glycemic control and hypoglycemia
risk.'
}
)";

constexpr std::string_view kDirectlyKey = "context_answers_question_directly";
constexpr std::string_view kRelatedKey = "context_addresses_question";
constexpr std::string_view kGroundedKey = "answer_grounded_in_context";

// End index (inclusive) of the balanced object opening at text[open], or
// nullopt. Quotes of either kind delimit strings.
std::optional<std::size_t> match_object(std::string_view text, std::size_t open) {
  int depth = 0;
  char quote = 0;
  for (std::size_t i = open; i < text.size(); ++i) {
    const char c = text[i];
    if (quote != 0) {
      if (c == '\\') {
        ++i;
      } else if (c == quote) {
        quote = 0;
      }
      continue;
    }
    if (c == '"' || c == '\'') {
      quote = c;
    } else if (c == '{') {
      ++depth;
    } else if (c == '}') {
      if (--depth == 0) return i;
    }
  }
  return std::nullopt;
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

// Rewrites a Python dict literal (single-quoted strings, True/False/None,
// trailing commas, raw newlines inside strings) into JSON.
std::string python_literal_to_json(std::string_view in) {
  std::string out;
  out.reserve(in.size() + 16);
  for (std::size_t i = 0; i < in.size(); ++i) {
    const char c = in[i];
    if (c == '"' || c == '\'') {
      const char quote = c;
      out.push_back('"');
      for (++i; i < in.size() && in[i] != quote; ++i) {
        const char s = in[i];
        if (s == '\\' && i + 1 < in.size()) {
          const char next = in[++i];
          if (next == '\'') {
            out.push_back('\'');
          } else {
            out.push_back('\\');
            out.push_back(next);
          }
        } else if (s == '"') {
          out += "\\\"";
        } else if (s == '\n') {
          out += "\\n";
        } else if (s == '\r') {
          out += "\\r";
        } else if (s == '\t') {
          out += "\\t";
        } else {
          out.push_back(s);
        }
      }
      out.push_back('"');
      continue;
    }
    if (c == ',') {
      std::size_t j = i + 1;
      while (j < in.size() && std::isspace(static_cast<unsigned char>(in[j])) != 0) ++j;
      if (j < in.size() && (in[j] == '}' || in[j] == ']')) continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) != 0 && (i == 0 || !is_ident_char(in[i - 1]))) {
      std::size_t j = i;
      while (j < in.size() && is_ident_char(in[j])) ++j;
      const std::string_view word = in.substr(i, j - i);
      if (word == "True") {
        out += "true";
      } else if (word == "False") {
        out += "false";
      } else if (word == "None") {
        out += "null";
      } else {
        out += word;
      }
      i = j - 1;
      continue;
    }
    out.push_back(c);
  }
  return out;
}

std::optional<json> parse_object(std::string_view candidate) {
  json j = json::parse(candidate, nullptr, false);
  if (j.is_discarded()) j = json::parse(python_literal_to_json(candidate), nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  return j;
}

bool read_criterion(const json& obj, std::string_view key) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError("judge reply is missing \"" + std::string(key) + "\"");
  if (it->is_boolean()) return it->get<bool>();
  if (it->is_string()) {
    std::string s = it->get<std::string>();
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (s == "true") return true;
    if (s == "false") return false;
  }
  throw ParseError("\"" + std::string(key) + "\" is not a boolean: " + it->dump());
}

}  // namespace

std::string_view prompt_template() noexcept { return kTemplate; }

const std::string& prompt_template_hash() {
  static const std::string hash = sha256_hex(kTemplate);
  return hash;
}

std::string render_context(std::span<const ContextRecord> records) {
  if (records.empty()) return std::string(kNoContextSentinel);
  std::string out;
  for (const auto& record : records) {
    if (!out.empty()) out += "\n\n";
    out += '[';
    out += record.doc_id;
    out += "]\n";
    out += record.text;
  }
  return out;
}

JudgePrompt build_prompt(std::string_view question, std::string_view context,
                         std::string_view answer) {
  if (context.empty()) context = kNoContextSentinel;
  struct Slot {
    std::string_view placeholder;
    std::string_view value;
  };
  const Slot slots[] = {{"{question}", question}, {"{context}", context}, {"{answer}", answer}};

  std::string text;
  text.reserve(kTemplate.size() + question.size() + context.size() + answer.size());
  std::size_t pos = 0;
  for (const auto& slot : slots) {
    const std::size_t at = kTemplate.find(slot.placeholder, pos);
    text.append(kTemplate.substr(pos, at - pos));
    text.append(slot.value);
    pos = at + slot.placeholder.size();
  }
  text.append(kTemplate.substr(pos));
  JudgePrompt prompt{std::move(text), {}};
  prompt.prompt_hash = sha256_hex(prompt.text);
  return prompt;
}

CriteriaVerdict parse_verdict(const RawJudgeReply& reply) {
  const std::string_view text = reply.text;
  std::optional<json> found;
  for (std::size_t open = text.find('{'); open != std::string_view::npos;
       open = text.find('{', open + 1)) {
    const auto close = match_object(text, open);
    if (!close) continue;
    found = parse_object(text.substr(open, *close - open + 1));
    if (found) break;
  }
  if (!found) throw ParseError("no JSON object found in judge reply");

  const json* obj = &*found;
  if (const auto it = obj->find("quality_assessment"); it != obj->end() && it->is_object()) {
    obj = &*it;
  }
  CriteriaVerdict v;
  v.context_answers_question_directly = read_criterion(*obj, kDirectlyKey);
  v.context_addresses_question = read_criterion(*obj, kRelatedKey);
  v.answer_grounded_in_context = read_criterion(*obj, kGroundedKey);
  if (const auto it = obj->find("assessment"); it != obj->end() && !it->is_null()) {
    v.assessment = it->is_string() ? it->get<std::string>() : it->dump();
  }
  return v;
}

std::string serialize_verdict(const CriteriaVerdict& verdict) {
  json inner = json::object();
  inner[std::string(kDirectlyKey)] = verdict.context_answers_question_directly;
  inner[std::string(kRelatedKey)] = verdict.context_addresses_question;
  inner[std::string(kGroundedKey)] = verdict.answer_grounded_in_context;
  inner["assessment"] = verdict.assessment;
  return json{{"quality_assessment", std::move(inner)}}.dump();
}

OpenAIChatBackend::OpenAIChatBackend(std::string endpoint, std::string model_id,
                                     std::string api_key, double temperature)
    : endpoint_(std::move(endpoint)),
      model_id_(std::move(model_id)),
      api_key_(std::move(api_key)),
      temperature_(temperature) {
  detail::parse_url(endpoint_);
}

std::string OpenAIChatBackend::complete(std::string_view prompt,
                                        std::chrono::milliseconds timeout) {
  const json request = {
      {"model", model_id_},
      {"temperature", temperature_},
      {"messages", json::array({{{"role", "user"}, {"content", std::string(prompt)}}})},
  };
  const auto response = detail::http_post_json(
      endpoint_, request.dump(), {{"Authorization", "Bearer " + api_key_}}, timeout);
  const json body = json::parse(response.body, nullptr, false);
  if (body.is_discarded()) throw TransportError("judge endpoint returned non-JSON body");
  try {
    return body.at("choices").at(0).at("message").at("content").get<std::string>();
  } catch (const json::exception& e) {
    throw TransportError(std::string("unexpected judge response shape: ") + e.what());
  }
}

std::shared_ptr<CompletionBackend> make_backend(const JudgeConfig& config) {
  if (config.max_attempts < 1) throw ConfigError("judge max_attempts must be >= 1");
  if (config.model_id.empty()) throw ConfigError("judge model_id is empty");
  if (config.backend_id == "mock") return std::make_shared<MockJudgeBackend>();
  if (config.backend_id == "openai") {
    if (config.endpoint.empty()) throw ConfigError("judge backend 'openai' needs an endpoint");
    const char* key = std::getenv(std::string(kJudgeApiKeyEnv).c_str());
    if (key == nullptr || *key == '\0') {
      throw ConfigError("environment variable " + std::string(kJudgeApiKeyEnv) + " is not set");
    }
    return std::make_shared<OpenAIChatBackend>(config.endpoint, config.model_id, key,
                                               config.temperature);
  }
  throw ConfigError("unknown judge backend '" + config.backend_id + "'");
}

JudgeOutcome judge_one_detailed(const SourceResponse& response, const Question& question,
                                const JudgeConfig& config, CompletionBackend& backend) {
  if (question.id != response.question_id) {
    throw std::invalid_argument("response for '" + response.question_id +
                                "' judged against question '" + question.id + "'");
  }
  if (config.max_attempts < 1) throw ConfigError("judge max_attempts must be >= 1");

  const JudgePrompt prompt =
      build_prompt(question.text, render_context(response.context), response.answer_text);

  JudgeOutcome outcome;
  EvaluationRecord& record = outcome.record;
  record.question_id = response.question_id;
  record.source_id = response.source_id;
  record.source_failed = response.source_failed;
  record.judge_meta.judge_model_id = config.model_id;
  record.judge_meta.prompt_hash = prompt.prompt_hash;

  std::string last_error;
  for (int attempt = 1; attempt <= config.max_attempts; ++attempt) {
    ++outcome.backend_calls;
    try {
      outcome.replies.push_back(backend.complete(prompt.text, config.request_timeout));
    } catch (const TransportError& e) {
      outcome.replies.emplace_back();
      last_error = e.what();
      continue;
    }
    try {
      record.verdict = parse_verdict(RawJudgeReply{outcome.replies.back()});
    } catch (const ParseError& e) {
      last_error = e.what();
      continue;
    }
    record.badge = assign_badge(record.verdict);
    record.judge_meta.attempts = attempt;
    record.judge_meta.judge_failed = false;
    return outcome;
  }

  record.verdict = CriteriaVerdict{};
  record.verdict.assessment = "judge failed after " + std::to_string(config.max_attempts) +
                              " attempt(s): " + last_error;
  record.badge = Badge::Red;
  record.judge_meta.attempts = config.max_attempts;
  record.judge_meta.judge_failed = true;
  return outcome;
}

EvaluationRecord judge_one(const SourceResponse& response, const Question& question,
                           const JudgeConfig& config, CompletionBackend& backend) {
  return judge_one_detailed(response, question, config, backend).record;
}

}  // namespace awe
