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

#include "awe/mock_judge.hpp"

#include <cctype>
#include <string>
#include <unordered_set>

#include "awe/errors.hpp"

namespace awe {
namespace {

bool is_word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

// Lowercased maximal alphanumeric runs.
std::vector<std::string> words(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  for (const char c : text) {
    if (is_word_char(c)) {
      current.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    } else if (!current.empty()) {
      out.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

std::vector<std::string_view> whitespace_tokens(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    const std::size_t begin = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    if (i > begin) out.push_back(text.substr(begin, i - begin));
  }
  return out;
}

std::string_view strip_punct(std::string_view token) {
  constexpr std::string_view kPunct = "()[]{},;:.!?\"'";
  const auto begin = token.find_first_not_of(kPunct);
  if (begin == std::string_view::npos) return {};
  const auto end = token.find_last_not_of(kPunct);
  return token.substr(begin, end - begin + 1);
}

bool has_digit(std::string_view s) {
  for (const char c : s) {
    if (is_digit(c)) return true;
  }
  return false;
}

// Text between two markers, or empty.
std::string_view between(std::string_view text, std::string_view open, std::string_view close,
                         std::size_t& cursor) {
  const auto a = text.find(open, cursor);
  if (a == std::string_view::npos) return {};
  const auto begin = a + open.size();
  const auto b = text.find(close, begin);
  if (b == std::string_view::npos) return {};
  cursor = b;
  return text.substr(begin, b - begin);
}

// The context without the "[doc_id]" header lines that render_context
// inserts, so identifiers do not count as figures or shared words.
std::string strip_doc_headers(std::string_view context) {
  std::string out;
  std::size_t pos = 0;
  while (pos <= context.size()) {
    auto end = context.find('\n', pos);
    if (end == std::string_view::npos) end = context.size();
    const auto line = context.substr(pos, end - pos);
    const bool header = line.size() >= 2 && line.front() == '[' && line.back() == ']' &&
                        line.find(']') == line.size() - 1;
    if (!header) {
      out.append(line);
      out.push_back('\n');
    }
    pos = end + 1;
  }
  return out;
}

}  // namespace

CriteriaVerdict mock_verdict(std::string_view question, std::string_view context,
                             std::string_view answer) {
  if (context == kNoContextSentinel) context = {};
  const std::string body = strip_doc_headers(context);

  std::unordered_set<std::string> context_words;
  for (auto& w : words(body)) context_words.insert(std::move(w));

  CriteriaVerdict v;
  for (const auto& w : words(question)) {
    if (w.size() >= 4 && context_words.contains(w)) {
      v.context_addresses_question = true;
      break;
    }
  }

  bool quantitative = false;
  for (const auto token : whitespace_tokens(body)) {
    const auto bare = strip_punct(token);
    if (has_digit(token) || token.find('%') != std::string_view::npos || bare == "OR" ||
        bare == "HR") {
      quantitative = true;
      break;
    }
  }
  v.context_answers_question_directly = v.context_addresses_question && quantitative;

  // Nothing can be grounded in an empty context.
  v.answer_grounded_in_context = !context.empty();
  std::string missing;
  for (const auto token : whitespace_tokens(answer)) {
    const auto bare = strip_punct(token);
    if (has_digit(bare) && context.find(bare) == std::string_view::npos) {
      v.answer_grounded_in_context = false;
      missing = std::string(bare);
      break;
    }
  }

  v.assessment = std::string("mock judge: ") +
                 (v.context_addresses_question ? "context shares question terms"
                                               : "context shares no question terms") +
                 (quantitative ? "; context is quantitative" : "; context has no figures") +
                 (v.answer_grounded_in_context ? "; every figure in the answer is in the context"
                  : missing.empty()            ? "; no context to ground the answer"
                                               : "; answer figure '" + missing +
                                                     "' is not in the context");
  return v;
}

RawJudgeReply mock_judge(const Question& question, const SourceResponse& response) {
  return {serialize_verdict(
      mock_verdict(question.text, render_context(response.context), response.answer_text))};
}

std::string MockJudgeBackend::complete(std::string_view prompt, std::chrono::milliseconds) {
  std::size_t cursor = 0;
  const auto question = between(prompt, "# Original question\n", "\n\n# Context provided:\n", cursor);
  const auto context = between(prompt, "# Context provided:\n", "\n\n# AI's answer:\n", cursor);
  const auto answer = between(prompt, "# AI's answer:\n", "\n\n# Format\n", cursor);
  if (cursor == 0) throw TransportError("mock judge: prompt is not a grading prompt");
  return serialize_verdict(mock_verdict(question, context, answer));
}

}  // namespace awe
