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

#include "awe/codec.hpp"

#include <algorithm>
#include <cctype>
#include <ctime>
#include <fstream>
#include <stdexcept>
#include <unordered_set>

#include "awe/errors.hpp"

namespace awe {
namespace {

using nlohmann::json;

const json& require(const json& j, const char* key) {
  if (!j.is_object()) throw std::invalid_argument("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  return *it;
}

std::string require_string(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_string()) throw std::invalid_argument(std::string("\"") + key + "\" must be a string");
  return v.get<std::string>();
}

std::string require_nonempty(const json& j, const char* key) {
  std::string s = require_string(j, key);
  if (s.empty()) throw std::invalid_argument(std::string("\"") + key + "\" must not be empty");
  return s;
}

bool require_bool(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_boolean()) throw std::invalid_argument(std::string("\"") + key + "\" must be a boolean");
  return v.get<bool>();
}

bool optional_bool(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return false;
  if (!it->is_boolean()) throw std::invalid_argument(std::string("\"") + key + "\" must be a boolean");
  return it->get<bool>();
}

bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

CriteriaVerdict verdict_from_json(const json& j) {
  CriteriaVerdict v;
  v.context_answers_question_directly = require_bool(j, "context_answers_question_directly");
  v.context_addresses_question = require_bool(j, "context_addresses_question");
  v.answer_grounded_in_context = require_bool(j, "answer_grounded_in_context");
  if (const auto it = j.find("assessment"); it != j.end() && it->is_string()) {
    v.assessment = it->get<std::string>();
  }
  return v;
}

}  // namespace

json to_json(const Question& q) {
  json j = {{"id", q.id}, {"text", q.text}};
  if (!q.tags.empty()) j["tags"] = q.tags;
  return j;
}

Question question_from_json(const json& j) {
  Question q;
  q.id = require_nonempty(j, "id");
  q.text = require_string(j, "text");
  if (blank(q.text)) throw std::invalid_argument("question \"" + q.id + "\" has empty text");
  if (const auto it = j.find("tags"); it != j.end() && !it->is_null()) {
    if (!it->is_array()) throw std::invalid_argument("\"tags\" must be an array of strings");
    for (const auto& t : *it) {
      if (!t.is_string()) throw std::invalid_argument("\"tags\" must be an array of strings");
      q.tags.push_back(t.get<std::string>());
    }
  }
  return q;
}

json to_json(const SourceResponse& r) {
  json context = json::array();
  for (const auto& c : r.context) context.push_back({{"doc_id", c.doc_id}, {"text", c.text}});
  json j = {{"question_id", r.question_id},
            {"source_id", r.source_id},
            {"answer_text", r.answer_text},
            {"context", std::move(context)}};
  if (r.source_failed) j["source_failed"] = true;
  return j;
}

SourceResponse response_from_json(const json& j) {
  SourceResponse r;
  r.question_id = require_nonempty(j, "question_id");
  r.source_id = require_nonempty(j, "source_id");
  r.answer_text = require_string(j, "answer_text");
  const json& context = require(j, "context");
  if (!context.is_array()) throw std::invalid_argument("\"context\" must be an array");
  for (const auto& c : context) {
    ContextRecord record{require_string(c, "doc_id"), require_nonempty(c, "text")};
    r.context.push_back(std::move(record));
  }
  r.source_failed = optional_bool(j, "source_failed");
  return r;
}

json to_json(const CriteriaVerdict& v) {
  return {{"context_answers_question_directly", v.context_answers_question_directly},
          {"context_addresses_question", v.context_addresses_question},
          {"answer_grounded_in_context", v.answer_grounded_in_context},
          {"assessment", v.assessment}};
}

json to_json(const EvaluationRecord& r) {
  return {{"question_id", r.question_id},
          {"source_id", r.source_id},
          {"verdict", to_json(r.verdict)},
          {"badge", std::string(to_string(r.badge))},
          {"judge_meta",
           {{"judge_model_id", r.judge_meta.judge_model_id},
            {"prompt_hash", r.judge_meta.prompt_hash},
            {"attempts", r.judge_meta.attempts},
            {"judge_failed", r.judge_meta.judge_failed}}},
          {"source_failed", r.source_failed},
          {"cache_key", r.cache_key},
          {"evaluated_at", r.evaluated_at}};
}

EvaluationRecord record_from_json(const json& j) {
  EvaluationRecord r;
  r.question_id = require_nonempty(j, "question_id");
  r.source_id = require_nonempty(j, "source_id");
  r.verdict = verdict_from_json(require(j, "verdict"));
  const auto badge = parse_badge(require_string(j, "badge"));
  if (!badge) throw std::invalid_argument("\"badge\" must be Green, Yellow or Red");
  r.badge = *badge;
  const json& meta = require(j, "judge_meta");
  r.judge_meta.judge_model_id = require_string(meta, "judge_model_id");
  r.judge_meta.prompt_hash = require_string(meta, "prompt_hash");
  const json& attempts = require(meta, "attempts");
  if (!attempts.is_number_integer() || attempts.get<int>() < 1) {
    throw std::invalid_argument("\"attempts\" must be an integer >= 1");
  }
  r.judge_meta.attempts = attempts.get<int>();
  r.judge_meta.judge_failed = require_bool(meta, "judge_failed");
  r.source_failed = optional_bool(j, "source_failed");
  if (const auto it = j.find("cache_key"); it != j.end() && it->is_string()) {
    r.cache_key = it->get<std::string>();
  }
  if (const auto it = j.find("evaluated_at"); it != j.end() && it->is_string()) {
    r.evaluated_at = it->get<std::string>();
  }
  return r;
}

void for_each_jsonl(const std::filesystem::path& path,
                    const std::function<void(std::size_t, const json&)>& fn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path.string());
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (blank(line)) continue;
    const json j = json::parse(line, nullptr, false);
    if (j.is_discarded()) throw MalformedRecord(number, path.string() + ": invalid JSON");
    try {
      fn(number, j);
    } catch (const std::invalid_argument& e) {
      throw MalformedRecord(number, path.string() + ": " + e.what());
    } catch (const json::exception& e) {
      throw MalformedRecord(number, path.string() + ": " + e.what());
    }
  }
}

std::vector<Question> read_questions(const std::filesystem::path& path) {
  std::vector<Question> out;
  std::unordered_set<std::string> seen;
  for_each_jsonl(path, [&](std::size_t line, const json& j) {
    Question q = question_from_json(j);
    if (!seen.insert(q.id).second) {
      throw DuplicateRecord(path.string() + ": line " + std::to_string(line) +
                            ": duplicate question id \"" + q.id + "\"");
    }
    out.push_back(std::move(q));
  });
  return out;
}

void write_questions(std::ostream& out, const std::vector<Question>& questions) {
  for (const auto& q : questions) out << to_line(to_json(q)) << '\n';
}

std::vector<SourceResponse> read_responses(const std::filesystem::path& path) {
  std::vector<SourceResponse> out;
  for_each_jsonl(path, [&](std::size_t, const json& j) { out.push_back(response_from_json(j)); });
  return out;
}

std::vector<EvaluationRecord> read_records(const std::filesystem::path& path) {
  std::vector<EvaluationRecord> out;
  for_each_jsonl(path, [&](std::size_t, const json& j) { out.push_back(record_from_json(j)); });
  return out;
}

std::string to_line(const json& j) {
  return j.dump(-1, ' ', false, json::error_handler_t::replace);
}

std::string iso8601_utc(std::chrono::system_clock::time_point t) {
  const std::time_t secs = std::chrono::system_clock::to_time_t(t);
  std::tm tm{};
  gmtime_r(&secs, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace awe
