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

#include "awe/sources.hpp"

#include <cstdlib>

#include <nlohmann/json.hpp>

#include "awe/codec.hpp"
#include "awe/errors.hpp"
#include "http.hpp"

namespace awe {
namespace {

using nlohmann::json;

// Resolves "a.b.0.c" against a JSON document; numeric segments index
// arrays. Returns nullptr when any segment is absent.
const json* resolve_path(const json& root, std::string_view path) {
  const json* node = &root;
  while (!path.empty()) {
    const auto dot = path.find('.');
    const std::string segment(path.substr(0, dot));
    path = dot == std::string_view::npos ? std::string_view{} : path.substr(dot + 1);
    if (node->is_object()) {
      const auto it = node->find(segment);
      if (it == node->end()) return nullptr;
      node = &*it;
    } else if (node->is_array()) {
      char* end = nullptr;
      const unsigned long index = std::strtoul(segment.c_str(), &end, 10);
      if (segment.empty() || *end != '\0' || index >= node->size()) return nullptr;
      node = &(*node)[index];
    } else {
      return nullptr;
    }
  }
  return node;
}

std::string scalar_text(const json& j) {
  return j.is_string() ? j.get<std::string>() : j.dump();
}

}  // namespace

FixtureSource::FixtureSource(std::string source_id, const std::filesystem::path& path)
    : source_id_(std::move(source_id)) {
  if (!std::filesystem::exists(path)) throw ConfigError("fixture file not found: " + path.string());
  for_each_jsonl(path, [&](std::size_t line, const json& j) {
    SourceResponse r = response_from_json(j);
    if (r.source_id != source_id_) return;
    const std::string qid = r.question_id;
    if (!by_question_.emplace(qid, std::move(r)).second) {
      throw DuplicateRecord(path.string() + ": line " + std::to_string(line) +
                            ": second response for (" + qid + ", " + source_id_ + ")");
    }
  });
}

SourceResponse FixtureSource::fetch(const Question& question) const {
  const auto it = by_question_.find(question.id);
  if (it == by_question_.end()) {
    throw MissingFixture("source '" + source_id_ + "' has no fixture for question '" +
                         question.id + "'");
  }
  return it->second;
}

HttpSource::HttpSource(std::string source_id, HttpSourceSpec spec)
    : source_id_(std::move(source_id)), spec_(std::move(spec)) {
  detail::parse_url(spec_.endpoint);
  if (!spec_.credential_env.empty()) {
    const char* value = std::getenv(spec_.credential_env.c_str());
    if (value == nullptr || *value == '\0') {
      throw ConfigError("source '" + source_id_ + "': environment variable " +
                        spec_.credential_env + " is not set");
    }
    credential_ = value;
  }
}

std::string HttpSource::request_body(const Question& question) const {
  const std::string quoted = json(question.text).dump();
  const std::string escaped = quoted.substr(1, quoted.size() - 2);
  constexpr std::string_view kSlot = "{question}";
  std::string body;
  std::size_t pos = 0;
  for (auto at = spec_.request_template.find(kSlot); at != std::string::npos;
       at = spec_.request_template.find(kSlot, pos)) {
    body.append(spec_.request_template, pos, at - pos);
    body += escaped;
    pos = at + kSlot.size();
  }
  body.append(spec_.request_template, pos);
  return body;
}

SourceResponse HttpSource::fetch(const Question& question) const {
  detail::Headers headers;
  if (!credential_.empty()) headers.emplace_back("Authorization", "Bearer " + credential_);
  const auto response =
      detail::http_post_json(spec_.endpoint, request_body(question), headers, spec_.timeout);
  const json body = json::parse(response.body, nullptr, false);
  if (body.is_discarded()) throw TransportError("source '" + source_id_ + "' returned non-JSON");

  SourceResponse out;
  out.question_id = question.id;
  out.source_id = source_id_;
  const json* answer = resolve_path(body, spec_.answer_path);
  if (answer == nullptr || !answer->is_string()) {
    throw TransportError("source '" + source_id_ + "': no string at '" + spec_.answer_path + "'");
  }
  out.answer_text = answer->get<std::string>();
  const json* context = resolve_path(body, spec_.context_path);
  if (context != nullptr && !context->is_null()) {
    if (!context->is_array()) {
      throw TransportError("source '" + source_id_ + "': '" + spec_.context_path +
                           "' is not an array");
    }
    for (std::size_t i = 0; i < context->size(); ++i) {
      const json& item = (*context)[i];
      ContextRecord record;
      if (item.is_string()) {
        record.doc_id = std::to_string(i + 1);
        record.text = item.get<std::string>();
      } else {
        const json* doc = resolve_path(item, spec_.doc_id_field);
        const json* text = resolve_path(item, spec_.text_field);
        record.doc_id = doc != nullptr ? scalar_text(*doc) : std::to_string(i + 1);
        if (text != nullptr && !text->is_null()) record.text = scalar_text(*text);
      }
      if (!record.text.empty()) out.context.push_back(std::move(record));
    }
  }
  return out;
}

std::unique_ptr<SourceAdapter> make_source(const SourceConfig& config) {
  if (config.source_id.empty()) throw ConfigError("source_id must not be empty");
  if (config.max_concurrency < 1) {
    throw ConfigError("source '" + config.source_id + "': max_concurrency must be >= 1");
  }
  if (const auto* fixture = std::get_if<FixtureSourceSpec>(&config.spec)) {
    return std::make_unique<FixtureSource>(config.source_id, fixture->path);
  }
  return std::make_unique<HttpSource>(config.source_id, std::get<HttpSourceSpec>(config.spec));
}

SourceResponse fetch_response(const SourceConfig& source, const Question& question) {
  return make_source(source)->fetch(question);
}

}  // namespace awe
