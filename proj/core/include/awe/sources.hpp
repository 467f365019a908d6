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
#include <filesystem>
#include <memory>
#include <string>
#include <unordered_map>
#include <variant>

#include "awe/types.hpp"

namespace awe {

struct FixtureSourceSpec {
  std::filesystem::path path;  // JSON-lines SourceResponse records
};

struct HttpSourceSpec {
  std::string endpoint;          // full URL, POSTed to
  std::string request_template;  // body; "{question}" is replaced
  std::string credential_env;    // optional; sent as a Bearer token
  std::string answer_path = "answer";
  std::string context_path = "context";
  std::string doc_id_field = "doc_id";
  std::string text_field = "text";
  std::chrono::milliseconds timeout{30'000};
};

struct SourceConfig {
  std::string source_id;
  std::variant<FixtureSourceSpec, HttpSourceSpec> spec;
  int max_concurrency = 4;
  int max_attempts = 2;  // transport retries; MissingFixture is never retried
};

// Produces SourceResponse values for one evidence source. Implementations
// hold no per-request mutable state and may be called concurrently.
class SourceAdapter {
 public:
  virtual ~SourceAdapter() = default;
  virtual const std::string& source_id() const noexcept = 0;
  // Throws MissingFixture or TransportError.
  virtual SourceResponse fetch(const Question& question) const = 0;
};

// Serves records stored in a responses file. Only lines whose source_id
// matches the adapter are used; the record is returned unchanged.
class FixtureSource final : public SourceAdapter {
 public:
  FixtureSource(std::string source_id, const std::filesystem::path& path);

  const std::string& source_id() const noexcept override { return source_id_; }
  SourceResponse fetch(const Question& question) const override;
  std::size_t size() const noexcept { return by_question_.size(); }

 private:
  std::string source_id_;
  std::unordered_map<std::string, SourceResponse> by_question_;
};

// Generic JSON-over-HTTP RAG endpoint with declarative field mapping.
class HttpSource final : public SourceAdapter {
 public:
  HttpSource(std::string source_id, HttpSourceSpec spec);

  const std::string& source_id() const noexcept override { return source_id_; }
  SourceResponse fetch(const Question& question) const override;

  // The request body for a question: the template with "{question}"
  // replaced by the JSON-string-escaped question text.
  std::string request_body(const Question& question) const;

 private:
  std::string source_id_;
  HttpSourceSpec spec_;
  std::string credential_;
};

// Throws ConfigError (missing credential env var, bad URL, unreadable
// fixture file).
std::unique_ptr<SourceAdapter> make_source(const SourceConfig& config);

SourceResponse fetch_response(const SourceConfig& source, const Question& question);

}  // namespace awe
