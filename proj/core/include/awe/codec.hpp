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
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "awe/types.hpp"

namespace awe {

// JSON mappings for the on-disk schemas. from_json functions throw
// std::invalid_argument with a field-level message; the file readers below
// wrap that into MalformedRecord with the line number.

nlohmann::json to_json(const Question& q);
Question question_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SourceResponse& r);
SourceResponse response_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CriteriaVerdict& v);
nlohmann::json to_json(const EvaluationRecord& r);
EvaluationRecord record_from_json(const nlohmann::json& j);

// Calls fn(line_number, parsed_object) for every non-blank line. Throws
// MalformedRecord on unparsable JSON or if fn throws std::invalid_argument.
void for_each_jsonl(const std::filesystem::path& path,
                    const std::function<void(std::size_t, const nlohmann::json&)>& fn);

// Unique ids, non-empty trimmed text.
std::vector<Question> read_questions(const std::filesystem::path& path);
void write_questions(std::ostream& out, const std::vector<Question>& questions);

std::vector<SourceResponse> read_responses(const std::filesystem::path& path);
std::vector<EvaluationRecord> read_records(const std::filesystem::path& path);

// Compact single-line form used for JSON-lines files.
std::string to_line(const nlohmann::json& j);

std::string iso8601_utc(std::chrono::system_clock::time_point t);

}  // namespace awe
