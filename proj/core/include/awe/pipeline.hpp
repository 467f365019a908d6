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

#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "awe/judge.hpp"
#include "awe/metrics.hpp"
#include "awe/sampling.hpp"
#include "awe/sources.hpp"
#include "awe/types.hpp"

namespace awe {

struct RunConfig {
  std::string run_id;
  std::filesystem::path questions_path;
  std::vector<SourceConfig> sources;
  JudgeConfig judge;
  std::map<std::string, SampleSpec> samples;  // by source_id; absent = all
  std::filesystem::path output_dir;
  int max_parallel_judge = 4;
  int max_parallel_source = 4;
};

// Reads the declarative run config. Relative paths resolve against the
// config file's directory. Throws ConfigError.
RunConfig load_run_config(const std::filesystem::path& path);
RunConfig run_config_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir);
nlohmann::json to_json(const RunConfig& config);

struct RunManifest {
  std::string run_id;
  nlohmann::json config_snapshot;
  std::string prompt_hash;  // hash of the unsubstituted grading template
  std::string judge_model_id;
  std::vector<std::string> sources;
  std::map<std::string, std::uint64_t> question_counts;  // per source
  std::string started_at;
  std::string finished_at;  // empty while running
  std::uint64_t judge_failed = 0;
  std::uint64_t source_failed = 0;
  std::uint64_t records = 0;
  // Bookkeeping for this invocation.
  std::uint64_t cache_hits = 0;
  std::uint64_t judge_calls = 0;
};

nlohmann::json to_json(const RunManifest& m);
RunManifest manifest_from_json(const nlohmann::json& j);

// Overrides for tests and embedding.
struct RunHooks {
  // Used instead of make_backend(config.judge) when set.
  std::shared_ptr<CompletionBackend> backend;
  // Source adapters keyed by source_id, used instead of make_source.
  std::map<std::string, std::shared_ptr<SourceAdapter>> sources;
  std::function<std::chrono::system_clock::time_point()> clock;
};

// Deterministic key of one judged pair: sha256 over the length-prefixed
// components. Changing any component changes the key.
std::string cache_key(std::string_view question_id, std::string_view source_id,
                      std::string_view prompt_hash, std::string_view judge_model_id);

// Executes a run into config.output_dir:
//   manifest.json  written first, rewritten with final counts at the end
//   records.jsonl  one EvaluationRecord per line, append-only
//   replies/       raw judge replies, one file per cache key
// An existing directory is resumed: pairs that already have a record are
// skipped, and a torn final line is dropped. Records are written in the
// canonical (question, source) order whatever the parallelism.
RunManifest run(const RunConfig& config, const RunHooks& hooks = {});

// Badge table from a run directory (records.jsonl plus manifest source
// order), a records/verdict JSON-lines file, or a joint CSV (by extension).
// Throws DuplicateRecord or MalformedRecord.
BadgeTable load_badge_table(const std::filesystem::path& path);
BadgeTable badge_table_from_records(const std::vector<EvaluationRecord>& records,
                                    const std::vector<std::string>& source_order = {});

// Joint CSV: header "<source>,...,count" (an optional trailing
// "percentage" column is ignored), one row per badge tuple. Expanded into
// synthetic question ids q000001, q000002, ... in row order.
BadgeTable load_joint_csv(const std::filesystem::path& path);
BadgeTable joint_csv_from_string(std::string_view csv);

}  // namespace awe
