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

#include "awe/pipeline.hpp"

#include <algorithm>
#include <condition_variable>
#include <exception>
#include <fstream>
#include <mutex>
#include <semaphore>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

#include <fmt/format.h>

#include "awe/badge.hpp"
#include "awe/codec.hpp"
#include "awe/errors.hpp"
#include "awe/hash.hpp"

namespace awe {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

constexpr const char* kManifestFile = "manifest.json";
constexpr const char* kRecordsFile = "records.jsonl";
constexpr const char* kRepliesDir = "replies";

// --- config parsing --------------------------------------------------------

void check_keys(const json& j, std::initializer_list<std::string_view> allowed,
                const std::string& where) {
  for (const auto& [key, _] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ConfigError(where + ": unexpected field \"" + key + "\"");
    }
  }
}

template <typename T>
T get_or(const json& j, const char* key, T fallback, const std::string& where) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return fallback;
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw ConfigError(where + ": field \"" + key + "\" has the wrong type");
  }
}

std::string get_required(const json& j, const char* key, const std::string& where) {
  const auto it = j.find(key);
  if (it == j.end() || !it->is_string() || it->get<std::string>().empty()) {
    throw ConfigError(where + ": missing string field \"" + key + "\"");
  }
  return it->get<std::string>();
}

fs::path resolve(const fs::path& base, const std::string& p) {
  const fs::path path(p);
  return path.is_absolute() ? path : base / path;
}

std::chrono::milliseconds seconds_field(const json& j, const char* key,
                                        std::chrono::milliseconds fallback,
                                        const std::string& where) {
  const double secs = get_or<double>(j, key, fallback.count() / 1000.0, where);
  if (secs <= 0) throw ConfigError(where + ": \"" + key + "\" must be positive");
  return std::chrono::milliseconds(static_cast<std::int64_t>(secs * 1000.0));
}

SourceConfig source_from_json(const json& j, const fs::path& base, std::size_t index) {
  std::string where = "sources[" + std::to_string(index) + "]";
  if (!j.is_object()) throw ConfigError(where + ": expected an object");
  SourceConfig s;
  s.source_id = get_required(j, "source_id", where);
  where += " (" + s.source_id + ")";
  const std::string kind = get_required(j, "kind", where);
  s.max_concurrency = get_or<int>(j, "max_concurrency", 4, where);
  s.max_attempts = get_or<int>(j, "max_attempts", 2, where);
  if (s.max_concurrency < 1) throw ConfigError(where + ": max_concurrency must be >= 1");
  if (s.max_attempts < 1) throw ConfigError(where + ": max_attempts must be >= 1");
  if (kind == "fixture") {
    check_keys(j, {"source_id", "kind", "path", "max_concurrency", "max_attempts"}, where);
    s.spec = FixtureSourceSpec{resolve(base, get_required(j, "path", where))};
  } else if (kind == "http") {
    check_keys(j,
               {"source_id", "kind", "endpoint", "request_template", "credential_env",
                "answer_path", "context_path", "doc_id_field", "text_field", "timeout_seconds",
                "max_concurrency", "max_attempts"},
               where);
    HttpSourceSpec h;
    h.endpoint = get_required(j, "endpoint", where);
    h.request_template = get_required(j, "request_template", where);
    h.credential_env = get_or<std::string>(j, "credential_env", "", where);
    h.answer_path = get_or<std::string>(j, "answer_path", h.answer_path, where);
    h.context_path = get_or<std::string>(j, "context_path", h.context_path, where);
    h.doc_id_field = get_or<std::string>(j, "doc_id_field", h.doc_id_field, where);
    h.text_field = get_or<std::string>(j, "text_field", h.text_field, where);
    h.timeout = seconds_field(j, "timeout_seconds", h.timeout, where);
    s.spec = std::move(h);
  } else {
    throw ConfigError(where + ": unknown kind '" + kind + "' (expected fixture or http)");
  }
  return s;
}

json source_to_json(const SourceConfig& s) {
  json j = {{"source_id", s.source_id},
            {"max_concurrency", s.max_concurrency},
            {"max_attempts", s.max_attempts}};
  if (const auto* f = std::get_if<FixtureSourceSpec>(&s.spec)) {
    j["kind"] = "fixture";
    j["path"] = f->path.string();
  } else {
    const auto& h = std::get<HttpSourceSpec>(s.spec);
    j["kind"] = "http";
    j["endpoint"] = h.endpoint;
    j["request_template"] = h.request_template;
    j["credential_env"] = h.credential_env;
    j["answer_path"] = h.answer_path;
    j["context_path"] = h.context_path;
    j["doc_id_field"] = h.doc_id_field;
    j["text_field"] = h.text_field;
    j["timeout_seconds"] = h.timeout.count() / 1000.0;
  }
  return j;
}

// --- store helpers ---------------------------------------------------------

void write_atomically(const fs::path& path, const std::string& content) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << content;
  }
  fs::rename(tmp, path);
}

// Drops a torn final line left by an interrupted writer so the store ends
// on a line boundary.
void repair_tail(const fs::path& path) {
  if (!fs::exists(path)) return;
  std::string content;
  {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    content = ss.str();
  }
  if (content.empty() || content.back() == '\n') return;
  const auto last_nl = content.rfind('\n');
  const std::size_t keep = last_nl == std::string::npos ? 0 : last_nl + 1;
  const json tail = json::parse(content.substr(keep), nullptr, false);
  if (!tail.is_discarded()) {
    std::ofstream(path, std::ios::binary | std::ios::app) << '\n';
    return;
  }
  fs::resize_file(path, keep);
}

struct PairKey {
  std::string question_id;
  std::string source_id;
  auto operator<=>(const PairKey&) const = default;
};

struct WorkItem {
  std::size_t question;
  std::size_t source;
};

struct WorkResult {
  JudgeOutcome outcome;
  bool ok = false;
};

SourceResponse fetch_with_retry(const SourceAdapter& adapter, const SourceConfig& config,
                                const Question& question) {
  for (int attempt = 1; attempt <= config.max_attempts; ++attempt) {
    try {
      return adapter.fetch(question);
    } catch (const MissingFixture&) {
      break;
    } catch (const TransportError&) {
    }
  }
  SourceResponse failed;
  failed.question_id = question.id;
  failed.source_id = config.source_id;
  failed.source_failed = true;
  return failed;
}

}  // namespace

// --- config ----------------------------------------------------------------

RunConfig run_config_from_json(const json& j, const fs::path& base_dir) {
  const std::string where = "run config";
  if (!j.is_object()) throw ConfigError(where + ": expected a JSON object");
  check_keys(j,
             {"run_id", "questions", "output_dir", "judge", "sources", "samples",
              "max_parallel_judge", "max_parallel_source"},
             where);
  RunConfig c;
  c.run_id = get_required(j, "run_id", where);
  c.questions_path = resolve(base_dir, get_required(j, "questions", where));
  c.output_dir = resolve(base_dir, get_required(j, "output_dir", where));
  c.max_parallel_judge = get_or<int>(j, "max_parallel_judge", 4, where);
  c.max_parallel_source = get_or<int>(j, "max_parallel_source", 4, where);
  if (c.max_parallel_judge < 1 || c.max_parallel_source < 1) {
    throw ConfigError(where + ": parallelism limits must be >= 1");
  }

  const auto judge_it = j.find("judge");
  if (judge_it == j.end() || !judge_it->is_object()) throw ConfigError(where + ": missing \"judge\"");
  const json& jj = *judge_it;
  check_keys(jj, {"backend", "model", "endpoint", "max_attempts", "timeout_seconds"}, "judge");
  c.judge.backend_id = get_or<std::string>(jj, "backend", c.judge.backend_id, "judge");
  c.judge.model_id = get_or<std::string>(jj, "model", c.judge.model_id, "judge");
  c.judge.endpoint = get_or<std::string>(jj, "endpoint", "", "judge");
  c.judge.max_attempts = get_or<int>(jj, "max_attempts", 3, "judge");
  c.judge.request_timeout = seconds_field(jj, "timeout_seconds", c.judge.request_timeout, "judge");
  if (c.judge.max_attempts < 1) throw ConfigError("judge: max_attempts must be >= 1");

  const auto sources_it = j.find("sources");
  if (sources_it == j.end() || !sources_it->is_array() || sources_it->empty()) {
    throw ConfigError(where + ": \"sources\" must be a non-empty array");
  }
  std::set<std::string> ids;
  for (std::size_t i = 0; i < sources_it->size(); ++i) {
    SourceConfig s = source_from_json((*sources_it)[i], base_dir, i);
    if (!ids.insert(s.source_id).second) {
      throw ConfigError(where + ": duplicate source_id '" + s.source_id + "'");
    }
    c.sources.push_back(std::move(s));
  }

  if (const auto it = j.find("samples"); it != j.end() && !it->is_null()) {
    if (!it->is_object()) throw ConfigError(where + ": \"samples\" must be an object");
    for (const auto& [source, spec] : it->items()) {
      if (!ids.contains(source)) {
        throw ConfigError(where + ": sample for unknown source '" + source + "'");
      }
      const std::string w = "samples." + source;
      const auto n = get_or<std::int64_t>(spec, "n", -1, w);
      if (n < 0) throw ConfigError(w + ": \"n\" must be a non-negative integer");
      c.samples[source] = SampleSpec{static_cast<std::size_t>(n),
                                     get_or<std::uint64_t>(spec, "seed", 0, w)};
    }
  }
  return c;
}

RunConfig load_run_config(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open run config " + path.string());
  const json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw ConfigError(path.string() + ": invalid JSON");
  return run_config_from_json(j, path.parent_path());
}

json to_json(const RunConfig& c) {
  json sources = json::array();
  for (const auto& s : c.sources) sources.push_back(source_to_json(s));
  json samples = json::object();
  for (const auto& [id, spec] : c.samples) samples[id] = {{"n", spec.n}, {"seed", spec.seed}};
  return {{"run_id", c.run_id},
          {"questions", c.questions_path.string()},
          {"output_dir", c.output_dir.string()},
          {"judge",
           {{"backend", c.judge.backend_id},
            {"model", c.judge.model_id},
            {"endpoint", c.judge.endpoint},
            {"max_attempts", c.judge.max_attempts},
            {"timeout_seconds", c.judge.request_timeout.count() / 1000.0}}},
          {"sources", std::move(sources)},
          {"samples", std::move(samples)},
          {"max_parallel_judge", c.max_parallel_judge},
          {"max_parallel_source", c.max_parallel_source}};
}

json to_json(const RunManifest& m) {
  return {{"run_id", m.run_id},
          {"config", m.config_snapshot},
          {"prompt_hash", m.prompt_hash},
          {"judge_model_id", m.judge_model_id},
          {"sources", m.sources},
          {"question_counts", m.question_counts},
          {"started_at", m.started_at},
          {"finished_at", m.finished_at.empty() ? json(nullptr) : json(m.finished_at)},
          {"records", m.records},
          {"judge_failed", m.judge_failed},
          {"source_failed", m.source_failed},
          {"last_invocation", {{"cache_hits", m.cache_hits}, {"judge_calls", m.judge_calls}}}};
}

RunManifest manifest_from_json(const json& j) {
  RunManifest m;
  try {
    m.run_id = j.at("run_id").get<std::string>();
    m.config_snapshot = j.value("config", json::object());
    m.prompt_hash = j.at("prompt_hash").get<std::string>();
    m.judge_model_id = j.at("judge_model_id").get<std::string>();
    m.sources = j.value("sources", std::vector<std::string>{});
    m.question_counts = j.value("question_counts", std::map<std::string, std::uint64_t>{});
    m.started_at = j.value("started_at", std::string{});
    if (const auto it = j.find("finished_at"); it != j.end() && it->is_string()) {
      m.finished_at = it->get<std::string>();
    }
    m.records = j.value("records", std::uint64_t{0});
    m.judge_failed = j.value("judge_failed", std::uint64_t{0});
    m.source_failed = j.value("source_failed", std::uint64_t{0});
    if (const auto it = j.find("last_invocation"); it != j.end() && it->is_object()) {
      m.cache_hits = it->value("cache_hits", std::uint64_t{0});
      m.judge_calls = it->value("judge_calls", std::uint64_t{0});
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed manifest: ") + e.what());
  }
  return m;
}

std::string cache_key(std::string_view question_id, std::string_view source_id,
                      std::string_view prompt_hash, std::string_view judge_model_id) {
  std::string material;
  for (const auto part : {question_id, source_id, prompt_hash, judge_model_id}) {
    if (part.empty()) throw std::invalid_argument("cache_key components must be non-empty");
    material += std::to_string(part.size());
    material += ':';
    material += part;
    material += '|';
  }
  return sha256_hex(material);
}

// --- run -------------------------------------------------------------------

RunManifest run(const RunConfig& config, const RunHooks& hooks) {
  const auto clock = hooks.clock ? hooks.clock : [] { return std::chrono::system_clock::now(); };
  if (config.max_parallel_judge < 1 || config.max_parallel_source < 1) {
    throw ConfigError("parallelism limits must be >= 1");
  }
  if (config.judge.max_attempts < 1) throw ConfigError("judge max_attempts must be >= 1");

  // Pre-flight: everything that can fail for configuration reasons.
  const std::vector<Question> questions = read_questions(config.questions_path);
  std::shared_ptr<CompletionBackend> backend =
      hooks.backend ? hooks.backend : make_backend(config.judge);

  std::vector<std::shared_ptr<SourceAdapter>> adapters;
  std::vector<std::vector<bool>> in_scope;  // [source][question]
  for (const auto& sc : config.sources) {
    if (const auto it = hooks.sources.find(sc.source_id); it != hooks.sources.end()) {
      adapters.push_back(it->second);
    } else {
      adapters.push_back(make_source(sc));
    }
    std::vector<bool> scope(questions.size(), true);
    if (const auto it = config.samples.find(sc.source_id); it != config.samples.end()) {
      std::fill(scope.begin(), scope.end(), false);
      for (const auto i : sample_indices(questions.size(), it->second)) scope[i] = true;
    }
    in_scope.push_back(std::move(scope));
  }
  for (const auto& [id, _] : config.samples) {
    const bool known = std::any_of(config.sources.begin(), config.sources.end(),
                                   [&](const SourceConfig& s) { return s.source_id == id; });
    if (!known) throw ConfigError("sample for unknown source '" + id + "'");
  }

  fs::create_directories(config.output_dir / kRepliesDir);
  const fs::path manifest_path = config.output_dir / kManifestFile;
  const fs::path records_path = config.output_dir / kRecordsFile;

  RunManifest manifest;
  manifest.run_id = config.run_id;
  manifest.config_snapshot = to_json(config);
  manifest.prompt_hash = prompt_template_hash();
  manifest.judge_model_id = config.judge.model_id;
  for (const auto& sc : config.sources) manifest.sources.push_back(sc.source_id);
  manifest.started_at = iso8601_utc(clock());

  if (fs::exists(manifest_path)) {
    std::ifstream in(manifest_path, std::ios::binary);
    const json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw ConfigError(manifest_path.string() + ": invalid JSON");
    const RunManifest previous = manifest_from_json(j);
    if (previous.run_id != manifest.run_id) {
      throw ConfigError("output directory belongs to run '" + previous.run_id + "'");
    }
    if (previous.judge_model_id != manifest.judge_model_id ||
        previous.prompt_hash != manifest.prompt_hash) {
      throw ConfigError("output directory was produced with a different judge model or prompt; "
                        "use a new output directory");
    }
    manifest.started_at = previous.started_at;
  }

  // Existing records: the resume set.
  repair_tail(records_path);
  std::set<PairKey> done;
  std::vector<EvaluationRecord> existing;
  if (fs::exists(records_path)) existing = read_records(records_path);
  for (const auto& r : existing) {
    if (!done.insert({r.question_id, r.source_id}).second) {
      throw DuplicateRecord("store already holds (" + r.question_id + ", " + r.source_id + ")");
    }
  }

  std::vector<WorkItem> work;
  std::uint64_t in_scope_pairs = 0;
  for (std::size_t q = 0; q < questions.size(); ++q) {
    for (std::size_t s = 0; s < config.sources.size(); ++s) {
      if (!in_scope[s][q]) continue;
      ++in_scope_pairs;
      ++manifest.question_counts[config.sources[s].source_id];
      if (!done.contains({questions[q].id, config.sources[s].source_id})) work.push_back({q, s});
    }
  }
  if (done.size() + work.size() != in_scope_pairs) {
    throw ConfigError("record store holds pairs outside the configured scope");
  }
  manifest.cache_hits = done.size();

  write_atomically(manifest_path, to_json(manifest).dump(2) + "\n");

  // Workers fetch and judge; this thread is the only writer and appends
  // results in work-list order as soon as each prefix is complete.
  std::counting_semaphore<> source_slots(config.max_parallel_source);
  std::counting_semaphore<> judge_slots(config.max_parallel_judge);
  std::vector<std::unique_ptr<std::counting_semaphore<>>> per_source;
  for (const auto& sc : config.sources) {
    per_source.push_back(std::make_unique<std::counting_semaphore<>>(sc.max_concurrency));
  }

  std::vector<std::optional<WorkResult>> results(work.size());
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};
  std::exception_ptr first_error;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= work.size()) return;
      const auto [q, s] = work[i];
      WorkResult result;
      if (abort.load()) {
        {
          std::lock_guard lock(mu);
          results[i] = std::move(result);
        }
        ready.notify_all();
        continue;
      }
      try {
        SourceResponse response;
        {
          source_slots.acquire();
          per_source[s]->acquire();
          try {
            response = fetch_with_retry(*adapters[s], config.sources[s], questions[q]);
          } catch (...) {
            per_source[s]->release();
            source_slots.release();
            throw;
          }
          per_source[s]->release();
          source_slots.release();
        }
        judge_slots.acquire();
        try {
          result.outcome = judge_one_detailed(response, questions[q], config.judge, *backend);
        } catch (...) {
          judge_slots.release();
          throw;
        }
        judge_slots.release();
        auto& record = result.outcome.record;
        record.cache_key = cache_key(record.question_id, record.source_id,
                                     record.judge_meta.prompt_hash, record.judge_meta.judge_model_id);
        record.evaluated_at = iso8601_utc(clock());
        result.ok = true;
      } catch (...) {
        std::lock_guard lock(mu);
        if (!first_error) first_error = std::current_exception();
        abort.store(true);
      }
      {
        std::lock_guard lock(mu);
        results[i] = std::move(result);
      }
      ready.notify_all();
    }
  };

  const std::size_t thread_count = std::min<std::size_t>(
      work.size(),
      static_cast<std::size_t>(std::max(config.max_parallel_judge, config.max_parallel_source)));
  std::vector<std::jthread> threads;
  threads.reserve(thread_count);
  for (std::size_t t = 0; t < thread_count; ++t) threads.emplace_back(worker);

  bool failed = false;
  {
    std::ofstream store(records_path, std::ios::binary | std::ios::app);
    if (!store) throw Error("cannot open " + records_path.string());
    for (std::size_t i = 0; i < work.size(); ++i) {
      WorkResult result;
      {
        std::unique_lock lock(mu);
        ready.wait(lock, [&] { return results[i].has_value(); });
        result = std::move(*results[i]);
        results[i].reset();
      }
      if (!result.ok) {
        failed = true;
        break;
      }
      const auto& outcome = result.outcome;
      manifest.judge_calls += outcome.backend_calls;
      const json replies = {{"cache_key", outcome.record.cache_key},
                            {"question_id", outcome.record.question_id},
                            {"source_id", outcome.record.source_id},
                            {"judge_model_id", outcome.record.judge_meta.judge_model_id},
                            {"prompt_hash", outcome.record.judge_meta.prompt_hash},
                            {"replies", outcome.replies}};
      write_atomically(config.output_dir / kRepliesDir / (outcome.record.cache_key + ".json"),
                       replies.dump(2) + "\n");
      store << to_line(to_json(outcome.record)) << '\n';
      store.flush();
      existing.push_back(outcome.record);
    }
  }
  abort.store(failed);
  threads.clear();
  if (failed) std::rethrow_exception(first_error);

  manifest.records = existing.size();
  manifest.judge_failed = static_cast<std::uint64_t>(std::count_if(
      existing.begin(), existing.end(),
      [](const EvaluationRecord& r) { return r.judge_meta.judge_failed; }));
  manifest.source_failed = static_cast<std::uint64_t>(std::count_if(
      existing.begin(), existing.end(), [](const EvaluationRecord& r) { return r.source_failed; }));
  manifest.finished_at = iso8601_utc(clock());
  write_atomically(manifest_path, to_json(manifest).dump(2) + "\n");
  return manifest;
}

// --- loading ---------------------------------------------------------------

BadgeTable badge_table_from_records(const std::vector<EvaluationRecord>& records,
                                    const std::vector<std::string>& source_order) {
  BadgeTable table(source_order);
  for (const auto& r : records) table.set(r.question_id, r.source_id, badge_of_record(r));
  return table;
}

namespace {

// A line of a records or verdicts file: full EvaluationRecord when it has a
// judge_meta block, otherwise (question_id, source_id) plus a verdict in any
// shape parse_verdict accepts.
std::pair<PairKey, Badge> badge_line(const json& j) {
  if (j.contains("judge_meta")) {
    const EvaluationRecord r = record_from_json(j);
    if (!badge_consistent(r)) {
      throw std::invalid_argument("badge " + std::string(to_string(r.badge)) +
                                  " does not match the recorded verdict");
    }
    return {{r.question_id, r.source_id}, badge_of_record(r)};
  }
  const auto qid = j.find("question_id");
  const auto sid = j.find("source_id");
  if (qid == j.end() || !qid->is_string() || sid == j.end() || !sid->is_string()) {
    throw std::invalid_argument("missing question_id/source_id");
  }
  const json& verdict = j.contains("verdict") ? j.at("verdict") : j;
  CriteriaVerdict v;
  try {
    v = parse_verdict(RawJudgeReply{verdict.dump()});
  } catch (const ParseError& e) {
    throw std::invalid_argument(e.what());
  }
  return {{qid->get<std::string>(), sid->get<std::string>()}, assign_badge(v)};
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> cells;
  std::string current;
  for (const char c : line) {
    if (c == ',') {
      cells.push_back(std::move(current));
      current.clear();
    } else if (c != '\r') {
      current.push_back(c);
    }
  }
  cells.push_back(std::move(current));
  for (auto& cell : cells) {
    const auto b = cell.find_first_not_of(" \t");
    const auto e = cell.find_last_not_of(" \t");
    cell = b == std::string::npos ? std::string{} : cell.substr(b, e - b + 1);
  }
  return cells;
}

}  // namespace

BadgeTable joint_csv_from_string(std::string_view csv) {
  std::istringstream in{std::string(csv)};
  std::string line;
  std::size_t number = 0;
  std::vector<std::string> sources;
  bool has_percentage = false;
  BadgeTable table;
  std::uint64_t next_id = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto cells = split_csv_line(line);
    if (sources.empty()) {
      has_percentage = !cells.empty() && cells.back() == "percentage";
      if (has_percentage) cells.pop_back();
      if (cells.size() < 2 || cells.back() != "count") {
        throw MalformedRecord(number, "joint CSV header must be <source>...,count[,percentage]");
      }
      cells.pop_back();
      std::set<std::string> unique(cells.begin(), cells.end());
      if (unique.size() != cells.size() || unique.contains("")) {
        throw MalformedRecord(number, "joint CSV header has empty or repeated source names");
      }
      sources = cells;
      table = BadgeTable(sources);
      continue;
    }
    const std::size_t expected = sources.size() + 1 + (has_percentage ? 1 : 0);
    if (cells.size() != expected) {
      throw MalformedRecord(number, "expected " + std::to_string(expected) + " columns, got " +
                                        std::to_string(cells.size()));
    }
    std::vector<Badge> tuple;
    for (std::size_t k = 0; k < sources.size(); ++k) {
      const auto b = parse_badge(cells[k]);
      if (!b) throw MalformedRecord(number, "not a badge: '" + cells[k] + "'");
      tuple.push_back(*b);
    }
    const std::string& count_text = cells[sources.size()];
    if (count_text.empty() ||
        count_text.find_first_not_of("0123456789") != std::string::npos) {
      throw MalformedRecord(number, "count must be a non-negative integer: '" + count_text + "'");
    }
    const std::uint64_t count = std::stoull(count_text);
    for (std::uint64_t c = 0; c < count; ++c) {
      const std::string qid = fmt::format("q{:06d}", ++next_id);
      for (std::size_t k = 0; k < sources.size(); ++k) table.set(qid, sources[k], tuple[k]);
    }
  }
  if (sources.empty()) throw MalformedRecord(number, "joint CSV is empty");
  return table;
}

BadgeTable load_joint_csv(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return joint_csv_from_string(ss.str());
  } catch (const MalformedRecord& e) {
    throw MalformedRecord(e.line(), path.string() + ": " +
                                        std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
  }
}

BadgeTable load_badge_table(const fs::path& path) {
  if (!fs::exists(path)) throw ConfigError("no such file or directory: " + path.string());
  fs::path records = path;
  std::vector<std::string> order;
  if (fs::is_directory(path)) {
    records = path / kRecordsFile;
    const fs::path manifest = path / kManifestFile;
    if (fs::exists(manifest)) {
      std::ifstream in(manifest, std::ios::binary);
      const json j = json::parse(in, nullptr, false);
      if (!j.is_discarded()) order = manifest_from_json(j).sources;
    }
    if (!fs::exists(records)) throw ConfigError("run directory has no " + std::string(kRecordsFile));
  } else if (path.extension() == ".csv") {
    return load_joint_csv(path);
  }
  BadgeTable table(order);
  for_each_jsonl(records, [&](std::size_t line, const json& j) {
    const auto [key, badge] = badge_line(j);
    try {
      table.set(key.question_id, key.source_id, badge);
    } catch (const DuplicateRecord&) {
      throw DuplicateRecord(records.string() + ": line " + std::to_string(line) +
                            ": duplicate record for (" + key.question_id + ", " + key.source_id + ")");
    }
  });
  return table;
}

}  // namespace awe
