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

#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "awe/badge.hpp"
#include "awe/codec.hpp"
#include "awe/errors.hpp"
#include "awe/pipeline.hpp"
#include "awe/report.hpp"
#include "awe/sampling.hpp"

namespace awe::cli {
namespace {

struct TableInput {
  std::string run_dir;
  std::string joint_csv;
  std::string records;
  std::vector<std::string> sources;

  void add_options(CLI::App* cmd) {
    auto* run = cmd->add_option("--run", run_dir, "Run directory (manifest.json + records.jsonl)");
    auto* joint = cmd->add_option("--joint", joint_csv, "Joint-distribution CSV fixture");
    auto* rec = cmd->add_option("--records", records, "Records or verdicts JSON-lines file");
    run->excludes(joint)->excludes(rec);
    joint->excludes(rec);
    cmd->add_option("--sources", sources, "Sources to analyse, in order (default: all)")
        ->delimiter(',');
  }

  BadgeTable load() const {
    if (!run_dir.empty()) return load_badge_table(run_dir);
    if (!joint_csv.empty()) return load_joint_csv(joint_csv);
    if (!records.empty()) return load_badge_table(records);
    throw ConfigError("one of --run, --joint or --records is required");
  }
};

// Writes to --output when given, otherwise to out.
void deliver(const std::string& text, const std::string& output_path, std::ostream& out) {
  if (output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(output_path, std::ios::binary | std::ios::trunc);
  if (!file) throw ConfigError("cannot write " + output_path);
  file << text;
}

void print_warnings(const std::vector<std::string>& warnings, std::ostream& err) {
  for (const auto& w : warnings) err << "warning: " << w << '\n';
}

int validate_files(const std::vector<std::pair<std::string, std::string>>& items, std::ostream& out,
                   std::ostream& err) {
  int status = kOk;
  for (const auto& [kind, path] : items) {
    try {
      std::size_t count = 0;
      if (kind == "questions") {
        count = read_questions(path).size();
      } else if (kind == "responses") {
        count = read_responses(path).size();
      } else if (kind == "joint") {
        count = load_joint_csv(path).questions().size();
      } else if (kind == "verdicts" || kind == "run") {
        count = load_badge_table(path).cell_count();
      } else if (kind == "config") {
        count = load_run_config(path).sources.size();
      }
      out << "ok " << kind << ' ' << path << " (" << count << ")\n";
    } catch (const Error& e) {
      err << "invalid " << kind << ' ' << path << ": " << e.what() << '\n';
      status = kUserError;
    }
  }
  return status;
}

}  // namespace

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Answered-with-Evidence grading harness: judge runs, badges and agreement reports",
               "awe"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  // run
  auto* run_cmd = app.add_subcommand("run", "Execute (or resume) a run from a config file");
  std::string config_path;
  std::optional<int> par_judge;
  std::optional<int> par_source;
  std::string output_dir;
  run_cmd->add_option("--config", config_path, "Run config (JSON)")->required();
  run_cmd->add_option("--max-parallel-judge", par_judge, "Override max parallel judge calls")
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--max-parallel-source", par_source, "Override max parallel source calls")
      ->check(CLI::PositiveNumber);
  run_cmd->add_option("--output-dir", output_dir, "Override the run's output directory");

  // badge
  auto* badge_cmd = app.add_subcommand("badge", "Assign badges to a verdicts file");
  std::string verdicts_path;
  std::string badge_format = "csv";
  badge_cmd->add_option("--verdicts", verdicts_path, "Verdicts or records JSON-lines file")
      ->required();
  badge_cmd->add_option("--format", badge_format, "csv or jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}));

  // metrics
  auto* metrics_cmd = app.add_subcommand("metrics", "Compute the analytics bundle as JSON");
  TableInput metrics_input;
  std::string metrics_output;
  metrics_input.add_options(metrics_cmd);
  metrics_cmd->add_option("--output", metrics_output, "Write to this file instead of stdout");

  // report
  auto* report_cmd = app.add_subcommand("report", "Render summary/agreement/joint/coverage tables");
  TableInput report_input;
  std::string report_format = "md";
  std::string section = "all";
  std::string report_output;
  report_input.add_options(report_cmd);
  report_cmd->add_option("--format", report_format, "csv, md or json")
      ->check(CLI::IsMember({"csv", "md", "markdown", "json"}));
  report_cmd->add_option("--section", section, "summary, agreement, joint, coverage or all")
      ->check(CLI::IsMember({"summary", "agreement", "joint", "coverage", "all"}));
  report_cmd->add_option("--output", report_output, "Write to this file instead of stdout");

  // sample
  auto* sample_cmd = app.add_subcommand("sample", "Emit a seeded subset of a questions file");
  std::string questions_path;
  std::size_t sample_n = 0;
  std::uint64_t seed = 0;
  sample_cmd->add_option("--questions", questions_path, "Questions JSON-lines file")->required();
  sample_cmd->add_option("--n", sample_n, "Subset size")->required();
  sample_cmd->add_option("--seed", seed, "64-bit seed")->required();

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "Schema-check input files");
  std::vector<std::string> v_questions, v_responses, v_joint, v_verdicts, v_config, v_run;
  validate_cmd->add_option("--questions", v_questions, "Questions file(s)");
  validate_cmd->add_option("--responses", v_responses, "Source response fixture file(s)");
  validate_cmd->add_option("--joint", v_joint, "Joint CSV file(s)");
  validate_cmd->add_option("--verdicts", v_verdicts, "Verdicts/records file(s)");
  validate_cmd->add_option("--config", v_config, "Run config file(s)");
  validate_cmd->add_option("--run", v_run, "Run directory(ies)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUserError;
  }

  try {
    if (run_cmd->parsed()) {
      RunConfig config = load_run_config(config_path);
      if (par_judge) config.max_parallel_judge = *par_judge;
      if (par_source) config.max_parallel_source = *par_source;
      if (!output_dir.empty()) config.output_dir = output_dir;
      const RunManifest manifest = run(config);
      err << "run " << manifest.run_id << ": " << manifest.records << " records ("
          << manifest.cache_hits << " already present, " << manifest.judge_calls
          << " judge calls, " << manifest.judge_failed << " judge failures, "
          << manifest.source_failed << " source failures)\n";
      out << to_json(manifest).dump(2) << '\n';
    } else if (badge_cmd->parsed()) {
      const BadgeTable table = load_badge_table(verdicts_path);
      if (badge_format == "csv") out << "question_id,source_id,badge\n";
      for (std::size_t q = 0; q < table.questions().size(); ++q) {
        for (std::size_t s = 0; s < table.sources().size(); ++s) {
          const auto b = table.at(q, s);
          if (!b) continue;
          if (badge_format == "csv") {
            out << table.questions()[q] << ',' << table.sources()[s] << ',' << to_string(*b) << '\n';
          } else {
            out << to_line({{"question_id", table.questions()[q]},
                            {"source_id", table.sources()[s]},
                            {"badge", std::string(to_string(*b))}})
                << '\n';
          }
        }
      }
    } else if (metrics_cmd->parsed()) {
      const ReportBundle bundle = build_bundle(metrics_input.load(), metrics_input.sources);
      print_warnings(bundle.warnings, err);
      deliver(bundle_to_json(bundle).dump(2) + "\n", metrics_output, out);
    } else if (report_cmd->parsed()) {
      const ReportBundle bundle = build_bundle(report_input.load(), report_input.sources);
      const Format format = parse_format(report_format);
      Document doc;
      if (section == "summary") {
        doc = emit_summary(bundle, format);
      } else if (section == "agreement") {
        doc = emit_agreement(bundle, format);
      } else if (section == "joint") {
        doc = emit_joint(bundle, format);
      } else if (section == "coverage") {
        doc = emit_coverage(bundle, format);
      } else {
        doc = emit_report(bundle, format);
      }
      print_warnings(doc.warnings, err);
      deliver(doc.text, report_output, out);
    } else if (sample_cmd->parsed()) {
      const auto questions = read_questions(questions_path);
      write_questions(out, sample_subset(questions, SampleSpec{sample_n, seed}));
    } else if (validate_cmd->parsed()) {
      std::vector<std::pair<std::string, std::string>> items;
      for (const auto& p : v_questions) items.emplace_back("questions", p);
      for (const auto& p : v_responses) items.emplace_back("responses", p);
      for (const auto& p : v_joint) items.emplace_back("joint", p);
      for (const auto& p : v_verdicts) items.emplace_back("verdicts", p);
      for (const auto& p : v_config) items.emplace_back("config", p);
      for (const auto& p : v_run) items.emplace_back("run", p);
      if (items.empty()) {
        err << "error: validate needs at least one file option\n\n" << validate_cmd->help();
        return kUserError;
      }
      return validate_files(items, out, err);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUserError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUserError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kOk;
}

}  // namespace awe::cli
