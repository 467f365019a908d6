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

#include "awe/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "awe/errors.hpp"

namespace awe {
namespace {

using nlohmann::json;

constexpr std::size_t kMaxSubsetSources = 12;

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += sep;
    out += item;
  }
  return out;
}

std::string pct_cell(std::uint64_t count, std::uint64_t n) {
  return group_thousands(count) + " (" + format_percent(Proportion{count, n}.percent()) + "%)";
}

json proportion_json(const Proportion& p) {
  return {{"count", p.count}, {"n", p.n}, {"value", p.value()}};
}

std::vector<std::string> badge_names(const std::vector<Badge>& tuple) {
  std::vector<std::string> out;
  for (const auto b : tuple) out.emplace_back(to_string(b));
  return out;
}

json summaries_json(const ReportBundle& bundle) {
  json out = json::array();
  for (const auto& s : bundle.summaries) {
    json badges = json::array();
    for (const auto b : kAllBadges) {
      badges.push_back({{"badge", std::string(to_string(b))},
                        {"count", s.counts[badge_index(b)]},
                        {"percentage", std::stod(format_percent(s.share(b).percent()))}});
    }
    out.push_back({{"source", s.source_id}, {"total", s.total}, {"badges", std::move(badges)}});
  }
  return out;
}

json pairs_json(const ReportBundle& bundle) {
  json out = json::array();
  for (const auto& p : bundle.pairs) {
    json cells = json::array();
    for (const auto a : kAllBadges) {
      for (const auto b : kAllBadges) {
        const auto c = p.cell(a, b);
        cells.push_back({{"badge_a", std::string(to_string(a))},
                         {"badge_b", std::string(to_string(b))},
                         {"count", c.count},
                         {"percentage", std::stod(format_percent(c.percent()))}});
      }
    }
    out.push_back({{"source_a", p.source_a},
                   {"source_b", p.source_b},
                   {"n", p.n},
                   {"cells", std::move(cells)},
                   {"row_totals", p.row_totals},
                   {"col_totals", p.col_totals},
                   {"green_concordance", proportion_json(p.green_concordance)},
                   {"yr_group_concordance", proportion_json(p.yr_group_concordance)},
                   {"overall_binarized_agreement", proportion_json(p.overall_binarized_agreement)},
                   {"footer", concordance_footer(p)}});
  }
  return out;
}

json joint_json(const ReportBundle& bundle) {
  if (!bundle.joint) return nullptr;
  json rows = json::array();
  for (const auto& [tuple, count] : bundle.joint->rows_by_name()) {
    rows.push_back({{"badges", badge_names(tuple)},
                    {"count", count},
                    {"percentage", std::stod(format_percent(Proportion{count, bundle.joint->n}.percent()))}});
  }
  return {{"sources", bundle.joint->sources}, {"n", bundle.joint->n}, {"rows", std::move(rows)}};
}

}  // namespace

std::string format_percent(double percent) {
  const double rounded = std::round(percent * 100.0) / 100.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", rounded == 0.0 ? 0.0 : rounded);
  return buf;
}

std::string group_thousands(std::uint64_t value) {
  std::string digits = std::to_string(value);
  for (int i = static_cast<int>(digits.size()) - 3; i > 0; i -= 3) digits.insert(i, ",");
  return digits;
}

std::string concordance_footer(const PairAgreement& p) {
  return "green " + format_percent(p.green_concordance.percent()) + "%, yellow/red " +
         format_percent(p.yr_group_concordance.percent()) + "%, overall " +
         format_percent(p.overall_binarized_agreement.percent()) + "% (n=" + std::to_string(p.n) +
         ")";
}

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::Csv;
  if (name == "md" || name == "markdown") return Format::Markdown;
  if (name == "json") return Format::Json;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (csv, md, json)");
}

ReportBundle build_bundle(const BadgeTable& table, const std::vector<std::string>& selected) {
  ReportBundle bundle;
  bundle.sources = selected.empty() ? table.sources() : selected;
  for (const auto& s : bundle.sources) table.source_index(s);
  const auto& src = bundle.sources;

  for (const auto& s : src) {
    try {
      bundle.summaries.push_back(summarize(table, s));
    } catch (const EmptyIntersection&) {
      bundle.warnings.push_back("source '" + s + "' has no badges (n=0); summary omitted");
    }
  }
  for (std::size_t i = 0; i < src.size(); ++i) {
    for (std::size_t j = i + 1; j < src.size(); ++j) {
      try {
        bundle.pairs.push_back(pair_agreement(table, src[i], src[j]));
      } catch (const EmptyIntersection&) {
        bundle.warnings.push_back("sources '" + src[i] + "' and '" + src[j] +
                                  "' share no questions; agreement omitted");
      }
    }
  }
  if (!src.empty()) {
    try {
      bundle.joint = joint_distribution(table, src);
    } catch (const EmptyIntersection&) {
      bundle.warnings.push_back("no question is badged by every source; joint table omitted");
    }
  }
  if (src.size() >= 2) {
    for (std::size_t i = 0; i < src.size(); ++i) {
      std::vector<std::string> others;
      for (std::size_t j = 0; j < src.size(); ++j) {
        if (j != i) others.push_back(src[j]);
      }
      try {
        const Proportion rate = novelty(table, src[i], others);
        bundle.novelty.push_back({src[i], others, rate});
      } catch (const EmptyIntersection&) {
      }
    }
  }
  if (src.size() <= kMaxSubsetSources) {
    const std::uint32_t full = (1u << src.size()) - 1;
    // Subsets by size, then lexicographically by source position.
    for (std::size_t size = 2; size <= src.size(); ++size) {
      for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != size) continue;
        std::vector<std::string> subset;
        for (std::size_t k = 0; k < src.size(); ++k) {
          if (mask & (1u << k)) subset.push_back(src[k]);
        }
        try {
          const Proportion coverage = union_coverage(table, subset);
          bundle.coverage.push_back({subset, coverage});
        } catch (const EmptyIntersection&) {
        }
      }
    }
  } else {
    bundle.warnings.push_back("more than " + std::to_string(kMaxSubsetSources) +
                              " sources; subset coverage omitted");
  }
  for (const auto& base : src) {
    for (const auto& added : src) {
      if (base == added) continue;
      try {
        const Proportion gain = incremental_gain(table, base, added);
        bundle.gains.push_back({base, added, gain});
      } catch (const EmptyIntersection&) {
      }
    }
  }
  return bundle;
}

Document emit_summary(const ReportBundle& bundle, Format format) {
  Document doc;
  for (const auto& w : bundle.warnings) {
    if (w.find("summary omitted") != std::string::npos) doc.warnings.push_back(w);
  }
  std::ostringstream out;
  switch (format) {
    case Format::Csv:
      out << "source,badge,count,percentage\n";
      for (const auto& s : bundle.summaries) {
        for (const auto b : kAllBadges) {
          out << s.source_id << ',' << to_string(b) << ',' << s.counts[badge_index(b)] << ','
              << format_percent(s.share(b).percent()) << '\n';
        }
        out << s.source_id << ",Total," << s.total << ",100.00\n";
      }
      break;
    case Format::Markdown:
      for (std::size_t i = 0; i < bundle.summaries.size(); ++i) {
        const auto& s = bundle.summaries[i];
        if (i > 0) out << '\n';
        out << "### " << s.source_id << " (n=" << group_thousands(s.total) << ")\n\n";
        out << "| Badge | Count | Percentage |\n|---|---:|---:|\n";
        for (const auto b : kAllBadges) {
          out << "| " << to_string(b) << " | " << group_thousands(s.counts[badge_index(b)])
              << " | " << format_percent(s.share(b).percent()) << " |\n";
        }
        out << "| Total | " << group_thousands(s.total) << " | 100.00 |\n";
      }
      break;
    case Format::Json:
      out << summaries_json(bundle).dump(2) << '\n';
      break;
  }
  doc.text = out.str();
  return doc;
}

Document emit_agreement(const ReportBundle& bundle, Format format) {
  Document doc;
  for (const auto& w : bundle.warnings) {
    if (w.find("agreement omitted") != std::string::npos) doc.warnings.push_back(w);
  }
  std::ostringstream out;
  switch (format) {
    case Format::Csv:
      out << "source_a,source_b,badge_a,badge_b,count,percentage\n";
      for (const auto& p : bundle.pairs) {
        const auto row = [&](std::string_view a, std::string_view b, std::uint64_t count) {
          out << p.source_a << ',' << p.source_b << ',' << a << ',' << b << ',' << count << ','
              << format_percent(Proportion{count, p.n}.percent()) << '\n';
        };
        for (const auto a : kAllBadges) {
          for (const auto b : kAllBadges) {
            row(to_string(a), to_string(b), p.matrix[badge_index(a)][badge_index(b)]);
          }
          row(to_string(a), "Total", p.row_totals[badge_index(a)]);
        }
        for (const auto b : kAllBadges) row("Total", to_string(b), p.col_totals[badge_index(b)]);
        row("Total", "Total", p.n);
      }
      break;
    case Format::Markdown:
      for (std::size_t i = 0; i < bundle.pairs.size(); ++i) {
        const auto& p = bundle.pairs[i];
        if (i > 0) out << '\n';
        out << "### " << p.source_a << " vs " << p.source_b << " (n=" << group_thousands(p.n)
            << ")\n\n";
        out << "| " << p.source_a << " \\ " << p.source_b
            << " | Green | Yellow | Red | Row Total |\n|---|---:|---:|---:|---:|\n";
        for (const auto a : kAllBadges) {
          out << "| " << to_string(a);
          for (const auto b : kAllBadges) {
            out << " | " << pct_cell(p.matrix[badge_index(a)][badge_index(b)], p.n);
          }
          out << " | " << pct_cell(p.row_totals[badge_index(a)], p.n) << " |\n";
        }
        out << "| Col Total";
        for (const auto b : kAllBadges) out << " | " << pct_cell(p.col_totals[badge_index(b)], p.n);
        out << " | " << pct_cell(p.n, p.n) << " |\n\n";
        out << concordance_footer(p) << '\n';
      }
      break;
    case Format::Json:
      out << pairs_json(bundle).dump(2) << '\n';
      break;
  }
  doc.text = out.str();
  return doc;
}

Document emit_joint(const ReportBundle& bundle, Format format) {
  Document doc;
  if (!bundle.joint) {
    doc.warnings.push_back("no question is badged by every source; joint table omitted");
    if (format == Format::Json) doc.text = "null\n";
    return doc;
  }
  const auto& joint = *bundle.joint;
  std::ostringstream out;
  switch (format) {
    case Format::Csv:
      out << join(joint.sources, ",") << ",count,percentage\n";
      for (const auto& [tuple, count] : joint.rows_by_name()) {
        out << join(badge_names(tuple), ",") << ',' << count << ','
            << format_percent(Proportion{count, joint.n}.percent()) << '\n';
      }
      break;
    case Format::Markdown: {
      out << "### Joint distribution: " << join(joint.sources, ", ")
          << " (n=" << group_thousands(joint.n) << ")\n\n| ";
      for (const auto& s : joint.sources) out << s << " | ";
      out << "Total Cases | Percentage of Total |\n|";
      for (std::size_t k = 0; k < joint.sources.size(); ++k) out << "---|";
      out << "---:|---:|\n";
      for (const auto& [tuple, count] : joint.rows_by_name()) {
        out << "| ";
        for (const auto b : tuple) out << to_string(b) << " | ";
        out << group_thousands(count) << " | "
            << format_percent(Proportion{count, joint.n}.percent()) << " |\n";
      }
      out << "| Total |";
      for (std::size_t k = 1; k < joint.sources.size(); ++k) out << " |";
      out << ' ' << group_thousands(joint.n) << " | 100.00 |\n";
      break;
    }
    case Format::Json:
      out << joint_json(bundle).dump(2) << '\n';
      break;
  }
  doc.text = out.str();
  return doc;
}

Document emit_coverage(const ReportBundle& bundle, Format format) {
  struct Row {
    std::string metric;
    std::string sources;
    Proportion p;
  };
  std::vector<Row> rows;
  for (const auto& s : bundle.summaries) rows.push_back({"green_rate", s.source_id, s.share(Badge::Green)});
  for (const auto& c : bundle.coverage) rows.push_back({"union", join(c.sources, "+"), c.coverage});
  for (const auto& n : bundle.novelty) rows.push_back({"novelty", n.source, n.rate});
  for (const auto& g : bundle.gains) {
    rows.push_back({"incremental_gain", "base=" + g.base + ";added=" + g.added, g.gain});
  }

  Document doc;
  std::ostringstream out;
  switch (format) {
    case Format::Csv:
      out << "metric,sources,count,n,percentage\n";
      for (const auto& r : rows) {
        out << r.metric << ',' << r.sources << ',' << r.p.count << ',' << r.p.n << ','
            << format_percent(r.p.percent()) << '\n';
      }
      break;
    case Format::Markdown:
      out << "### Green coverage by source combination\n\n"
          << "| Metric | Sources | Count | n | Percentage |\n|---|---|---:|---:|---:|\n";
      for (const auto& r : rows) {
        out << "| " << r.metric << " | " << r.sources << " | " << group_thousands(r.p.count)
            << " | " << group_thousands(r.p.n) << " | " << format_percent(r.p.percent()) << " |\n";
      }
      break;
    case Format::Json: {
      json arr = json::array();
      for (const auto& r : rows) {
        arr.push_back({{"metric", r.metric},
                       {"sources", r.sources},
                       {"count", r.p.count},
                       {"n", r.p.n},
                       {"percentage", std::stod(format_percent(r.p.percent()))}});
      }
      out << arr.dump(2) << '\n';
      break;
    }
  }
  doc.text = out.str();
  return doc;
}

Document emit_report(const ReportBundle& bundle, Format format) {
  Document doc;
  if (format == Format::Json) {
    const json j = {{"summary", summaries_json(bundle)},
                    {"agreement", pairs_json(bundle)},
                    {"joint", joint_json(bundle)},
                    {"coverage", json::parse(emit_coverage(bundle, format).text)}};
    doc.text = j.dump(2) + "\n";
    doc.warnings = bundle.warnings;
    return doc;
  }
  const Document parts[] = {emit_summary(bundle, format), emit_agreement(bundle, format),
                            emit_joint(bundle, format), emit_coverage(bundle, format)};
  const char* titles[] = {"Badge summary", "Pairwise agreement", "Joint distribution", "Coverage"};
  std::ostringstream out;
  for (std::size_t i = 0; i < std::size(parts); ++i) {
    if (parts[i].text.empty()) continue;
    if (out.tellp() > 0) out << '\n';
    if (format == Format::Markdown) out << "## " << titles[i] << "\n\n";
    out << parts[i].text;
  }
  doc.text = out.str();
  doc.warnings = bundle.warnings;
  return doc;
}

json bundle_to_json(const ReportBundle& bundle) {
  json summaries = json::array();
  for (const auto& s : bundle.summaries) {
    json counts = json::object();
    json fractions = json::object();
    for (const auto b : kAllBadges) {
      counts[std::string(to_string(b))] = s.counts[badge_index(b)];
      fractions[std::string(to_string(b))] = s.share(b).value();
    }
    summaries.push_back({{"source", s.source_id},
                         {"total", s.total},
                         {"counts", std::move(counts)},
                         {"fractions", std::move(fractions)}});
  }
  json pairs = json::array();
  for (const auto& p : bundle.pairs) {
    pairs.push_back({{"source_a", p.source_a},
                     {"source_b", p.source_b},
                     {"n", p.n},
                     {"matrix", p.matrix},
                     {"row_totals", p.row_totals},
                     {"col_totals", p.col_totals},
                     {"green_concordance", proportion_json(p.green_concordance)},
                     {"yr_group_concordance", proportion_json(p.yr_group_concordance)},
                     {"overall_binarized_agreement", proportion_json(p.overall_binarized_agreement)}});
  }
  json joint = nullptr;
  if (bundle.joint) {
    json rows = json::array();
    for (const auto& [tuple, count] : bundle.joint->rows_by_name()) {
      rows.push_back({{"badges", badge_names(tuple)},
                      {"count", count},
                      {"value", Proportion{count, bundle.joint->n}.value()}});
    }
    joint = {{"sources", bundle.joint->sources}, {"n", bundle.joint->n}, {"rows", std::move(rows)}};
  }
  json novelty = json::array();
  for (const auto& n : bundle.novelty) {
    json entry = proportion_json(n.rate);
    entry["source"] = n.source;
    entry["others"] = n.others;
    novelty.push_back(std::move(entry));
  }
  json coverage = json::array();
  for (const auto& c : bundle.coverage) {
    json entry = proportion_json(c.coverage);
    entry["sources"] = c.sources;
    coverage.push_back(std::move(entry));
  }
  json gains = json::array();
  for (const auto& g : bundle.gains) {
    json entry = proportion_json(g.gain);
    entry["base"] = g.base;
    entry["added"] = g.added;
    gains.push_back(std::move(entry));
  }
  return {{"sources", bundle.sources},
          {"summaries", std::move(summaries)},
          {"pairs", std::move(pairs)},
          {"joint", std::move(joint)},
          {"novelty", std::move(novelty)},
          {"union_coverage", std::move(coverage)},
          {"incremental_gain", std::move(gains)},
          {"warnings", bundle.warnings}};
}

}  // namespace awe
