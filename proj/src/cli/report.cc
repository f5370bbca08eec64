/*
 * Copyright 2026 The newsrec Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "newsrec/cli/report.h"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "newsrec/core/errors.h"
#include "newsrec/metrics/t_test.h"

namespace newsrec::cli {
namespace {

std::string Fixed(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  return buffer;
}

std::string Cell(const std::optional<double>& value, int digits) { return value ? Fixed(*value, digits) : "NA"; }

// Values of one window for one recommender, in metric column order.
std::vector<std::optional<double>> WindowValues(const std::vector<metrics::MetricsAccumulator>& accumulators,
                                                std::size_t largest, std::int64_t recommendable) {
  std::vector<std::optional<double>> values;
  for (const auto& acc : accumulators) {
    values.push_back(acc.hit_rate());
    values.push_back(acc.mrr());
  }
  const auto& top = accumulators[largest];
  values.push_back(top.count() > 0 && recommendable > 0 ? std::optional(top.Coverage(recommendable)) : std::nullopt);
  values.push_back(top.esi_r());
  return values;
}

void Open(std::ofstream& out, const std::filesystem::path& path) {
  out.open(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace

Report BuildReport(const std::vector<std::string>& recommenders, const std::vector<std::size_t>& cutoffs,
                   const std::vector<eval::WindowResult>& windows, const nlohmann::json& dataset) {
  if (recommenders.empty() || cutoffs.empty()) throw DataError("report needs recommenders and cutoffs");
  Report report;
  report.recommenders = recommenders;
  report.dataset = dataset;
  const std::size_t largest =
      static_cast<std::size_t>(std::max_element(cutoffs.begin(), cutoffs.end()) - cutoffs.begin());
  for (const std::size_t n : cutoffs) {
    report.metrics.push_back("HR@" + std::to_string(n));
    report.metrics.push_back("MRR@" + std::to_string(n));
  }
  report.metrics.push_back("COV@" + std::to_string(cutoffs[largest]));
  report.metrics.push_back("ESI-R@" + std::to_string(cutoffs[largest]));

  const std::size_t n_rec = recommenders.size();
  const std::size_t n_metric = report.metrics.size();
  for (const eval::WindowResult& window : windows) {
    if (window.metrics.size() != n_rec) throw DataError("window " + std::to_string(window.window) + " has the wrong recommender count");
    Report::WindowRow row{window.window, window.hour, window.recommendable, {}, {}};
    for (const auto& accumulators : window.metrics) {
      if (accumulators.size() != cutoffs.size()) throw DataError("window " + std::to_string(window.window) + " has the wrong cutoff count");
      row.predictions.push_back(accumulators[largest].count());
      row.values.push_back(WindowValues(accumulators, largest, window.recommendable));
    }
    report.windows.push_back(std::move(row));
  }

  report.predictions.assign(n_rec, 0);
  report.aggregate.assign(n_rec, std::vector<std::optional<double>>(n_metric));
  for (std::size_t r = 0; r < n_rec; ++r) {
    for (const auto& row : report.windows) report.predictions[r] += row.predictions[r];
    for (std::size_t m = 0; m < n_metric; ++m) {
      double sum = 0.0;
      std::size_t count = 0;
      for (const auto& row : report.windows) {
        if (row.values[r][m]) {
          sum += *row.values[r][m];
          ++count;
        }
      }
      if (count > 0) report.aggregate[r][m] = sum / static_cast<double>(count);
    }
  }

  const int comparisons = static_cast<int>(n_rec) - 1;
  report.best.assign(n_metric, std::nullopt);
  report.starred.assign(n_metric, false);
  for (std::size_t m = 0; m < n_metric; ++m) {
    for (std::size_t r = 0; r < n_rec; ++r) {
      if (report.aggregate[r][m] && (!report.best[m] || *report.aggregate[r][m] > *report.aggregate[*report.best[m]][m])) {
        report.best[m] = r;
      }
    }
    if (!report.best[m] || comparisons == 0) continue;
    const std::size_t b = *report.best[m];
    bool all_significant = true;
    for (std::size_t r = 0; r < n_rec; ++r) {
      if (r == b) continue;
      std::vector<double> ours;
      std::vector<double> theirs;
      for (const auto& row : report.windows) {
        if (row.values[b][m] && row.values[r][m]) {
          ours.push_back(*row.values[b][m]);
          theirs.push_back(*row.values[r][m]);
        }
      }
      Comparison c{m, b, r, std::nullopt, 0, std::nullopt, false};
      if (ours.size() >= 2) {
        const metrics::TTestResult test = metrics::PairedTTest(ours, theirs, kSignificanceAlpha, comparisons);
        c.t = test.t;
        c.df = test.df;
        c.p_value = test.p_value;
        c.significant = test.significant;
      }
      all_significant = all_significant && c.significant;
      report.comparisons.push_back(c);
    }
    report.starred[m] = all_significant;
  }
  return report;
}

void WriteReportTsv(std::ostream& out, const Report& report) {
  out << "recommender";
  for (const auto& metric : report.metrics) out << '\t' << metric;
  out << "\tn_predictions\n";
  for (std::size_t r = 0; r < report.recommenders.size(); ++r) {
    out << report.recommenders[r];
    for (const auto& value : report.aggregate[r]) out << '\t' << Cell(value, 6);
    out << '\t' << report.predictions[r] << '\n';
  }
}

void WriteReportText(std::ostream& out, const Report& report) {
  const auto& d = report.dataset;
  if (d.is_object()) {
    out << "dataset: " << d.value("users", 0) << " users, " << d.value("sessions", 0) << " sessions, "
        << d.value("clicks", 0) << " clicks, " << d.value("articles", 0) << " articles, avg session length "
        << Fixed(d.value("avg_session_length", 0.0), 2) << '\n';
  }
  out << "windows: " << report.windows.size() << '\n' << '\n';

  std::vector<std::vector<std::string>> table;
  std::vector<std::string> header = {"recommender"};
  header.insert(header.end(), report.metrics.begin(), report.metrics.end());
  header.push_back("n_predictions");
  table.push_back(header);
  for (std::size_t r = 0; r < report.recommenders.size(); ++r) {
    std::vector<std::string> row = {report.recommenders[r]};
    for (std::size_t m = 0; m < report.metrics.size(); ++m) {
      std::string cell = Cell(report.aggregate[r][m], 4);
      if (report.best[m] == r) cell = "[" + cell + "]" + (report.starred[m] ? "*" : "");
      row.push_back(cell);
    }
    row.push_back(std::to_string(report.predictions[r]));
    table.push_back(row);
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : table) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : table) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c == 0) {
        out << row[c] << std::string(width[c] - row[c].size(), ' ');
      } else {
        out << "  " << std::string(width[c] - row[c].size(), ' ') << row[c];
      }
    }
    out << '\n';
  }
  out << '\n'
      << "[x] best in column; * the best differs from every other recommender at p < "
      << kSignificanceAlpha << "/" << (report.recommenders.size() > 1 ? report.recommenders.size() - 1 : 1)
      << " (paired t-test over windows)\n"
      << "aggregates are unweighted means over evaluation windows\n";
}

void WriteWindowsTsv(std::ostream& out, const Report& report) {
  out << "window\thour\trecommendable\trecommender\tn_predictions";
  for (const auto& metric : report.metrics) out << '\t' << metric;
  out << '\n';
  for (const auto& row : report.windows) {
    for (std::size_t r = 0; r < report.recommenders.size(); ++r) {
      out << row.window << '\t' << row.hour << '\t' << row.recommendable << '\t' << report.recommenders[r] << '\t'
          << row.predictions[r];
      for (const auto& value : row.values[r]) out << '\t' << Cell(value, 6);
      out << '\n';
    }
  }
}

void WriteSignificanceTsv(std::ostream& out, const Report& report) {
  out << "metric\tbest\tother\tt\tdf\tp_value\tsignificant\n";
  for (const Comparison& c : report.comparisons) {
    char p[64] = "NA";
    if (c.p_value) std::snprintf(p, sizeof(p), "%.6g", *c.p_value);
    out << report.metrics[c.metric] << '\t' << report.recommenders[c.best] << '\t' << report.recommenders[c.other]
        << '\t' << Cell(c.t, 4) << '\t' << c.df << '\t' << p << '\t' << (c.significant ? "yes" : "no") << '\n';
  }
}

void WriteReportFiles(const Report& report, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::ofstream out;
  Open(out, dir / "report.tsv");
  WriteReportTsv(out, report);
  out.close();
  Open(out, dir / "report.txt");
  WriteReportText(out, report);
  out.close();
  Open(out, dir / "windows.tsv");
  WriteWindowsTsv(out, report);
  out.close();
  Open(out, dir / "significance.tsv");
  WriteSignificanceTsv(out, report);
}

}  // namespace newsrec::cli
