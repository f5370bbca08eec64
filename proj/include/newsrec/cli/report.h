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

#ifndef NEWSREC_CLI_REPORT_H_
#define NEWSREC_CLI_REPORT_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "newsrec/eval/protocol.h"

namespace newsrec::cli {

// Significance level before the Bonferroni split over the roster.
inline constexpr double kSignificanceAlpha = 0.001;

struct Comparison {
  std::size_t metric = 0;
  std::size_t best = 0;
  std::size_t other = 0;
  std::optional<double> t;
  int df = 0;
  std::optional<double> p_value;  // empty with fewer than two paired windows
  bool significant = false;
};

// Aggregate table, per-window series and significance of the best
// recommender per metric. Built only from window accumulators, so a live
// run and a replay of its records give the same report.
struct Report {
  std::vector<std::string> recommenders;
  std::vector<std::string> metrics;  // HR@n, MRR@n per cutoff, then COV and ESI-R at the largest cutoff
  struct WindowRow {
    int window = 0;
    int hour = 0;
    std::int64_t recommendable = 0;
    std::vector<std::int64_t> predictions;                  // [recommender]
    std::vector<std::vector<std::optional<double>>> values;  // [recommender][metric]
  };
  std::vector<WindowRow> windows;
  std::vector<std::vector<std::optional<double>>> aggregate;  // [recommender][metric], mean over windows
  std::vector<std::int64_t> predictions;                      // [recommender], summed
  std::vector<std::optional<std::size_t>> best;               // [metric]
  std::vector<bool> starred;                                  // [metric]
  std::vector<Comparison> comparisons;
  nlohmann::json dataset;  // stats echo, may be null
};

Report BuildReport(const std::vector<std::string>& recommenders, const std::vector<std::size_t>& cutoffs,
                   const std::vector<eval::WindowResult>& windows, const nlohmann::json& dataset);

void WriteReportTsv(std::ostream& out, const Report& report);
void WriteReportText(std::ostream& out, const Report& report);
void WriteWindowsTsv(std::ostream& out, const Report& report);
void WriteSignificanceTsv(std::ostream& out, const Report& report);

// report.tsv, report.txt, windows.tsv and significance.tsv under `dir`.
void WriteReportFiles(const Report& report, const std::filesystem::path& dir);

}  // namespace newsrec::cli

#endif  // NEWSREC_CLI_REPORT_H_
