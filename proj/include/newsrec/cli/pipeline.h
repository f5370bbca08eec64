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

#ifndef NEWSREC_CLI_PIPELINE_H_
#define NEWSREC_CLI_PIPELINE_H_

#include <filesystem>
#include <memory>
#include <ostream>
#include <vector>

#include "json.hpp"
#include "newsrec/acr/embedding_table.h"
#include "newsrec/baselines/recommender.h"
#include "newsrec/cli/report.h"
#include "newsrec/cli/run_config.h"
#include "newsrec/core/dataset.h"

namespace newsrec::cli {

struct IngestSummary {
  DatasetStats stats;
  std::int64_t malformed_lines = 0;
  std::int64_t dropped_singleton_clicks = 0;
  std::int64_t collapsed_duplicates = 0;
  std::int64_t stub_articles = 0;
  std::int64_t published_after_first_click = 0;
};

struct Ingested {
  Dataset dataset;
  IngestSummary summary;
};

// Parses the configured logs (or generates the synthetic stream) and
// sessionizes them. Data problems throw DataError.
Ingested IngestDataset(const RunConfig& config, std::ostream* log);

nlohmann::ordered_json StatsJson(const DatasetStats& stats);

// Content vectors for CB and NAR: the catalog's precomputed embeddings when
// it has them, otherwise an encoder trained on article metadata.
std::shared_ptr<acr::EmbeddingTable> PrepareContent(const RunConfig& config, const Dataset& dataset,
                                                    std::ostream* log);

std::vector<std::unique_ptr<baselines::Recommender>> BuildRoster(
    const RunConfig& config, const Dataset& dataset, std::shared_ptr<const acr::EmbeddingTable> content);

// `ingest`: writes <output>/dataset and prints the dataset statistics.
IngestSummary CommandIngest(const RunConfig& config, std::ostream& out, std::ostream* log);

// `run`: reuses <output>/dataset when it came from the same data block,
// runs the protocol over the roster and writes the report files to
// <output>, plus <output>/records.jsonl when `dump_records` is set.
Report CommandRun(const RunConfig& config, bool dump_records, std::ostream& out, std::ostream* log);

// `report`: rebuilds the report from a records dump without running any
// model and writes it to `output_dir`.
Report CommandReport(const std::filesystem::path& records, const std::filesystem::path& output_dir, int only_window,
                     std::ostream& out);

}  // namespace newsrec::cli

#endif  // NEWSREC_CLI_PIPELINE_H_
