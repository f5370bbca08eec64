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

// newsrec: streaming benchmark for session-based news recommendation.
//
//   newsrec ingest --config run.json
//   newsrec run    --config run.json [--seed N] [--dump-records] [--output DIR]
//   newsrec report --config run.json [--records FILE] [--window W] [--output DIR]
//
// Exit codes: 0 ok, 1 config error, 2 data error, 3 runtime error.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "newsrec/cli/pipeline.h"
#include "newsrec/cli/run_config.h"
#include "newsrec/core/errors.h"

namespace {

constexpr int kOk = 0;
constexpr int kConfigError = 1;
constexpr int kDataError = 2;
constexpr int kRuntimeError = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Streaming evaluation of session-based news recommenders"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string output;
  bool dump_records = false;
  std::string records;
  int window = -1;

  auto* ingest = app.add_subcommand("ingest", "Parse and sessionize the data, print dataset statistics");
  auto* run = app.add_subcommand("run", "Run the train/evaluate protocol and write the report");
  auto* report = app.add_subcommand("report", "Rebuild the report from a records dump");
  for (auto* sub : {ingest, run, report}) {
    sub->add_option("--config", config_path, "Run configuration (JSON)")->required();
    sub->add_option("--seed", seed, "Override the configured seed");
    sub->add_option("--output", output, "Override the output directory");
  }
  run->add_flag("--dump-records", dump_records, "Also write records.jsonl with every prediction");
  report->add_option("--records", records, "Records dump (default: <output>/records.jsonl)");
  report->add_option("--window", window, "Only replay this window");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    newsrec::cli::RunConfig config = newsrec::cli::LoadRunConfig(config_path);
    if (seed) config.seed = *seed;
    if (!output.empty()) config.output = output;

    if (ingest->parsed()) {
      newsrec::cli::CommandIngest(config, std::cout, &std::cerr);
    } else if (run->parsed()) {
      newsrec::cli::CommandRun(config, dump_records, std::cout, &std::cerr);
    } else {
      const std::filesystem::path path = records.empty() ? config.output / "records.jsonl" : std::filesystem::path(records);
      newsrec::cli::CommandReport(path, config.output / "replay", window, std::cout);
    }
  } catch (const newsrec::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const newsrec::DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kDataError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
  return kOk;
}
