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

#ifndef NEWSREC_CLI_RUN_CONFIG_H_
#define NEWSREC_CLI_RUN_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "newsrec/acr/encoder.h"
#include "newsrec/core/catalog.h"
#include "newsrec/core/click_log.h"
#include "newsrec/core/sessions.h"
#include "newsrec/core/synthetic.h"
#include "newsrec/eval/protocol.h"
#include "newsrec/nar/config.h"

namespace newsrec::cli {

// Logs on disk. `clicks` entries may be files or directories; a directory
// contributes its regular files in name order.
struct FileSource {
  std::vector<std::filesystem::path> clicks;
  std::optional<std::filesystem::path> catalog;
  ClickLogSchema schema;
  CatalogParseOptions catalog_options;
  SessionMode session_mode = SessionMode::kProvidedId;
  Timestamp gap_seconds = 1800;
};

struct RosterEntry {
  std::string algorithm;  // CO, SR, Item-kNN, V-SkNN, RP, CB, NAR, GRU4Rec-lite
  std::string name;       // report label, defaults to the algorithm
  nlohmann::json options;  // per-algorithm hyperparameters
};

struct AcrSettings {
  acr::AcrConfig training;
  bool normalize = true;
  std::optional<std::filesystem::path> word_vectors;
};

struct RunConfig {
  std::optional<SyntheticConfig> synthetic;
  std::optional<FileSource> files;
  std::vector<RosterEntry> roster;
  eval::ProtocolConfig protocol;
  nar::NarConfig nar;
  AcrSettings acr;
  std::filesystem::path output = "newsrec-out";
  std::uint64_t seed = 0;
  // Digest of the data block; decides whether an ingested dataset on disk
  // can be reused.
  std::string data_fingerprint;

  // Throws ConfigError unless there is exactly one data source, the roster
  // is nonempty with unique names, and every referenced file exists.
  void Validate() const;
};

// Unknown keys are rejected so that typos do not silently fall back to
// defaults. Relative paths resolve against the config file's directory.
RunConfig ParseRunConfig(const nlohmann::json& document, const std::filesystem::path& base_dir);
RunConfig LoadRunConfig(const std::filesystem::path& path);

// The global nar block with the entry's own options applied on top. The
// GRU4Rec-lite entry then switches to the item-only feature set.
nar::NarConfig ResolveNarConfig(const RunConfig& config, const RosterEntry& entry);

// The roster used when the config has no "roster" key.
std::vector<RosterEntry> DefaultRoster();

// Independent seed for one named component of a run.
std::uint64_t DeriveSeed(std::uint64_t seed, std::string_view component);

}  // namespace newsrec::cli

#endif  // NEWSREC_CLI_RUN_CONFIG_H_
