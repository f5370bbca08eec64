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

#ifndef NEWSREC_CORE_DATASET_H_
#define NEWSREC_CORE_DATASET_H_

#include <filesystem>
#include <vector>

#include "newsrec/core/catalog.h"
#include "newsrec/core/types.h"

namespace newsrec {

// A sessionized dataset ready for the evaluation protocol.
struct Dataset {
  DatasetVocab vocab;
  Catalog catalog;
  std::vector<Session> sessions;  // ascending start time
  Timestamp start = 0;            // earliest session start
};

// Normalized on-disk form written by `ingest`: articles.jsonl and
// sessions.jsonl under `dir`.
void WriteNormalizedDataset(const Dataset& dataset, const std::filesystem::path& dir);
Dataset ReadNormalizedDataset(const std::filesystem::path& dir);

}  // namespace newsrec

#endif  // NEWSREC_CORE_DATASET_H_
