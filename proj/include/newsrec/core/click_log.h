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

#ifndef NEWSREC_CORE_CLICK_LOG_H_
#define NEWSREC_CORE_CLICK_LOG_H_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "newsrec/core/types.h"

namespace newsrec {

enum class RecordFormat { kDelimited, kJsonLines };

// Maps log columns (or JSON keys) to Click fields. device and location are
// optional: an empty column name means the field is absent.
struct ClickLogSchema {
  RecordFormat format = RecordFormat::kDelimited;
  char separator = ',';
  // Timestamps in the log are multiplied by this to get seconds; G1 ships
  // milliseconds, so it uses 1e-3.
  double timestamp_scale = 1.0;
  std::string timestamp_column = "timestamp";
  std::string session_column = "session_id";
  std::string user_column = "user_id";
  std::string article_column = "article_id";
  std::string device_column = "device";
  std::string location_column = "location";
};

struct ClickLogResult {
  std::vector<Click> clicks;  // file order
  std::int64_t malformed = 0;
  std::int64_t first_malformed_line = 0;
};

// Parses a click log. The delimited format requires a header line naming
// the columns. A missing mandatory column throws DataError; malformed data
// lines are skipped and counted.
ClickLogResult ParseClickLog(std::istream& in, const ClickLogSchema& schema, DatasetVocab& vocab);
ClickLogResult ParseClickLogFile(const std::filesystem::path& path, const ClickLogSchema& schema,
                                 DatasetVocab& vocab);

// Writes clicks as a delimited log readable with the default schema.
void WriteClickLog(std::ostream& out, std::span<const Click> clicks, const DatasetVocab& vocab);

}  // namespace newsrec

#endif  // NEWSREC_CORE_CLICK_LOG_H_
