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

#ifndef NEWSREC_CORE_TYPES_H_
#define NEWSREC_CORE_TYPES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "newsrec/core/vocabulary.h"

namespace newsrec {

using Timestamp = std::int64_t;  // seconds since epoch, UTC
using ArticleIndex = std::int32_t;

inline constexpr Timestamp kSecondsPerHour = 3600;
inline constexpr Timestamp kSecondsPerDay = 86400;

// One user-article interaction. Identifiers are indices into DatasetVocab.
struct Click {
  Timestamp timestamp = 0;
  std::int32_t user = 0;
  std::int32_t session = 0;
  ArticleIndex article = 0;
  std::int32_t device = Vocabulary::kUnk;
  std::int32_t location = Vocabulary::kUnk;

  friend bool operator==(const Click&, const Click&) = default;
};

struct Session {
  std::int32_t session = 0;
  std::int32_t user = 0;
  std::vector<Click> clicks;  // ascending timestamp, ties in input order
  std::int32_t start_hour = 0;

  Timestamp start() const { return clicks.front().timestamp; }
  std::size_t length() const { return clicks.size(); }
};

struct Article {
  ArticleIndex id = 0;
  std::optional<Timestamp> publish_timestamp;
  std::int32_t category = Vocabulary::kUnk;
  std::vector<std::string> tokens;
  std::vector<double> embedding;  // precomputed content vector, may be empty
  bool stub = false;              // clicked but absent from the catalog
};

struct HourBucket {
  std::int32_t hour_index = 0;
  std::vector<const Session*> sessions;  // ascending start time
};

struct DatasetStats {
  std::int64_t n_users = 0;
  std::int64_t n_sessions = 0;
  std::int64_t n_clicks = 0;
  std::int64_t n_articles = 0;
  double avg_session_length = 0.0;
};

// Interning tables shared by click log and catalog ingestion.
struct DatasetVocab {
  Vocabulary articles{false};
  Vocabulary users{false};
  Vocabulary sessions{false};
  Vocabulary devices{true};
  Vocabulary locations{true};
  Vocabulary categories{true};
};

}  // namespace newsrec

#endif  // NEWSREC_CORE_TYPES_H_
