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

#ifndef NEWSREC_CORE_SESSIONS_H_
#define NEWSREC_CORE_SESSIONS_H_

#include <cstdint>
#include <span>
#include <vector>

#include "newsrec/core/types.h"

namespace newsrec {

enum class SessionMode { kProvidedId, kGapSplit };

struct SessionizeResult {
  std::vector<Session> sessions;  // ascending start time
  std::int64_t dropped_singleton_clicks = 0;
  std::int64_t collapsed_duplicates = 0;
};

// Groups clicks into sessions, collapses consecutive repeats of the same
// article and drops sessions shorter than two clicks. In gap-split mode new
// session identities are interned into `vocab.sessions`.
SessionizeResult BuildSessions(std::span<const Click> clicks, SessionMode mode, Timestamp gap_seconds,
                               DatasetVocab& vocab);

// Partitions sessions into contiguous hour buckets starting at
// `dataset_start` and stamps each session's start_hour. Buckets hold
// pointers into `sessions`, which must outlive them.
std::vector<HourBucket> BucketByHour(std::span<Session> sessions, Timestamp dataset_start);

// Throws DataError on empty input.
DatasetStats ComputeDatasetStats(std::span<const Session> sessions);

}  // namespace newsrec

#endif  // NEWSREC_CORE_SESSIONS_H_
