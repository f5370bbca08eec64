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

#ifndef NEWSREC_BASELINES_POPULARITY_TRACKER_H_
#define NEWSREC_BASELINES_POPULARITY_TRACKER_H_

#include <cstdint>
#include <deque>
#include <limits>
#include <unordered_map>
#include <utility>

#include "newsrec/core/hash.h"
#include "newsrec/core/types.h"

namespace newsrec::baselines {

// Exact sliding-window click counts. A click at time t is counted by a query
// at time `at` iff at - window <= t <= at, so the window is closed on both
// ends. Clicks must arrive in non-decreasing time order. Queries are const
// and may ask about any time whose window does not reach behind the eviction
// horizon.
class PopularityTracker {
 public:
  explicit PopularityTracker(Timestamp window_seconds);

  // Throws DataError when t is earlier than the previous click.
  void Add(Timestamp t, ArticleIndex article);
  // Forgets clicks strictly before `horizon`. Horizons must not decrease.
  void EvictBefore(Timestamp horizon);

  std::int64_t Count(ArticleIndex article, Timestamp at) const;
  std::int64_t Total(Timestamp at) const;
  std::int64_t MaxCount(Timestamp at) const;

  Timestamp window() const { return window_; }
  std::size_t stored_clicks() const { return events_.size(); }
  void HashState(Hasher& hasher) const;

 private:
  void CheckQuery(Timestamp at) const;

  Timestamp window_;
  Timestamp horizon_ = std::numeric_limits<Timestamp>::min();
  Timestamp last_ = std::numeric_limits<Timestamp>::min();
  std::deque<std::pair<Timestamp, ArticleIndex>> events_;
  std::unordered_map<ArticleIndex, std::deque<Timestamp>> per_article_;
};

}  // namespace newsrec::baselines

#endif  // NEWSREC_BASELINES_POPULARITY_TRACKER_H_
