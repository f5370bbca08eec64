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

#include "newsrec/baselines/popularity_tracker.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "newsrec/core/errors.h"

namespace newsrec::baselines {

PopularityTracker::PopularityTracker(Timestamp window_seconds) : window_(window_seconds) {
  if (window_seconds <= 0) throw ConfigError("popularity window must be positive");
}

void PopularityTracker::Add(Timestamp t, ArticleIndex article) {
  if (t < last_) {
    throw DataError("click stream out of order: " + std::to_string(t) + " after " + std::to_string(last_));
  }
  last_ = t;
  if (t < horizon_) return;
  events_.emplace_back(t, article);
  per_article_[article].push_back(t);
}

void PopularityTracker::EvictBefore(Timestamp horizon) {
  if (horizon < horizon_) throw std::logic_error("popularity horizon moved backwards");
  horizon_ = horizon;
  while (!events_.empty() && events_.front().first < horizon) {
    const auto it = per_article_.find(events_.front().second);
    it->second.pop_front();
    if (it->second.empty()) per_article_.erase(it);
    events_.pop_front();
  }
}

void PopularityTracker::CheckQuery(Timestamp at) const {
  if (at - window_ < horizon_) {
    throw std::logic_error("popularity query at " + std::to_string(at) + " reaches behind the eviction horizon");
  }
}

namespace {

template <typename It, typename Key>
std::int64_t CountInRange(It begin, It end, Timestamp lo, Timestamp hi, Key key) {
  const auto first = std::partition_point(begin, end, [&](const auto& e) { return key(e) < lo; });
  const auto last = std::partition_point(first, end, [&](const auto& e) { return key(e) <= hi; });
  return last - first;
}

}  // namespace

std::int64_t PopularityTracker::Count(ArticleIndex article, Timestamp at) const {
  CheckQuery(at);
  const auto it = per_article_.find(article);
  if (it == per_article_.end()) return 0;
  return CountInRange(it->second.begin(), it->second.end(), at - window_, at, [](Timestamp t) { return t; });
}

std::int64_t PopularityTracker::Total(Timestamp at) const {
  CheckQuery(at);
  return CountInRange(events_.begin(), events_.end(), at - window_, at, [](const auto& e) { return e.first; });
}

std::int64_t PopularityTracker::MaxCount(Timestamp at) const {
  CheckQuery(at);
  std::int64_t best = 0;
  for (const auto& [article, times] : per_article_) {
    best = std::max(best, CountInRange(times.begin(), times.end(), at - window_, at, [](Timestamp t) { return t; }));
  }
  return best;
}

void PopularityTracker::HashState(Hasher& hasher) const {
  hasher.Add(window_);
  hasher.Add(horizon_);
  hasher.Add(last_);
  hasher.Add(events_.size());
  for (const auto& [t, article] : events_) {
    hasher.Add(t);
    hasher.Add(article);
  }
}

}  // namespace newsrec::baselines
