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

#include "newsrec/eval/recommendable_pool.h"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "newsrec/core/errors.h"

namespace newsrec::eval {

RecommendablePool::RecommendablePool(Timestamp window_seconds) : window_(window_seconds) {
  if (window_seconds <= 0) throw ConfigError("recommendable window must be positive");
}

void RecommendablePool::AdvanceTo(Timestamp clock) {
  if (clock < clock_) throw DataError("recommendable pool clock moved backwards");
  clock_ = clock;
  while (!events_.empty() && events_.front().first < clock - window_) {
    const ArticleIndex article = events_.front().second;
    events_.pop_front();
    if (--counts_[article] == 0) {
      counts_.erase(article);
      members_.erase(std::lower_bound(members_.begin(), members_.end(), article));
    }
  }
}

void RecommendablePool::Add(Timestamp t, ArticleIndex article) {
  if (t < last_) {
    throw DataError("click stream out of order: " + std::to_string(t) + " after " + std::to_string(last_));
  }
  if (t > clock_) throw DataError("click at " + std::to_string(t) + " is after the pool clock " + std::to_string(clock_));
  last_ = t;
  if (t < clock_ - window_) return;
  events_.emplace_back(t, article);
  if (counts_[article]++ == 0) members_.insert(std::lower_bound(members_.begin(), members_.end(), article), article);
}

void RecommendablePool::HashState(Hasher& hasher) const {
  hasher.Add(window_);
  hasher.Add(clock_);
  hasher.Add(last_);
  hasher.Add(events_.size());
  for (const auto& [t, article] : events_) {
    hasher.Add(t);
    hasher.Add(article);
  }
}

namespace {

std::vector<ArticleIndex> Draw(const RecommendablePool& pool, std::span<const ArticleIndex> excluded, std::size_t k,
                               Rng& rng, bool strict) {
  std::unordered_set<ArticleIndex> blocked;
  std::size_t blocked_members = 0;
  for (const ArticleIndex a : excluded) {
    if (blocked.insert(a).second && pool.Contains(a)) ++blocked_members;
  }
  const std::size_t eligible = pool.size() - blocked_members;
  if (eligible < k) {
    if (strict) {
      throw DataError("only " + std::to_string(eligible) + " articles eligible as negatives but " +
                      std::to_string(k) + " are required; widen the recommendable window");
    }
    k = eligible;
  }
  const auto members = pool.members();
  std::vector<ArticleIndex> drawn;
  drawn.reserve(k);
  if (k == eligible) {
    // Take every eligible article, then shuffle so order matches a draw.
    for (const ArticleIndex a : members) {
      if (!blocked.contains(a)) drawn.push_back(a);
    }
    for (std::size_t i = drawn.size(); i > 1; --i) std::swap(drawn[i - 1], drawn[rng.UniformInt(i)]);
    return drawn;
  }
  while (drawn.size() < k) {
    const ArticleIndex a = members[rng.UniformInt(members.size())];
    if (blocked.insert(a).second) drawn.push_back(a);
  }
  return drawn;
}

}  // namespace

std::vector<ArticleIndex> SampleNegatives(const RecommendablePool& pool, std::span<const ArticleIndex> excluded,
                                          std::size_t k, Rng& rng) {
  return Draw(pool, excluded, k, rng, true);
}

std::vector<ArticleIndex> SampleUpToNegatives(const RecommendablePool& pool, std::span<const ArticleIndex> excluded,
                                              std::size_t k, Rng& rng) {
  return Draw(pool, excluded, k, rng, false);
}

}  // namespace newsrec::eval
