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

#ifndef NEWSREC_EVAL_RECOMMENDABLE_POOL_H_
#define NEWSREC_EVAL_RECOMMENDABLE_POOL_H_

#include <cstdint>
#include <deque>
#include <limits>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "newsrec/core/hash.h"
#include "newsrec/core/rng.h"
#include "newsrec/core/types.h"

namespace newsrec::eval {

// Articles clicked within [clock - window, clock]. Clicks must be added in
// non-decreasing time order and not after the clock; older-than-window
// clicks are ignored.
class RecommendablePool {
 public:
  explicit RecommendablePool(Timestamp window_seconds);

  // Moves the clock forward and evicts expired clicks.
  void AdvanceTo(Timestamp clock);
  // Throws DataError on time regression or a click after the clock.
  void Add(Timestamp t, ArticleIndex article);

  bool Contains(ArticleIndex article) const { return counts_.contains(article); }
  std::size_t size() const { return members_.size(); }
  std::span<const ArticleIndex> members() const { return members_; }  // ascending
  Timestamp clock() const { return clock_; }
  Timestamp window() const { return window_; }
  void HashState(Hasher& hasher) const;

 private:
  Timestamp window_;
  Timestamp clock_ = std::numeric_limits<Timestamp>::min();
  Timestamp last_ = std::numeric_limits<Timestamp>::min();
  std::deque<std::pair<Timestamp, ArticleIndex>> events_;
  std::unordered_map<ArticleIndex, std::int64_t> counts_;
  std::vector<ArticleIndex> members_;
};

// K distinct articles drawn uniformly without replacement from the pool
// minus `excluded` (the session's own articles). Order is draw order.
// Throws DataError when fewer than K articles are eligible.
std::vector<ArticleIndex> SampleNegatives(const RecommendablePool& pool, std::span<const ArticleIndex> excluded,
                                          std::size_t k, Rng& rng);

// As above, but returns min(K, eligible) articles instead of failing.
std::vector<ArticleIndex> SampleUpToNegatives(const RecommendablePool& pool, std::span<const ArticleIndex> excluded,
                                              std::size_t k, Rng& rng);

}  // namespace newsrec::eval

#endif  // NEWSREC_EVAL_RECOMMENDABLE_POOL_H_
