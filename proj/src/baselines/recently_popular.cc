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

#include "newsrec/baselines/recently_popular.h"

#include <stdexcept>

#include "newsrec/baselines/popularity_tracker.h"

namespace newsrec::baselines {

std::vector<double> RecentlyPopular::Score(std::span<const Click>, std::span<const ArticleIndex> candidates,
                                           const StreamContext& context) const {
  if (context.popularity == nullptr) throw std::logic_error("RP needs a popularity tracker");
  std::vector<double> scores;
  scores.reserve(candidates.size());
  for (const ArticleIndex c : candidates) {
    scores.push_back(static_cast<double>(context.popularity->Count(c, context.clock)));
  }
  return scores;
}

}  // namespace newsrec::baselines
