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

#ifndef NEWSREC_METRICS_RANKING_H_
#define NEWSREC_METRICS_RANKING_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace newsrec::metrics {

// 1 + number of other candidates scoring >= the positive. The positive loses
// every tie, so a constant scorer always ranks it last.
std::size_t RankOfPositive(std::span<const double> scores, std::size_t positive);

// Same rule, locating the positive by id. Throws std::invalid_argument when
// the id is not a candidate.
template <typename Id>
std::size_t RankOfPositiveId(std::span<const double> scores, std::span<const Id> ids, const Id& positive) {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] == positive) return RankOfPositive(scores, i);
  }
  throw std::invalid_argument("positive is not among the candidates");
}

struct HitAndReciprocal {
  int hit = 0;
  double reciprocal_rank = 0.0;
};

HitAndReciprocal HitAtN(std::size_t rank, std::size_t n);

// Candidate positions of the n best scores: score descending, the positive
// after others on ties (matching RankOfPositive), remaining ties by
// ascending key. Keys make the order independent of candidate order.
std::vector<std::size_t> TopN(std::span<const double> scores, std::size_t positive, std::span<const std::string_view> keys,
                              std::size_t n);

// Add-one smoothed click probability over the recommendable set.
double SmoothedPopularity(std::int64_t clicks, std::int64_t total_clicks, std::int64_t recommendable);

// Rank-discounted mean self-information, discount 0.85^(k-1), in bits.
double EsiR(std::span<const double> probabilities);

}  // namespace newsrec::metrics

#endif  // NEWSREC_METRICS_RANKING_H_
