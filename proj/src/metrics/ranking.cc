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

#include "newsrec/metrics/ranking.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace newsrec::metrics {

std::size_t RankOfPositive(std::span<const double> scores, std::size_t positive) {
  if (positive >= scores.size()) throw std::invalid_argument("positive index out of range");
  const double s = scores[positive];
  std::size_t rank = 1;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (i != positive && scores[i] >= s) ++rank;
  }
  return rank;
}

HitAndReciprocal HitAtN(std::size_t rank, std::size_t n) {
  if (rank == 0 || rank > n) return {};
  return {1, 1.0 / static_cast<double>(rank)};
}

std::vector<std::size_t> TopN(std::span<const double> scores, std::size_t positive,
                              std::span<const std::string_view> keys, std::size_t n) {
  if (keys.size() != scores.size()) throw std::invalid_argument("TopN: one key per candidate required");
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  const auto before = [&](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    if ((a == positive) != (b == positive)) return b == positive;
    return keys[a] < keys[b];
  };
  n = std::min(n, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n), order.end(), before);
  order.resize(n);
  return order;
}

double SmoothedPopularity(std::int64_t clicks, std::int64_t total_clicks, std::int64_t recommendable) {
  return static_cast<double>(clicks + 1) / static_cast<double>(total_clicks + recommendable);
}

double EsiR(std::span<const double> probabilities) {
  double weighted = 0.0;
  double norm = 0.0;
  double discount = 1.0;
  for (const double p : probabilities) {
    weighted += discount * -std::log2(p);
    norm += discount;
    discount *= 0.85;
  }
  return norm == 0.0 ? 0.0 : weighted / norm;
}

}  // namespace newsrec::metrics
