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

#ifndef NEWSREC_METRICS_ACCUMULATOR_H_
#define NEWSREC_METRICS_ACCUMULATOR_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>

namespace newsrec::metrics {

// Streaming sums for one recommender at one cutoff n.
class MetricsAccumulator {
 public:
  explicit MetricsAccumulator(std::size_t n) : n_(n) {}

  // `top_n` holds the article ids of the list shown for this prediction.
  void Add(std::size_t rank, std::span<const std::int32_t> top_n, double esi_r);
  // Sums and set union; requires the same cutoff.
  void Merge(const MetricsAccumulator& other);

  std::size_t n() const { return n_; }
  std::int64_t count() const { return count_; }
  std::optional<double> hit_rate() const;
  std::optional<double> mrr() const;
  std::optional<double> esi_r() const;
  // Distinct recommended articles over `recommendable`; throws on zero.
  double Coverage(std::int64_t recommendable) const;
  std::size_t distinct_recommended() const { return recommended_.size(); }

 private:
  std::size_t n_;
  std::int64_t count_ = 0;
  std::int64_t hits_ = 0;
  double rr_sum_ = 0.0;
  double esi_sum_ = 0.0;
  std::set<std::int32_t> recommended_;
};

}  // namespace newsrec::metrics

#endif  // NEWSREC_METRICS_ACCUMULATOR_H_
