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

#include "newsrec/metrics/accumulator.h"

#include <stdexcept>

#include "newsrec/metrics/ranking.h"

namespace newsrec::metrics {

void MetricsAccumulator::Add(std::size_t rank, std::span<const std::int32_t> top_n, double esi_r) {
  const HitAndReciprocal hr = HitAtN(rank, n_);
  ++count_;
  hits_ += hr.hit;
  rr_sum_ += hr.reciprocal_rank;
  esi_sum_ += esi_r;
  recommended_.insert(top_n.begin(), top_n.end());
}

void MetricsAccumulator::Merge(const MetricsAccumulator& other) {
  if (other.n_ != n_) throw std::invalid_argument("cannot merge accumulators with different cutoffs");
  count_ += other.count_;
  hits_ += other.hits_;
  rr_sum_ += other.rr_sum_;
  esi_sum_ += other.esi_sum_;
  recommended_.insert(other.recommended_.begin(), other.recommended_.end());
}

std::optional<double> MetricsAccumulator::hit_rate() const {
  if (count_ == 0) return std::nullopt;
  return static_cast<double>(hits_) / static_cast<double>(count_);
}

std::optional<double> MetricsAccumulator::mrr() const {
  if (count_ == 0) return std::nullopt;
  return rr_sum_ / static_cast<double>(count_);
}

std::optional<double> MetricsAccumulator::esi_r() const {
  if (count_ == 0) return std::nullopt;
  return esi_sum_ / static_cast<double>(count_);
}

double MetricsAccumulator::Coverage(std::int64_t recommendable) const {
  if (recommendable <= 0) throw std::invalid_argument("coverage needs a nonempty recommendable set");
  return static_cast<double>(recommended_.size()) / static_cast<double>(recommendable);
}

}  // namespace newsrec::metrics
