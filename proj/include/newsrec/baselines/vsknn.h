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

#ifndef NEWSREC_BASELINES_VSKNN_H_
#define NEWSREC_BASELINES_VSKNN_H_

#include <cstdint>
#include <deque>
#include <unordered_map>
#include <utility>
#include <vector>

#include "newsrec/baselines/recommender.h"

namespace newsrec::baselines {

struct VsknnConfig {
  std::size_t sample_size = 5000;  // M most recent training sessions kept
  std::size_t neighbors = 100;     // k
};

// Vector-multiplication session kNN. The current prefix weighs each article
// by pos / len of its latest click (1-based, so the newest click weighs 1).
// Similarity to a stored session sums the weights of shared articles; the k
// most similar sessions (ties to the more recently stored) vote with their
// similarity for every article they contain.
class Vsknn final : public Recommender {
 public:
  explicit Vsknn(VsknnConfig config = {});
  std::vector<double> Score(std::span<const Click> prefix, std::span<const ArticleIndex> candidates,
                            const StreamContext& context) const override;

  // (stored sequence number, similarity) in neighbor order.
  std::vector<std::pair<std::int64_t, double>> Neighbors(std::span<const Click> prefix) const;
  std::size_t stored_sessions() const { return store_.size(); }

 protected:
  void Learn(const Session& session, const StreamContext& context) override;
  void HashModel(Hasher& hasher) const override;

 private:
  struct Stored {
    std::int64_t sequence;
    std::vector<ArticleIndex> items;  // sorted, unique
  };
  const Stored& Get(std::int64_t sequence) const;

  VsknnConfig config_;
  std::int64_t next_sequence_ = 0;
  std::deque<Stored> store_;
  std::unordered_map<ArticleIndex, std::deque<std::int64_t>> index_;  // ascending sequence
};

// Prefix weights as used by Vsknn: distinct articles in ascending id order.
std::vector<std::pair<ArticleIndex, double>> VsknnPrefixWeights(std::span<const Click> prefix);

}  // namespace newsrec::baselines

#endif  // NEWSREC_BASELINES_VSKNN_H_
