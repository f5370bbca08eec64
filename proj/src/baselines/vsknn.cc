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

#include "newsrec/baselines/vsknn.h"

#include <algorithm>
#include <unordered_map>

#include "newsrec/core/errors.h"

namespace newsrec::baselines {

std::vector<std::pair<ArticleIndex, double>> VsknnPrefixWeights(std::span<const Click> prefix) {
  std::unordered_map<ArticleIndex, std::size_t> latest;
  for (std::size_t p = 0; p < prefix.size(); ++p) latest[prefix[p].article] = p + 1;
  std::vector<std::pair<ArticleIndex, double>> weights;
  for (const auto& [article, position] : latest) {
    weights.emplace_back(article, static_cast<double>(position) / static_cast<double>(prefix.size()));
  }
  std::sort(weights.begin(), weights.end());
  return weights;
}

Vsknn::Vsknn(VsknnConfig config) : Recommender("V-SkNN"), config_(config) {
  if (config.sample_size == 0 || config.neighbors == 0) {
    throw ConfigError("V-SkNN sample_size and neighbors must be at least 1");
  }
}

const Vsknn::Stored& Vsknn::Get(std::int64_t sequence) const {
  return store_[static_cast<std::size_t>(sequence - store_.front().sequence)];
}

void Vsknn::Learn(const Session& session, const StreamContext&) {
  Stored stored{next_sequence_++, {}};
  for (const Click& click : session.clicks) stored.items.push_back(click.article);
  std::sort(stored.items.begin(), stored.items.end());
  stored.items.erase(std::unique(stored.items.begin(), stored.items.end()), stored.items.end());
  for (const ArticleIndex item : stored.items) index_[item].push_back(stored.sequence);
  store_.push_back(std::move(stored));
  if (store_.size() > config_.sample_size) {
    const Stored& oldest = store_.front();
    for (const ArticleIndex item : oldest.items) {
      auto it = index_.find(item);
      it->second.pop_front();
      if (it->second.empty()) index_.erase(it);
    }
    store_.pop_front();
  }
}

std::vector<std::pair<std::int64_t, double>> Vsknn::Neighbors(std::span<const Click> prefix) const {
  std::unordered_map<std::int64_t, double> similarity;
  for (const auto& [article, weight] : VsknnPrefixWeights(prefix)) {
    const auto it = index_.find(article);
    if (it == index_.end()) continue;
    for (const std::int64_t sequence : it->second) similarity[sequence] += weight;
  }
  std::vector<std::pair<std::int64_t, double>> ranked(similarity.begin(), similarity.end());
  const auto better = [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first > b.first;
  };
  const std::size_t k = std::min(config_.neighbors, ranked.size());
  std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(k), ranked.end(), better);
  ranked.resize(k);
  return ranked;
}

std::vector<double> Vsknn::Score(std::span<const Click> prefix, std::span<const ArticleIndex> candidates,
                                 const StreamContext&) const {
  std::vector<double> scores(candidates.size(), 0.0);
  for (const auto& [sequence, sim] : Neighbors(prefix)) {
    const auto& items = Get(sequence).items;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (std::binary_search(items.begin(), items.end(), candidates[c])) scores[c] += sim;
    }
  }
  return scores;
}

void Vsknn::HashModel(Hasher& hasher) const {
  hasher.Add(config_.sample_size);
  hasher.Add(config_.neighbors);
  hasher.Add(next_sequence_);
  for (const Stored& stored : store_) {
    hasher.Add(stored.sequence);
    hasher.Add(std::span<const ArticleIndex>(stored.items));
  }
}

}  // namespace newsrec::baselines
