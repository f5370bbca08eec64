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

#include "newsrec/baselines/content_based.h"

#include <cmath>

#include "newsrec/core/errors.h"

namespace newsrec::baselines {

ContentBased::ContentBased(std::shared_ptr<const acr::EmbeddingTable> embeddings, double decay)
    : Recommender("CB"), embeddings_(std::move(embeddings)), decay_(decay) {
  if (!(decay > 0.0 && decay <= 1.0)) throw ConfigError("CB decay must be in (0, 1]");
}

std::vector<double> ContentBased::Score(std::span<const Click> prefix, std::span<const ArticleIndex> candidates,
                                        const StreamContext&) const {
  const std::size_t dim = embeddings_->dim();
  std::vector<double> profile(dim, 0.0);
  double weight = 1.0;
  for (std::size_t j = prefix.size(); j-- > 0;) {
    const auto e = embeddings_->Get(prefix[j].article);
    for (std::size_t c = 0; c < e.size(); ++c) profile[c] += weight * e[c];
    weight *= decay_;
  }
  double norm = 0.0;
  for (const double v : profile) norm += v * v;
  norm = std::sqrt(norm);
  std::vector<double> scores(candidates.size(), 0.0);
  if (norm == 0.0) return scores;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto e = embeddings_->Get(candidates[i]);
    double dot = 0.0;
    for (std::size_t c = 0; c < e.size(); ++c) dot += profile[c] * e[c];
    scores[i] = dot / norm;
  }
  return scores;
}

void ContentBased::HashModel(Hasher& hasher) const { hasher.Add(decay_); }

}  // namespace newsrec::baselines
