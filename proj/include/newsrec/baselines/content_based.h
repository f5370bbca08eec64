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

#ifndef NEWSREC_BASELINES_CONTENT_BASED_H_
#define NEWSREC_BASELINES_CONTENT_BASED_H_

#include <memory>

#include "newsrec/acr/embedding_table.h"
#include "newsrec/baselines/recommender.h"

namespace newsrec::baselines {

// CB: cosine between the candidate embedding and a recency-decayed profile
// of the prefix, profile = normalize(sum_j decay^j e_j) with j = 0 for the
// newest click. Articles without a vector contribute zero.
class ContentBased final : public Recommender {
 public:
  ContentBased(std::shared_ptr<const acr::EmbeddingTable> embeddings, double decay = 0.8);
  std::vector<double> Score(std::span<const Click> prefix, std::span<const ArticleIndex> candidates,
                            const StreamContext& context) const override;

 protected:
  void Learn(const Session&, const StreamContext&) override {}
  void HashModel(Hasher& hasher) const override;

 private:
  std::shared_ptr<const acr::EmbeddingTable> embeddings_;
  double decay_;
};

}  // namespace newsrec::baselines

#endif  // NEWSREC_BASELINES_CONTENT_BASED_H_
