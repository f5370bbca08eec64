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

#ifndef NEWSREC_BASELINES_SESSION_MODELS_H_
#define NEWSREC_BASELINES_SESSION_MODELS_H_

#include <cstdint>
#include <unordered_map>

#include "newsrec/baselines/recommender.h"

namespace newsrec::baselines {

// Per-session presence counts: n_i sessions contain i, n_ij sessions contain
// both i and j (i != j). Repeated clicks in a session count once.
class CoPresenceCounts {
 public:
  void AddSession(const Session& session);
  std::int64_t Sessions(ArticleIndex i) const;
  std::int64_t Pair(ArticleIndex i, ArticleIndex j) const;
  void HashInto(Hasher& hasher) const;

 private:
  std::unordered_map<ArticleIndex, std::int64_t> sessions_;
  std::unordered_map<ArticleIndex, std::unordered_map<ArticleIndex, std::int64_t>> pairs_;
};

// CO: number of training sessions in which the candidate co-occurs with the
// last prefix article.
class CoOccurrence final : public Recommender {
 public:
  CoOccurrence() : Recommender("CO") {}
  std::vector<double> Score(std::span<const Click> prefix, std::span<const ArticleIndex> candidates,
                            const StreamContext& context) const override;
  const CoPresenceCounts& counts() const { return counts_; }

 protected:
  void Learn(const Session& session, const StreamContext& context) override;
  void HashModel(Hasher& hasher) const override;

 private:
  CoPresenceCounts counts_;
};

// Item-kNN: n_{last,c} / (sqrt(n_last * n_c) + lambda).
class ItemKnn final : public Recommender {
 public:
  explicit ItemKnn(double lambda = 20.0);
  std::vector<double> Score(std::span<const Click> prefix, std::span<const ArticleIndex> candidates,
                            const StreamContext& context) const override;

 protected:
  void Learn(const Session& session, const StreamContext& context) override;
  void HashModel(Hasher& hasher) const override;

 private:
  double lambda_;
  CoPresenceCounts counts_;
};

// SR: every ordered in-session pair (i at p, j at q > p, i != j) adds
// 1 / (q - p) to the rule i -> j. Scores read the rules of the last click.
class SequentialRules final : public Recommender {
 public:
  SequentialRules() : Recommender("SR") {}
  std::vector<double> Score(std::span<const Click> prefix, std::span<const ArticleIndex> candidates,
                            const StreamContext& context) const override;
  double Weight(ArticleIndex from, ArticleIndex to) const;

 protected:
  void Learn(const Session& session, const StreamContext& context) override;
  void HashModel(Hasher& hasher) const override;

 private:
  std::unordered_map<ArticleIndex, std::unordered_map<ArticleIndex, double>> rules_;
};

}  // namespace newsrec::baselines

#endif  // NEWSREC_BASELINES_SESSION_MODELS_H_
