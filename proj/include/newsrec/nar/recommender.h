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

#ifndef NEWSREC_NAR_RECOMMENDER_H_
#define NEWSREC_NAR_RECOMMENDER_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>

#include "newsrec/baselines/recommender.h"
#include "newsrec/core/rng.h"
#include "newsrec/nar/model.h"
#include "newsrec/tensor/adam.h"

namespace newsrec::nar {

// Online NAR training behind the common recommender interface. Every
// prediction in a training session (click i+1 from clicks 1..i) draws up to
// K negatives from the recommendable pool, excluding the session's own
// articles, and takes one Adam step. Predictions without any eligible
// negative are skipped.
class NarRecommender final : public baselines::Recommender {
 public:
  NarRecommender(std::string name, std::unique_ptr<NarModel> model, std::uint64_t seed);

  std::vector<double> Score(std::span<const Click> prefix, std::span<const ArticleIndex> candidates,
                            const baselines::StreamContext& context) const override;

  const NarModel& model() const { return *model_; }
  std::int64_t trained_predictions() const { return trained_; }
  double total_loss() const { return total_loss_; }

 protected:
  void Learn(const Session& session, const baselines::StreamContext& context) override;
  void HashModel(Hasher& hasher) const override;

 private:
  std::unique_ptr<NarModel> model_;
  tensor::Adam adam_;
  Rng rng_;
  std::int64_t trained_ = 0;
  double total_loss_ = 0.0;
};

// Trains on the sessions in order and returns the mean loss of the
// predictions trained by this call (nullopt when there were none).
std::optional<double> TrainOnBucket(NarRecommender& nar, std::span<const Session* const> sessions,
                                    const baselines::StreamContext& context);

}  // namespace newsrec::nar

#endif  // NEWSREC_NAR_RECOMMENDER_H_
