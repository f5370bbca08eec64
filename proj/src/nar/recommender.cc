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

#include "newsrec/nar/recommender.h"

#include <algorithm>
#include <stdexcept>

#include "newsrec/eval/recommendable_pool.h"

namespace newsrec::nar {

NarRecommender::NarRecommender(std::string name, std::unique_ptr<NarModel> model, std::uint64_t seed)
    : Recommender(std::move(name)),
      model_(std::move(model)),
      adam_({model_->config().learning_rate}, model_->params()),
      rng_(seed) {}

std::vector<double> NarRecommender::Score(std::span<const Click> prefix, std::span<const ArticleIndex> candidates,
                                          const baselines::StreamContext& context) const {
  return model_->Score(prefix, candidates, context.clock, context.popularity);
}

void NarRecommender::Learn(const Session& session, const baselines::StreamContext& context) {
  if (context.pool == nullptr) throw std::logic_error("nar training needs a recommendable pool");
  std::vector<ArticleIndex> excluded;
  for (const Click& click : session.clicks) excluded.push_back(click.article);
  const std::span<const Click> clicks(session.clicks);
  for (std::size_t i = 1; i < clicks.size(); ++i) {
    const auto negatives = eval::SampleUpToNegatives(*context.pool, excluded, model_->config().negatives, rng_);
    if (negatives.empty()) continue;
    std::vector<ArticleIndex> candidates = {clicks[i].article};
    candidates.insert(candidates.end(), negatives.begin(), negatives.end());
    tensor::Tape tape(&model_->params());
    const tensor::Var loss =
        model_->Loss(tape, clicks.first(i), candidates, clicks[i].timestamp, context.popularity);
    total_loss_ += tape.scalar(loss);
    ++trained_;
    tensor::Gradients grads = tensor::ZeroGradients(model_->params());
    tape.Backward(loss, grads);
    adam_.Step(model_->params(), grads);
  }
}

void NarRecommender::HashModel(Hasher& hasher) const {
  hasher.Add(model_->params().Fingerprint());
  hasher.Add(adam_.step());
  hasher.Add(trained_);
}

std::optional<double> TrainOnBucket(NarRecommender& nar, std::span<const Session* const> sessions,
                                    const baselines::StreamContext& context) {
  const std::int64_t trained = nar.trained_predictions();
  const double loss = nar.total_loss();
  for (const Session* session : sessions) nar.Update(*session, context);
  if (nar.trained_predictions() == trained) return std::nullopt;
  return (nar.total_loss() - loss) / static_cast<double>(nar.trained_predictions() - trained);
}

}  // namespace newsrec::nar
