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

#ifndef NEWSREC_NAR_MODEL_H_
#define NEWSREC_NAR_MODEL_H_

#include <atomic>
#include <memory>
#include <span>
#include <vector>

#include "newsrec/acr/embedding_table.h"
#include "newsrec/baselines/popularity_tracker.h"
#include "newsrec/core/catalog.h"
#include "newsrec/nar/config.h"
#include "newsrec/tensor/parameters.h"
#include "newsrec/tensor/tape.h"

namespace newsrec::nar {

// Session encoder and scorer. Each click becomes the concatenation of the
// enabled feature blocks, fused by tanh(x W_f + b_f) and fed to a GRU in
// row-vector form:
//   z = sigmoid(x W_z + h U_z + b_z)   r = sigmoid(x W_r + h U_r + b_r)
//   c = tanh(x W_h + (r * h) U_h + b_h)   h' = (1 - z) * h + z * c
// The prediction is s = normalize(h W_o + b_o) and a candidate scores
// gamma * <s, e> with e its unit content vector or learned item vector.
class NarModel {
 public:
  // `content` may be null when the config does not use content. `catalog`
  // supplies publish times for the recency feature.
  NarModel(NarConfig config, std::shared_ptr<const acr::EmbeddingTable> content,
           std::shared_ptr<const Catalog> catalog, std::uint64_t seed);

  const NarConfig& config() const { return config_; }
  tensor::ParameterSet& params() { return params_; }
  const tensor::ParameterSet& params() const { return params_; }
  std::size_t output_dim() const { return output_dim_; }

  tensor::Var GruStep(tensor::Tape& tape, tensor::Var x, tensor::Var h) const;
  // Fused per-click inputs, one row per prefix click. Context features are
  // evaluated at `clock`.
  tensor::Var FusedInputs(tensor::Tape& tape, std::span<const Click> prefix, Timestamp clock,
                          const baselines::PopularityTracker* tracker) const;
  // Unit-normalized prediction [1, output_dim]. Throws on an empty prefix.
  tensor::Var Predict(tensor::Tape& tape, std::span<const Click> prefix, Timestamp clock,
                      const baselines::PopularityTracker* tracker) const;
  // gamma * <s, e_c> for every candidate, [1, candidates].
  tensor::Var Logits(tensor::Tape& tape, tensor::Var prediction, std::span<const ArticleIndex> candidates) const;
  // Sampled softmax loss with the positive at candidates[0].
  tensor::Var Loss(tensor::Tape& tape, std::span<const Click> prefix, std::span<const ArticleIndex> candidates,
                   Timestamp clock, const baselines::PopularityTracker* tracker) const;

  std::vector<double> Score(std::span<const Click> prefix, std::span<const ArticleIndex> candidates, Timestamp clock,
                            const baselines::PopularityTracker* tracker) const;

  // Candidates scored without a content vector since construction.
  std::int64_t missing_embeddings() const { return missing_embeddings_.load(); }

 private:
  NarConfig config_;
  std::shared_ptr<const acr::EmbeddingTable> content_;
  std::shared_ptr<const Catalog> catalog_;
  std::size_t output_dim_ = 0;
  tensor::ParameterSet params_;
  tensor::ParamId item_in_{}, item_out_{};
  tensor::ParamId time_w_{}, time_b_{}, device_{}, location_{};
  tensor::ParamId fuse_w_{}, fuse_b_{};
  tensor::ParamId w_z_{}, u_z_{}, b_z_{}, w_r_{}, u_r_{}, b_r_{}, w_h_{}, u_h_{}, b_h_{};
  tensor::ParamId out_w_{}, out_b_{};
  mutable std::atomic<std::int64_t> missing_embeddings_{0};
};

// -log softmax(scores)[positive], computed stably. Throws when there is no
// negative.
double NarLoss(std::span<const double> scores, std::size_t positive);

}  // namespace newsrec::nar

#endif  // NEWSREC_NAR_MODEL_H_
