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

#include "newsrec/nar/model.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "newsrec/core/errors.h"
#include "newsrec/core/rng.h"
#include "newsrec/nar/features.h"

namespace newsrec::nar {

using tensor::Tape;
using tensor::Tensor;
using tensor::Var;

NarModel::NarModel(NarConfig config, std::shared_ptr<const acr::EmbeddingTable> content,
                   std::shared_ptr<const Catalog> catalog, std::uint64_t seed)
    : config_(config), content_(std::move(content)), catalog_(std::move(catalog)) {
  config_.Validate();
  if (config_.use_content && content_ == nullptr) throw ConfigError("nar: content features need an embedding table");
  if (config_.use_article_context && catalog_ == nullptr) throw ConfigError("nar: article context needs a catalog");
  Rng rng(seed);
  const std::size_t h = config_.hidden_dim;
  std::size_t input = 0;
  if (config_.use_content) input += content_->dim();
  if (config_.use_article_context) input += 2;
  if (config_.use_user_context) {
    time_w_ = params_.Add("nar/time_w", tensor::GlorotUniform(9, config_.time_dim, rng));
    time_b_ = params_.Add("nar/time_b", Tensor::Zeros(1, config_.time_dim));
    device_ = params_.Add("nar/device", tensor::NormalInit(config_.n_devices, config_.device_dim, 0.1, rng));
    location_ = params_.Add("nar/location", tensor::NormalInit(config_.n_locations, config_.location_dim, 0.1, rng));
    input += config_.time_dim + config_.device_dim + config_.location_dim;
  }
  if (config_.use_item_id) {
    item_in_ = params_.Add("nar/item_in", tensor::NormalInit(config_.n_items, config_.item_dim, 0.1, rng));
    input += config_.item_dim;
  }
  fuse_w_ = params_.Add("nar/fuse_w", tensor::GlorotUniform(input, h, rng));
  fuse_b_ = params_.Add("nar/fuse_b", Tensor::Zeros(1, h));
  const auto gate = [&](const char* name, tensor::ParamId& w, tensor::ParamId& u, tensor::ParamId& b) {
    w = params_.Add(std::string("nar/w_") + name, tensor::GlorotUniform(h, h, rng));
    u = params_.Add(std::string("nar/u_") + name, tensor::GlorotUniform(h, h, rng));
    b = params_.Add(std::string("nar/b_") + name, Tensor::Zeros(1, h));
  };
  gate("z", w_z_, u_z_, b_z_);
  gate("r", w_r_, u_r_, b_r_);
  gate("h", w_h_, u_h_, b_h_);
  output_dim_ = config_.scores_with_content() ? content_->dim() : config_.item_dim;
  out_w_ = params_.Add("nar/out_w", tensor::GlorotUniform(h, output_dim_, rng));
  out_b_ = params_.Add("nar/out_b", Tensor::Zeros(1, output_dim_));
  if (!config_.scores_with_content()) {
    item_out_ = params_.Add("nar/item_out", tensor::NormalInit(config_.n_items, config_.item_dim, 0.1, rng));
  }
}

Var NarModel::GruStep(Tape& tape, Var x, Var h) const {
  const auto affine = [&](Var in, tensor::ParamId w, Var state, tensor::ParamId u, tensor::ParamId b) {
    return tape.Add(tape.Add(tape.MatMul(in, tape.Param(w)), tape.MatMul(state, tape.Param(u))), tape.Param(b));
  };
  const Var z = tape.Sigmoid(affine(x, w_z_, h, u_z_, b_z_));
  const Var r = tape.Sigmoid(affine(x, w_r_, h, u_r_, b_r_));
  const Var candidate = tape.Tanh(affine(x, w_h_, tape.Multiply(r, h), u_h_, b_h_));
  return tape.Add(h, tape.Multiply(z, tape.Subtract(candidate, h)));
}

namespace {

std::size_t ItemRow(ArticleIndex article, std::size_t n_items) {
  if (article < 0 || static_cast<std::size_t>(article) >= n_items) {
    throw std::out_of_range("article index " + std::to_string(article) + " outside the item table");
  }
  return static_cast<std::size_t>(article);
}

}  // namespace

Var NarModel::FusedInputs(Tape& tape, std::span<const Click> prefix, Timestamp clock,
                          const baselines::PopularityTracker* tracker) const {
  const std::size_t length = prefix.size();
  std::vector<Var> parts;
  if (config_.use_content) {
    Tensor content = Tensor::Zeros(length, content_->dim());
    for (std::size_t j = 0; j < length; ++j) {
      const auto e = content_->Get(prefix[j].article);
      std::copy(e.begin(), e.end(), content.row(j).begin());
    }
    parts.push_back(tape.Constant(std::move(content)));
  }
  if (config_.use_article_context) {
    Tensor context = Tensor::Zeros(length, 2);
    for (std::size_t j = 0; j < length; ++j) {
      const ArticleContext a = ArticleContextFeatures(prefix[j].article, clock, tracker, *catalog_);
      context(j, 0) = a.recency;
      context(j, 1) = a.popularity;
    }
    parts.push_back(tape.Constant(std::move(context)));
  }
  if (config_.use_user_context) {
    Tensor time = Tensor::Zeros(length, 9);
    std::vector<std::size_t> devices;
    std::vector<std::size_t> locations;
    for (std::size_t j = 0; j < length; ++j) {
      const UserContext u = UserContextFeatures(prefix[j], config_.n_devices, config_.n_locations);
      const auto encoding = TimeEncoding(u);
      std::copy(encoding.begin(), encoding.end(), time.row(j).begin());
      devices.push_back(static_cast<std::size_t>(u.device));
      locations.push_back(static_cast<std::size_t>(u.location));
    }
    parts.push_back(tape.Tanh(tape.Add(tape.MatMul(tape.Constant(std::move(time)), tape.Param(time_w_)),
                                       tape.Param(time_b_))));
    parts.push_back(tape.RowLookup(tape.Param(device_), std::move(devices)));
    parts.push_back(tape.RowLookup(tape.Param(location_), std::move(locations)));
  }
  if (config_.use_item_id) {
    std::vector<std::size_t> rows;
    for (const Click& click : prefix) rows.push_back(ItemRow(click.article, config_.n_items));
    parts.push_back(tape.RowLookup(tape.Param(item_in_), std::move(rows)));
  }
  const Var joined = parts.size() == 1 ? parts.front() : tape.Concat(parts);
  return tape.Tanh(tape.Add(tape.MatMul(joined, tape.Param(fuse_w_)), tape.Param(fuse_b_)));
}

Var NarModel::Predict(Tape& tape, std::span<const Click> prefix, Timestamp clock,
                      const baselines::PopularityTracker* tracker) const {
  if (prefix.empty()) throw std::invalid_argument("nar: cannot predict from an empty prefix");
  const Var inputs = FusedInputs(tape, prefix, clock, tracker);
  Var h = tape.Constant(Tensor::Zeros(1, config_.hidden_dim));
  for (std::size_t j = 0; j < prefix.size(); ++j) h = GruStep(tape, tape.RowLookup(inputs, {j}), h);
  return tape.L2Normalize(tape.Add(tape.MatMul(h, tape.Param(out_w_)), tape.Param(out_b_)));
}

Var NarModel::Logits(Tape& tape, Var prediction, std::span<const ArticleIndex> candidates) const {
  Var targets;
  if (config_.scores_with_content()) {
    Tensor e = Tensor::Zeros(candidates.size(), output_dim_);
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const auto vector = content_->Get(candidates[c]);
      if (vector.empty()) {
        ++missing_embeddings_;
        continue;
      }
      std::copy(vector.begin(), vector.end(), e.row(c).begin());
    }
    targets = tape.Constant(std::move(e));
  } else {
    std::vector<std::size_t> rows;
    for (const ArticleIndex c : candidates) rows.push_back(ItemRow(c, config_.n_items));
    targets = tape.L2Normalize(tape.RowLookup(tape.Param(item_out_), std::move(rows)));
  }
  return tape.Scale(tape.MatMulTransposeB(prediction, targets), config_.gamma);
}

Var NarModel::Loss(Tape& tape, std::span<const Click> prefix, std::span<const ArticleIndex> candidates,
                   Timestamp clock, const baselines::PopularityTracker* tracker) const {
  if (candidates.size() < 2) throw std::invalid_argument("nar: the loss needs at least one negative");
  return tape.SoftmaxCrossEntropy(Logits(tape, Predict(tape, prefix, clock, tracker), candidates), {0});
}

std::vector<double> NarModel::Score(std::span<const Click> prefix, std::span<const ArticleIndex> candidates,
                                    Timestamp clock, const baselines::PopularityTracker* tracker) const {
  Tape tape(&params_);
  const auto values = tape.value(Logits(tape, Predict(tape, prefix, clock, tracker), candidates)).values();
  return {values.begin(), values.end()};
}

double NarLoss(std::span<const double> scores, std::size_t positive) {
  if (scores.size() < 2) throw std::invalid_argument("nar loss needs at least one negative");
  if (positive >= scores.size()) throw std::invalid_argument("positive position out of range");
  Tape tape;
  const Var logits = tape.Constant(Tensor({1, scores.size()}, std::vector<double>(scores.begin(), scores.end())));
  return tape.scalar(tape.SoftmaxCrossEntropy(logits, {positive}));
}

}  // namespace newsrec::nar
