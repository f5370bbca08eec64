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

#include "newsrec/acr/encoder.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "newsrec/core/errors.h"
#include "newsrec/core/vocabulary.h"
#include "newsrec/tensor/adam.h"

namespace newsrec::acr {

using tensor::Tape;
using tensor::Tensor;
using tensor::Var;

AcrEncoder::AcrEncoder(std::size_t word_dim, std::size_t embedding_dim, std::size_t n_categories, Rng& rng)
    : word_dim_(word_dim), embedding_dim_(embedding_dim) {
  projection_ = params_.Add("acr/projection", tensor::GlorotUniform(word_dim, embedding_dim, rng));
  projection_bias_ = params_.Add("acr/projection_bias", Tensor::Zeros(1, embedding_dim));
  classifier_ = params_.Add("acr/classifier", tensor::GlorotUniform(embedding_dim, n_categories, rng));
  classifier_bias_ = params_.Add("acr/classifier_bias", Tensor::Zeros(1, n_categories));
}

Var AcrEncoder::EncodeOnTape(Tape& tape, Tensor means) const {
  const Var x = tape.Constant(std::move(means));
  return tape.Tanh(tape.Add(tape.MatMul(x, tape.Param(projection_)), tape.Param(projection_bias_)));
}

Var AcrEncoder::ClassifierLogits(Tape& tape, Var embeddings) const {
  return tape.Add(tape.MatMul(embeddings, tape.Param(classifier_)), tape.Param(classifier_bias_));
}

std::vector<double> AcrEncoder::Encode(const Article& article, const WordVectorTable& words) const {
  Tape tape(&params_);
  const Var out = EncodeOnTape(tape, Tensor::Row(words.Mean(article.tokens)));
  const auto values = tape.value(out).values();
  return {values.begin(), values.end()};
}

AcrTrainingResult TrainAcr(std::span<const Article> articles, const WordVectorTable& words,
                           std::size_t n_categories, const AcrConfig& config, std::uint64_t seed) {
  std::vector<const Article*> usable;
  std::set<std::int32_t> categories;
  for (const Article& article : articles) {
    if (article.tokens.empty() || article.category == Vocabulary::kUnk) continue;
    if (article.category < 0 || static_cast<std::size_t>(article.category) >= n_categories) {
      throw std::invalid_argument("acr: category index out of range");
    }
    usable.push_back(&article);
    categories.insert(article.category);
  }
  if (categories.size() < 2) {
    throw DataError("acr: category prediction needs at least two categories, found " +
                    std::to_string(categories.size()));
  }

  Rng rng(seed);
  AcrTrainingResult result{AcrEncoder(words.dim(), config.embedding_dim, n_categories, rng), 0.0, {}};
  AcrEncoder& encoder = result.encoder;

  std::vector<std::vector<double>> means;
  means.reserve(usable.size());
  for (const Article* article : usable) means.push_back(words.Mean(article->tokens));

  std::vector<std::size_t> order(usable.size());
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = order.size() - 1; i > 0; --i) std::swap(order[i], order[rng.UniformInt(i + 1)]);
  const auto holdout = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(config.holdout_fraction * static_cast<double>(order.size()))));
  const std::vector<std::size_t> heldout(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(holdout));
  std::vector<std::size_t> train(order.begin() + static_cast<std::ptrdiff_t>(holdout), order.end());

  const auto batch_tensor = [&](std::span<const std::size_t> rows) {
    Tensor batch = Tensor::Zeros(rows.size(), words.dim());
    for (std::size_t r = 0; r < rows.size(); ++r) std::copy(means[rows[r]].begin(), means[rows[r]].end(), batch.row(r).begin());
    return batch;
  };

  tensor::Adam adam({config.learning_rate}, encoder.params());
  const std::size_t batch_size = std::max<std::size_t>(1, config.batch_size);
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    for (std::size_t i = train.size(); i-- > 1;) std::swap(train[i], train[rng.UniformInt(i + 1)]);
    double epoch_loss = 0.0;
    for (std::size_t begin = 0; begin < train.size(); begin += batch_size) {
      const std::span<const std::size_t> rows(train.data() + begin, std::min(batch_size, train.size() - begin));
      std::vector<std::size_t> targets;
      for (const std::size_t row : rows) targets.push_back(static_cast<std::size_t>(usable[row]->category));
      Tape tape(&encoder.params());
      const Var logits = encoder.ClassifierLogits(tape, encoder.EncodeOnTape(tape, batch_tensor(rows)));
      const Var total = tape.SoftmaxCrossEntropy(logits, std::move(targets));
      const Var loss = tape.Scale(total, 1.0 / static_cast<double>(rows.size()));
      epoch_loss += tape.scalar(total);
      tensor::Gradients grads = tensor::ZeroGradients(encoder.params());
      tape.Backward(loss, grads);
      adam.Step(encoder.params(), grads);
    }
    result.epoch_losses.push_back(train.empty() ? 0.0 : epoch_loss / static_cast<double>(train.size()));
  }

  std::size_t correct = 0;
  Tape tape(&encoder.params());
  const Tensor& logits = tape.value(encoder.ClassifierLogits(tape, encoder.EncodeOnTape(tape, batch_tensor(heldout))));
  for (std::size_t r = 0; r < heldout.size(); ++r) {
    const auto row = logits.row(r);
    const auto predicted = static_cast<std::int32_t>(std::max_element(row.begin(), row.end()) - row.begin());
    if (predicted == usable[heldout[r]]->category) ++correct;
  }
  result.heldout_accuracy = static_cast<double>(correct) / static_cast<double>(heldout.size());
  return result;
}

EmbeddingTable ExportEmbeddings(const AcrEncoder& encoder, const WordVectorTable& words, const Catalog& catalog,
                                bool normalize) {
  EmbeddingTable table(encoder.embedding_dim(), false);
  for (const Article& article : catalog.articles()) {
    table.Set(article.id, encoder.Encode(article, words));
  }
  if (normalize) table.NormalizeRows();
  return table;
}

}  // namespace newsrec::acr
