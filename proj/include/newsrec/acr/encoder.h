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

#ifndef NEWSREC_ACR_ENCODER_H_
#define NEWSREC_ACR_ENCODER_H_

#include <cstdint>
#include <span>
#include <vector>

#include "newsrec/acr/embedding_table.h"
#include "newsrec/acr/word_vectors.h"
#include "newsrec/core/catalog.h"
#include "newsrec/tensor/parameters.h"
#include "newsrec/tensor/tape.h"

namespace newsrec::acr {

struct AcrConfig {
  std::size_t word_dim = 50;
  std::size_t embedding_dim = 64;
  int epochs = 5;
  double learning_rate = 0.01;
  std::size_t batch_size = 16;
  double holdout_fraction = 0.1;
};

// Article content encoder: tanh(mean(word vectors) * W + b), followed during
// training by a softmax category classifier on top of the embedding.
class AcrEncoder {
 public:
  AcrEncoder(std::size_t word_dim, std::size_t embedding_dim, std::size_t n_categories, Rng& rng);

  std::vector<double> Encode(const Article& article, const WordVectorTable& words) const;

  // Batched graph pieces: `means` is [batch, word_dim].
  tensor::Var EncodeOnTape(tensor::Tape& tape, tensor::Tensor means) const;
  tensor::Var ClassifierLogits(tensor::Tape& tape, tensor::Var embeddings) const;

  tensor::ParameterSet& params() { return params_; }
  const tensor::ParameterSet& params() const { return params_; }
  std::size_t embedding_dim() const { return embedding_dim_; }
  std::size_t word_dim() const { return word_dim_; }

 private:
  std::size_t word_dim_;
  std::size_t embedding_dim_;
  tensor::ParameterSet params_;
  tensor::ParamId projection_;
  tensor::ParamId projection_bias_;
  tensor::ParamId classifier_;
  tensor::ParamId classifier_bias_;
};

struct AcrTrainingResult {
  AcrEncoder encoder;
  double heldout_accuracy = 0.0;
  std::vector<double> epoch_losses;  // mean training loss per epoch
};

// Trains on category prediction with Adam. Articles without tokens or with
// the UNK category are ignored. A seeded `holdout_fraction` split is held
// out for the reported accuracy. Fewer than two categories throws DataError.
AcrTrainingResult TrainAcr(std::span<const Article> articles, const WordVectorTable& words,
                           std::size_t n_categories, const AcrConfig& config, std::uint64_t seed);

// One vector per catalog article, unit-normalized when requested. Articles
// without tokens (stubs) get the encoding of the UNK word vector.
EmbeddingTable ExportEmbeddings(const AcrEncoder& encoder, const WordVectorTable& words, const Catalog& catalog,
                                bool normalize);

}  // namespace newsrec::acr

#endif  // NEWSREC_ACR_ENCODER_H_
