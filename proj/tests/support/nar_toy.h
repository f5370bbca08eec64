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

#ifndef NEWSREC_TESTS_SUPPORT_NAR_TOY_H_
#define NEWSREC_TESTS_SUPPORT_NAR_TOY_H_

#include <cstdint>
#include <memory>
#include <vector>

#include "newsrec/acr/embedding_table.h"
#include "newsrec/baselines/popularity_tracker.h"
#include "newsrec/core/catalog.h"
#include "newsrec/core/rng.h"
#include "newsrec/nar/config.h"
#include "newsrec/nar/model.h"
#include "newsrec/tensor/grad_check.h"

namespace newsrec::testing {

inline constexpr Timestamp kMonday = 1'500'249'600;  // 2017-07-17 00:00 UTC

inline Click At(Timestamp t, ArticleIndex article = 0, std::int32_t device = 1, std::int32_t location = 1) {
  Click click;
  click.timestamp = t;
  click.article = article;
  click.device = device;
  click.location = location;
  return click;
}

// A handful of articles with unit content vectors.
struct Toy {
  std::shared_ptr<acr::EmbeddingTable> content;
  std::shared_ptr<Catalog> catalog;
  nar::NarConfig config;
};

inline Toy MakeToy(std::size_t articles, std::size_t dim, std::size_t hidden, std::uint64_t seed) {
  Rng rng(seed);
  Toy toy;
  toy.content = std::make_shared<acr::EmbeddingTable>(dim, true);
  toy.catalog = std::make_shared<Catalog>();
  for (std::size_t a = 0; a < articles; ++a) {
    std::vector<double> v(dim);
    for (double& x : v) x = rng.Normal(0.0, 1.0);
    toy.content->Set(static_cast<ArticleIndex>(a), v);
    Article article;
    article.id = static_cast<ArticleIndex>(a);
    article.publish_timestamp = kMonday - static_cast<Timestamp>(rng.UniformInt(100 * 3600));
    toy.catalog->Add(article);
  }
  toy.content->NormalizeRows();
  toy.config.hidden_dim = hidden;
  toy.config.n_items = articles;
  toy.config.item_dim = dim;
  toy.config.n_devices = 3;
  toy.config.n_locations = 3;
  toy.config.device_dim = 2;
  toy.config.location_dim = 2;
  toy.config.time_dim = 3;
  return toy;
}

// Largest relative finite-difference error of the full NAR loss on a toy
// problem: 6 articles, d_h = d_a = 8, K = 3.
inline double EndToEndError(const nar::NarConfig& config, std::uint64_t seed) {
  Toy toy = MakeToy(6, 8, 8, seed);
  nar::NarModel model(config, toy.content, toy.catalog, seed);
  baselines::PopularityTracker tracker(3600);
  for (int i = 0; i < 10; ++i) tracker.Add(kMonday - 1000 + i, static_cast<ArticleIndex>(i % 4));
  const std::vector<Click> prefix = {At(kMonday, 0, 1, 2), At(kMonday + 40, 3, 2, 1), At(kMonday + 90, 5, 0, 2)};
  const std::vector<ArticleIndex> candidates = {1, 2, 4, 3};  // positive + K = 3
  const auto build = [&](tensor::Tape& tape) { return model.Loss(tape, prefix, candidates, kMonday + 120, &tracker); };
  return tensor::GradCheck(build, model.params(), 1e-5).max_relative_error;
}

}  // namespace newsrec::testing

#endif  // NEWSREC_TESTS_SUPPORT_NAR_TOY_H_
