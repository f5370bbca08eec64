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

#ifndef NEWSREC_CORE_SYNTHETIC_H_
#define NEWSREC_CORE_SYNTHETIC_H_

#include <cstdint>
#include <vector>

#include "newsrec/core/dataset.h"

namespace newsrec {

struct SyntheticConfig {
  std::int32_t n_articles = 200;
  std::int32_t n_hours = 30;
  std::int32_t sessions_per_hour = 100;
  // Session length is min_length plus a geometric number of extra clicks
  // (continue_prob per extra click), truncated at max_length.
  std::int32_t min_length = 2;
  std::int32_t max_length = 8;
  double continue_prob = 0.4;
  // Weight of the preferred-successor transition; the remaining mass is
  // spread uniformly over all other articles.
  double alpha = 0.8;
  std::int32_t n_categories = 8;
  std::int32_t vocab_size = 400;
  std::int32_t tokens_per_article = 12;
  // Probability that a content token comes from the article's category
  // block rather than the whole vocabulary. 1.0 makes tokens determine the
  // category.
  double category_token_purity = 0.8;
  // Adds identity tokens of the article and of its preferred successor, so
  // content similarity carries the sequential pattern.
  bool successor_tokens = false;
  std::int32_t n_users = 1000;
  std::int32_t n_devices = 3;
  std::int32_t n_locations = 10;
  Timestamp start_timestamp = 1'500'000'000 - 1'500'000'000 % kSecondsPerDay;
  Timestamp min_click_gap = 10;
  Timestamp max_click_gap = 300;

  // Throws ConfigError on out-of-range fields.
  void Validate() const;
};

struct SyntheticDataset {
  Dataset dataset;
  std::vector<ArticleIndex> successor;  // preferred successor per article
};

SyntheticDataset GenerateSyntheticDataset(const SyntheticConfig& config, std::uint64_t seed);

// All clicks of `sessions` in ascending timestamp order (stable by session).
std::vector<Click> FlattenClicks(const std::vector<Session>& sessions);

}  // namespace newsrec

#endif  // NEWSREC_CORE_SYNTHETIC_H_
