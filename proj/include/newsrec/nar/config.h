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

#ifndef NEWSREC_NAR_CONFIG_H_
#define NEWSREC_NAR_CONFIG_H_

#include <cstddef>
#include <cstdint>

namespace newsrec::nar {

struct NarConfig {
  std::size_t hidden_dim = 64;
  double gamma = 5.0;  // fixed scale on the cosine relevance
  bool use_content = true;
  bool use_article_context = true;
  bool use_user_context = true;
  bool use_item_id = false;
  std::size_t negatives = 50;  // K training negatives per prediction
  double learning_rate = 1e-3;

  // Context vocabulary sizes, UNK included. Set from the dataset.
  std::size_t n_items = 0;
  std::size_t n_devices = 1;
  std::size_t n_locations = 1;

  std::size_t item_dim = 64;
  std::size_t device_dim = 4;
  std::size_t location_dim = 4;
  std::size_t time_dim = 8;

  // Candidates are scored against content vectors when content is an input,
  // and against a learned item output table otherwise.
  bool scores_with_content() const { return use_content; }
  // Throws ConfigError when no feature is enabled, K < 1, gamma <= 0, or a
  // required size is zero.
  void Validate() const;
};

// The content-free ablation: item ids in, learned item table out.
NarConfig Gru4RecLiteConfig(const NarConfig& base);

}  // namespace newsrec::nar

#endif  // NEWSREC_NAR_CONFIG_H_
