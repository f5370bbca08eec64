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

#include "newsrec/nar/config.h"

#include "newsrec/core/errors.h"

namespace newsrec::nar {

void NarConfig::Validate() const {
  if (!use_content && !use_article_context && !use_user_context && !use_item_id) {
    throw ConfigError("nar: at least one feature switch must be on");
  }
  if (negatives < 1) throw ConfigError("nar: negatives must be at least 1");
  if (!(gamma > 0.0)) throw ConfigError("nar: gamma must be positive");
  if (!(learning_rate > 0.0)) throw ConfigError("nar: learning_rate must be positive");
  if (hidden_dim == 0) throw ConfigError("nar: hidden_dim must be positive");
  if ((use_item_id || !scores_with_content()) && (n_items == 0 || item_dim == 0)) {
    throw ConfigError("nar: item tables need n_items and item_dim");
  }
  if (use_user_context && (n_devices == 0 || n_locations == 0 || device_dim == 0 || location_dim == 0 ||
                           time_dim == 0)) {
    throw ConfigError("nar: user context needs nonzero vocabulary sizes and dimensions");
  }
}

NarConfig Gru4RecLiteConfig(const NarConfig& base) {
  NarConfig config = base;
  config.use_content = false;
  config.use_article_context = false;
  config.use_user_context = false;
  config.use_item_id = true;
  return config;
}

}  // namespace newsrec::nar
