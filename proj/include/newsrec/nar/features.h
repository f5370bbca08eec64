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

#ifndef NEWSREC_NAR_FEATURES_H_
#define NEWSREC_NAR_FEATURES_H_

#include <array>
#include <cstdint>

#include "newsrec/baselines/popularity_tracker.h"
#include "newsrec/core/catalog.h"
#include "newsrec/core/types.h"

namespace newsrec::nar {

inline constexpr double kRecencyHorizonHours = 72.0;

struct ArticleContext {
  double recency = 1.0;     // ln(1 + hours since publish) / ln(1 + 72), clamped to [0, 1]
  double popularity = 0.0;  // window clicks / max(1, top article's window clicks)
};

// Articles outside the catalog or without a publish time count as old.
// A null tracker yields zero popularity.
ArticleContext ArticleContextFeatures(ArticleIndex article, Timestamp now,
                                      const baselines::PopularityTracker* tracker, const Catalog& catalog);

struct UserContext {
  double hour_sin = 0.0;
  double hour_cos = 1.0;
  int weekday = 0;  // 0 = Monday
  std::int32_t device = 0;
  std::int32_t location = 0;
};

// Time of day as an angle, weekday, and device/location indices. Indices at
// or beyond the vocabulary sizes fall back to UNK (0).
UserContext UserContextFeatures(const Click& click, std::size_t n_devices, std::size_t n_locations);

// sin, cos, then the weekday one-hot.
std::array<double, 9> TimeEncoding(const UserContext& context);

}  // namespace newsrec::nar

#endif  // NEWSREC_NAR_FEATURES_H_
