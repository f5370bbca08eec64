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

#include "newsrec/nar/features.h"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace newsrec::nar {

ArticleContext ArticleContextFeatures(ArticleIndex article, Timestamp now,
                                      const baselines::PopularityTracker* tracker, const Catalog& catalog) {
  ArticleContext context;
  if (catalog.Contains(article)) {
    if (const auto& published = catalog.Get(article).publish_timestamp) {
      const double hours = std::max<double>(0.0, static_cast<double>(now - *published) / kSecondsPerHour);
      context.recency = std::clamp(std::log1p(hours) / std::log1p(kRecencyHorizonHours), 0.0, 1.0);
    }
  }
  if (tracker != nullptr) {
    const std::int64_t top = std::max<std::int64_t>(1, tracker->MaxCount(now));
    context.popularity = static_cast<double>(tracker->Count(article, now)) / static_cast<double>(top);
  }
  return context;
}

UserContext UserContextFeatures(const Click& click, std::size_t n_devices, std::size_t n_locations) {
  UserContext context;
  const Timestamp seconds_into_day = ((click.timestamp % kSecondsPerDay) + kSecondsPerDay) % kSecondsPerDay;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(seconds_into_day) / kSecondsPerDay;
  context.hour_sin = std::sin(angle);
  context.hour_cos = std::cos(angle);
  // 1970-01-01 was a Thursday.
  const Timestamp days = (click.timestamp - seconds_into_day) / kSecondsPerDay;
  context.weekday = static_cast<int>(((days + 3) % 7 + 7) % 7);
  const auto in_range = [](std::int32_t index, std::size_t size) {
    return index >= 0 && static_cast<std::size_t>(index) < size ? index : 0;
  };
  context.device = in_range(click.device, n_devices);
  context.location = in_range(click.location, n_locations);
  return context;
}

std::array<double, 9> TimeEncoding(const UserContext& context) {
  std::array<double, 9> encoding{};
  encoding[0] = context.hour_sin;
  encoding[1] = context.hour_cos;
  encoding[2 + static_cast<std::size_t>(context.weekday)] = 1.0;
  return encoding;
}

}  // namespace newsrec::nar
