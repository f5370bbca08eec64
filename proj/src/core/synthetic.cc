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

#include "newsrec/core/synthetic.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "newsrec/core/errors.h"
#include "newsrec/core/rng.h"

namespace newsrec {

void SyntheticConfig::Validate() const {
  const auto require = [](bool ok, const char* what) {
    if (!ok) throw ConfigError(std::string("synthetic config: ") + what);
  };
  require(alpha >= 0.0 && alpha <= 1.0, "alpha must lie in [0, 1]");
  require(n_articles >= 2, "n_articles must be at least 2");
  require(n_hours >= 1, "n_hours must be positive");
  require(sessions_per_hour >= 1, "sessions_per_hour must be positive");
  require(min_length >= 2 && max_length >= min_length, "need 2 <= min_length <= max_length");
  require(continue_prob >= 0.0 && continue_prob < 1.0, "continue_prob must lie in [0, 1)");
  require(n_categories >= 1, "n_categories must be positive");
  require(vocab_size >= n_categories, "vocab_size must be at least n_categories");
  require(tokens_per_article >= 1, "tokens_per_article must be positive");
  require(category_token_purity >= 0.0 && category_token_purity <= 1.0,
          "category_token_purity must lie in [0, 1]");
  require(n_users >= 1 && n_devices >= 1 && n_locations >= 1, "user/device/location counts must be positive");
  require(start_timestamp > 0, "start_timestamp must be positive");
  require(min_click_gap >= 1 && max_click_gap >= min_click_gap, "need 1 <= min_click_gap <= max_click_gap");
}

SyntheticDataset GenerateSyntheticDataset(const SyntheticConfig& config, std::uint64_t seed) {
  config.Validate();
  Rng rng(seed);
  SyntheticDataset out;
  Dataset& dataset = out.dataset;
  dataset.start = config.start_timestamp;

  const auto n = config.n_articles;
  std::vector<ArticleIndex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = order.size() - 1; i > 0; --i) {
    std::swap(order[i], order[rng.UniformInt(i + 1)]);
  }
  // One cycle through all articles: every article has a distinct successor
  // and the chain never stays in place.
  out.successor.assign(static_cast<std::size_t>(n), 0);
  for (std::size_t k = 0; k < order.size(); ++k) {
    out.successor[order[k]] = order[(k + 1) % order.size()];
  }

  const std::int32_t block = config.vocab_size / config.n_categories;
  const Timestamp horizon = static_cast<Timestamp>(config.n_hours) * kSecondsPerHour;
  for (ArticleIndex i = 0; i < n; ++i) {
    Article article;
    article.id = dataset.vocab.articles.Intern("a" + std::to_string(i));
    const auto category = static_cast<std::int32_t>(rng.UniformInt(config.n_categories));
    article.category = dataset.vocab.categories.Intern("c" + std::to_string(category));
    article.publish_timestamp = config.start_timestamp - 1 - static_cast<Timestamp>(rng.UniformInt(horizon));
    for (std::int32_t t = 0; t < config.tokens_per_article; ++t) {
      std::int32_t word;
      if (rng.Bernoulli(config.category_token_purity)) {
        word = category * block + static_cast<std::int32_t>(rng.UniformInt(block));
      } else {
        word = static_cast<std::int32_t>(rng.UniformInt(config.vocab_size));
      }
      article.tokens.push_back("w" + std::to_string(word));
    }
    if (config.successor_tokens) {
      article.tokens.push_back("id" + std::to_string(i));
      article.tokens.push_back("id" + std::to_string(out.successor[i]));
    }
    dataset.catalog.Add(std::move(article));
  }

  std::int64_t next_session = 0;
  for (std::int32_t hour = 0; hour < config.n_hours; ++hour) {
    for (std::int32_t s = 0; s < config.sessions_per_hour; ++s) {
      Session session;
      session.session = dataset.vocab.sessions.Intern("s" + std::to_string(next_session++));
      session.user = dataset.vocab.users.Intern("u" + std::to_string(rng.UniformInt(config.n_users)));
      const auto device = dataset.vocab.devices.Intern("d" + std::to_string(rng.UniformInt(config.n_devices)));
      const auto location =
          dataset.vocab.locations.Intern("l" + std::to_string(rng.UniformInt(config.n_locations)));
      std::int32_t length = config.min_length;
      while (length < config.max_length && rng.Bernoulli(config.continue_prob)) ++length;

      Timestamp t = config.start_timestamp + static_cast<Timestamp>(hour) * kSecondsPerHour +
                    static_cast<Timestamp>(rng.UniformInt(kSecondsPerHour));
      auto article = static_cast<ArticleIndex>(rng.UniformInt(n));
      for (std::int32_t k = 0; k < length; ++k) {
        if (k > 0) {
          t += config.min_click_gap +
               static_cast<Timestamp>(rng.UniformInt(config.max_click_gap - config.min_click_gap + 1));
          if (rng.Bernoulli(config.alpha)) {
            article = out.successor[article];
          } else {
            auto other = static_cast<ArticleIndex>(rng.UniformInt(n - 1));
            article = other >= article ? other + 1 : other;
          }
        }
        session.clicks.push_back(Click{t, session.user, session.session, article, device, location});
      }
      dataset.sessions.push_back(std::move(session));
    }
  }
  std::stable_sort(dataset.sessions.begin(), dataset.sessions.end(),
                   [](const Session& a, const Session& b) { return a.start() < b.start(); });
  return out;
}

std::vector<Click> FlattenClicks(const std::vector<Session>& sessions) {
  std::vector<Click> clicks;
  for (const Session& session : sessions) {
    clicks.insert(clicks.end(), session.clicks.begin(), session.clicks.end());
  }
  std::stable_sort(clicks.begin(), clicks.end(),
                   [](const Click& a, const Click& b) { return a.timestamp < b.timestamp; });
  return clicks;
}

}  // namespace newsrec
