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

#include "newsrec/baselines/session_models.h"

#include <algorithm>
#include <cmath>

namespace newsrec::baselines {
namespace {

std::uint64_t PairKey(ArticleIndex i, ArticleIndex j) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(i)) << 32) | static_cast<std::uint32_t>(j);
}

ArticleIndex LastArticle(std::span<const Click> prefix) {
  return prefix.empty() ? -1 : prefix.back().article;
}

}  // namespace

void CoPresenceCounts::AddSession(const Session& session) {
  std::vector<ArticleIndex> items;
  for (const Click& click : session.clicks) items.push_back(click.article);
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  for (const ArticleIndex i : items) {
    ++sessions_[i];
    auto& row = pairs_[i];
    for (const ArticleIndex j : items) {
      if (i != j) ++row[j];
    }
  }
}

std::int64_t CoPresenceCounts::Sessions(ArticleIndex i) const {
  const auto it = sessions_.find(i);
  return it == sessions_.end() ? 0 : it->second;
}

std::int64_t CoPresenceCounts::Pair(ArticleIndex i, ArticleIndex j) const {
  const auto row = pairs_.find(i);
  if (row == pairs_.end()) return 0;
  const auto it = row->second.find(j);
  return it == row->second.end() ? 0 : it->second;
}

void CoPresenceCounts::HashInto(Hasher& hasher) const {
  UnorderedDigest digest;
  for (const auto& [i, n] : sessions_) digest.Add(i, n);
  for (const auto& [i, row] : pairs_) {
    for (const auto& [j, n] : row) digest.Add(PairKey(i, j), n);
  }
  digest.MixInto(hasher);
}

std::vector<double> CoOccurrence::Score(std::span<const Click> prefix, std::span<const ArticleIndex> candidates,
                                        const StreamContext&) const {
  const ArticleIndex last = LastArticle(prefix);
  std::vector<double> scores;
  scores.reserve(candidates.size());
  for (const ArticleIndex c : candidates) scores.push_back(static_cast<double>(counts_.Pair(last, c)));
  return scores;
}

void CoOccurrence::Learn(const Session& session, const StreamContext&) { counts_.AddSession(session); }

void CoOccurrence::HashModel(Hasher& hasher) const { counts_.HashInto(hasher); }

ItemKnn::ItemKnn(double lambda) : Recommender("Item-kNN"), lambda_(lambda) {}

std::vector<double> ItemKnn::Score(std::span<const Click> prefix, std::span<const ArticleIndex> candidates,
                                   const StreamContext&) const {
  const ArticleIndex last = LastArticle(prefix);
  const auto n_last = static_cast<double>(counts_.Sessions(last));
  std::vector<double> scores;
  scores.reserve(candidates.size());
  for (const ArticleIndex c : candidates) {
    const auto together = static_cast<double>(counts_.Pair(last, c));
    scores.push_back(together == 0.0
                         ? 0.0
                         : together / (std::sqrt(n_last * static_cast<double>(counts_.Sessions(c))) + lambda_));
  }
  return scores;
}

void ItemKnn::Learn(const Session& session, const StreamContext&) { counts_.AddSession(session); }

void ItemKnn::HashModel(Hasher& hasher) const {
  hasher.Add(lambda_);
  counts_.HashInto(hasher);
}

std::vector<double> SequentialRules::Score(std::span<const Click> prefix, std::span<const ArticleIndex> candidates,
                                           const StreamContext&) const {
  const ArticleIndex last = LastArticle(prefix);
  std::vector<double> scores;
  scores.reserve(candidates.size());
  for (const ArticleIndex c : candidates) scores.push_back(Weight(last, c));
  return scores;
}

double SequentialRules::Weight(ArticleIndex from, ArticleIndex to) const {
  const auto row = rules_.find(from);
  if (row == rules_.end()) return 0.0;
  const auto it = row->second.find(to);
  return it == row->second.end() ? 0.0 : it->second;
}

void SequentialRules::Learn(const Session& session, const StreamContext&) {
  const auto& clicks = session.clicks;
  for (std::size_t p = 0; p < clicks.size(); ++p) {
    for (std::size_t q = p + 1; q < clicks.size(); ++q) {
      if (clicks[p].article == clicks[q].article) continue;
      rules_[clicks[p].article][clicks[q].article] += 1.0 / static_cast<double>(q - p);
    }
  }
}

void SequentialRules::HashModel(Hasher& hasher) const {
  UnorderedDigest digest;
  for (const auto& [i, row] : rules_) {
    for (const auto& [j, w] : row) digest.Add(PairKey(i, j), w);
  }
  digest.MixInto(hasher);
}

}  // namespace newsrec::baselines
