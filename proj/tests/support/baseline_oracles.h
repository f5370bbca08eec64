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

#ifndef NEWSREC_TESTS_SUPPORT_BASELINE_ORACLES_H_
#define NEWSREC_TESTS_SUPPORT_BASELINE_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "newsrec/baselines/popularity_tracker.h"
#include "newsrec/baselines/recently_popular.h"
#include "newsrec/baselines/session_models.h"
#include "newsrec/baselines/vsknn.h"
#include "newsrec/core/rng.h"
#include "newsrec/core/types.h"

namespace newsrec::testing {

inline Session MakeSession(std::int32_t id, const std::vector<ArticleIndex>& items, Timestamp start = 0,
                           Timestamp gap = 60) {
  Session session;
  session.session = id;
  for (std::size_t p = 0; p < items.size(); ++p) {
    Click click;
    click.timestamp = start + static_cast<Timestamp>(p) * gap;
    click.session = id;
    click.article = items[p];
    session.clicks.push_back(click);
  }
  return session;
}

inline std::vector<Click> Prefix(const std::vector<ArticleIndex>& items) { return MakeSession(-1, items).clicks; }

// Brute-force scorers over raw item sequences. They share no code with the
// library and recompute everything from scratch per query.
inline double OracleCo(const std::vector<std::vector<ArticleIndex>>& sessions, ArticleIndex last, ArticleIndex c) {
  if (last == c) return 0.0;
  double count = 0.0;
  for (const auto& s : sessions) {
    const bool has_last = std::find(s.begin(), s.end(), last) != s.end();
    const bool has_c = std::find(s.begin(), s.end(), c) != s.end();
    if (has_last && has_c) count += 1.0;
  }
  return count;
}

inline double OracleSr(const std::vector<std::vector<ArticleIndex>>& sessions, ArticleIndex last, ArticleIndex c) {
  double weight = 0.0;
  for (const auto& s : sessions) {
    for (std::size_t p = 0; p < s.size(); ++p) {
      for (std::size_t q = p + 1; q < s.size(); ++q) {
        if (s[p] == last && s[q] == c && s[p] != s[q]) weight += 1.0 / static_cast<double>(q - p);
      }
    }
  }
  return weight;
}

inline double OracleItemKnn(const std::vector<std::vector<ArticleIndex>>& sessions, ArticleIndex last,
                            ArticleIndex c, double lambda) {
  double n_last = 0.0;
  double n_c = 0.0;
  for (const auto& s : sessions) {
    if (std::find(s.begin(), s.end(), last) != s.end()) n_last += 1.0;
    if (std::find(s.begin(), s.end(), c) != s.end()) n_c += 1.0;
  }
  const double together = OracleCo(sessions, last, c);
  if (together == 0.0) return 0.0;
  return together / (std::sqrt(n_last * n_c) + lambda);
}

// Full scan over the last `m` sessions, no inverted index.
inline std::vector<double> OracleVsknn(const std::vector<std::vector<ArticleIndex>>& sessions, std::size_t m,
                                       std::size_t k, const std::vector<ArticleIndex>& prefix,
                                       const std::vector<ArticleIndex>& candidates) {
  std::map<ArticleIndex, double> weight;  // ascending article id
  for (std::size_t p = 0; p < prefix.size(); ++p) {
    weight[prefix[p]] = static_cast<double>(p + 1) / static_cast<double>(prefix.size());
  }
  struct Neighbor {
    std::size_t age_rank;  // larger is more recent
    double sim;
    std::set<ArticleIndex> items;
  };
  std::vector<Neighbor> neighbors;
  const std::size_t first = sessions.size() > m ? sessions.size() - m : 0;
  for (std::size_t s = first; s < sessions.size(); ++s) {
    const std::set<ArticleIndex> items(sessions[s].begin(), sessions[s].end());
    double sim = 0.0;
    bool shared = false;
    for (const auto& [article, w] : weight) {
      if (items.contains(article)) {
        sim += w;
        shared = true;
      }
    }
    if (shared) neighbors.push_back({s, sim, items});
  }
  std::sort(neighbors.begin(), neighbors.end(), [](const Neighbor& a, const Neighbor& b) {
    return a.sim != b.sim ? a.sim > b.sim : a.age_rank > b.age_rank;
  });
  if (neighbors.size() > k) neighbors.resize(k);
  std::vector<double> scores(candidates.size(), 0.0);
  for (const Neighbor& n : neighbors) {
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      if (n.items.contains(candidates[c])) scores[c] += n.sim;
    }
  }
  return scores;
}

inline std::int64_t OracleWindowCount(const std::vector<std::pair<Timestamp, ArticleIndex>>& clicks,
                                      ArticleIndex article, Timestamp at, Timestamp window) {
  std::int64_t count = 0;
  for (const auto& [t, a] : clicks) {
    if (a == article && t >= at - window && t <= at) ++count;
  }
  return count;
}

// One random corpus of at most 50 sessions checked against every oracle.
// Returns the number of score mismatches (0 means exact agreement).
inline std::int64_t BaselineOracleMismatches(std::uint64_t seed) {
  Rng rng(seed);
  const auto n_articles = static_cast<ArticleIndex>(4 + rng.UniformInt(20));
  const std::size_t n_sessions = 1 + rng.UniformInt(50);
  std::vector<std::vector<ArticleIndex>> corpus;
  baselines::CoOccurrence co;
  baselines::SequentialRules sr;
  const double lambda = rng.Bernoulli(0.5) ? 0.0 : 20.0 * rng.Uniform();
  baselines::ItemKnn knn(lambda);
  const std::size_t m = 1 + rng.UniformInt(60);
  const std::size_t k = 1 + rng.UniformInt(30);
  baselines::Vsknn vsknn({m, k});
  const Timestamp window = 60 * static_cast<Timestamp>(1 + rng.UniformInt(120));
  baselines::PopularityTracker tracker(window);
  baselines::RecentlyPopular rp;
  std::vector<std::pair<Timestamp, ArticleIndex>> raw_clicks;
  Timestamp t = 0;
  for (std::size_t s = 0; s < n_sessions; ++s) {
    std::vector<ArticleIndex> items;
    const std::size_t length = 2 + rng.UniformInt(7);
    for (std::size_t p = 0; p < length; ++p) items.push_back(static_cast<ArticleIndex>(rng.UniformInt(n_articles)));
    corpus.push_back(items);
    const Session session = MakeSession(static_cast<std::int32_t>(s), items, t, 30);
    for (const Click& click : session.clicks) {
      tracker.Add(click.timestamp, click.article);
      raw_clicks.emplace_back(click.timestamp, click.article);
    }
    t += static_cast<Timestamp>(30 * length + rng.UniformInt(600));
    for (baselines::Recommender* r : std::initializer_list<baselines::Recommender*>{&co, &sr, &knn, &vsknn, &rp}) {
      r->Update(session, {});
    }
  }
  std::vector<ArticleIndex> all(static_cast<std::size_t>(n_articles + 1));
  for (ArticleIndex a = 0; a <= n_articles; ++a) all[static_cast<std::size_t>(a)] = a;  // includes one unseen id
  std::int64_t mismatches = 0;
  for (int query = 0; query < 20; ++query) {
    std::vector<ArticleIndex> prefix;
    const std::size_t length = 1 + rng.UniformInt(6);
    for (std::size_t p = 0; p < length; ++p) {
      prefix.push_back(static_cast<ArticleIndex>(rng.UniformInt(static_cast<std::uint64_t>(n_articles + 1))));
    }
    const auto clicks = Prefix(prefix);
    baselines::StreamContext context;
    context.popularity = &tracker;
    context.clock = static_cast<Timestamp>(rng.UniformInt(static_cast<std::uint64_t>(t + window)));
    const auto co_scores = co.Score(clicks, all, context);
    const auto sr_scores = sr.Score(clicks, all, context);
    const auto knn_scores = knn.Score(clicks, all, context);
    const auto vsknn_scores = vsknn.Score(clicks, all, context);
    const auto rp_scores = rp.Score(clicks, all, context);
    const auto vsknn_oracle = OracleVsknn(corpus, m, k, prefix, all);
    for (std::size_t c = 0; c < all.size(); ++c) {
      mismatches += co_scores[c] != OracleCo(corpus, prefix.back(), all[c]);
      mismatches += sr_scores[c] != OracleSr(corpus, prefix.back(), all[c]);
      mismatches += knn_scores[c] != OracleItemKnn(corpus, prefix.back(), all[c], lambda);
      mismatches += vsknn_scores[c] != vsknn_oracle[c];
      mismatches +=
          rp_scores[c] != static_cast<double>(OracleWindowCount(raw_clicks, all[c], context.clock, window));
    }
  }
  return mismatches;
}

}  // namespace newsrec::testing

#endif  // NEWSREC_TESTS_SUPPORT_BASELINE_ORACLES_H_
