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

#include "newsrec/eval/protocol.h"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>
#include <string>

#include "newsrec/core/errors.h"
#include "newsrec/metrics/ranking.h"

namespace newsrec::eval {

void ProtocolConfig::Validate() const {
  if (train_hours_per_eval < 1) throw ConfigError("protocol: train_hours_per_eval must be at least 1");
  if (negatives < 1) throw ConfigError("protocol: negatives must be at least 1");
  if (cutoffs.empty()) throw ConfigError("protocol: at least one cutoff is required");
  for (const std::size_t n : cutoffs) {
    if (n < 1) throw ConfigError("protocol: cutoffs must be at least 1");
  }
  if (recommendable_window_hours < 1) throw ConfigError("protocol: recommendable_window_hours must be at least 1");
  if (popularity_window_hours < 1) throw ConfigError("protocol: popularity_window_hours must be at least 1");
}

StreamState::StreamState(const ProtocolConfig& config, Timestamp dataset_start)
    : start_(dataset_start),
      pool_(config.recommendable_window_hours * kSecondsPerHour),
      tracker_(config.popularity_window_hours * kSecondsPerHour) {}

void StreamState::FeedBucket(const HourBucket& bucket) {
  const Timestamp hour_start = HourStart(bucket.hour_index);
  const Timestamp hour_end = HourStart(bucket.hour_index + 1);
  // Training queries in this hour look back one popularity window from
  // times at or after the hour start.
  tracker_.EvictBefore(hour_start - tracker_.window());
  for (const Session* session : bucket.sessions) {
    for (const Click& click : session->clicks) pending_.emplace(click.timestamp, sequence_++, click.article);
  }
  pool_.AdvanceTo(hour_end);
  while (!pending_.empty() && std::get<0>(pending_.top()) < hour_end) {
    const auto [t, order, article] = pending_.top();
    pending_.pop();
    pool_.Add(t, article);
    tracker_.Add(t, article);
  }
}

void StreamState::HashState(Hasher& hasher) const {
  pool_.HashState(hasher);
  tracker_.HashState(hasher);
  hasher.Add(pending_.size());
  hasher.Add(sequence_);
}

std::vector<PredictionRecord> EvaluateSession(const Session& session,
                                              std::span<baselines::Recommender* const> recommenders,
                                              const StreamState& state, std::size_t negatives, Rng& rng) {
  std::vector<ArticleIndex> excluded;
  for (const Click& click : session.clicks) excluded.push_back(click.article);
  std::vector<PredictionRecord> records;
  const std::span<const Click> clicks(session.clicks);
  for (std::size_t i = 1; i < clicks.size(); ++i) {
    PredictionRecord record;
    record.session = session.session;
    record.prefix_length = i;
    record.clock = clicks[i].timestamp;
    record.candidates.push_back(clicks[i].article);
    const auto drawn = SampleNegatives(state.pool(), excluded, negatives, rng);
    record.candidates.insert(record.candidates.end(), drawn.begin(), drawn.end());
    const baselines::StreamContext context = state.context(record.clock);
    for (const baselines::Recommender* recommender : recommenders) {
      record.scores.push_back(recommender->Score(clicks.first(i), record.candidates, context));
    }
    for (const ArticleIndex c : record.candidates) record.window_clicks.push_back(state.tracker().Count(c, record.clock));
    record.total_clicks = state.tracker().Total(record.clock);
    records.push_back(std::move(record));
  }
  return records;
}

WindowResult MakeWindow(int window, int hour, std::int64_t recommendable, std::size_t n_recommenders,
                        std::span<const std::size_t> cutoffs) {
  WindowResult result{window, hour, recommendable, {}};
  for (std::size_t r = 0; r < n_recommenders; ++r) {
    auto& row = result.metrics.emplace_back();
    for (const std::size_t n : cutoffs) row.emplace_back(n);
  }
  return result;
}

void AccumulateEvent(const EventView& event, std::span<const std::size_t> cutoffs, WindowResult& window) {
  const std::size_t largest = *std::max_element(cutoffs.begin(), cutoffs.end());
  std::vector<double> popularity;
  for (const std::int64_t clicks : event.window_clicks) {
    popularity.push_back(metrics::SmoothedPopularity(clicks, event.total_clicks, window.recommendable));
  }
  for (std::size_t r = 0; r < event.scores.size(); ++r) {
    const std::vector<double>& scores = event.scores[r];
    const std::size_t rank = metrics::RankOfPositive(scores, 0);
    const std::vector<std::size_t> order = metrics::TopN(scores, 0, event.keys, largest);
    for (std::size_t k = 0; k < cutoffs.size(); ++k) {
      const std::size_t n = std::min(cutoffs[k], order.size());
      std::vector<std::int32_t> top;
      std::vector<double> probabilities;
      for (std::size_t i = 0; i < n; ++i) {
        top.push_back(event.ids[order[i]]);
        probabilities.push_back(popularity[order[i]]);
      }
      window.metrics[r][k].Add(rank, top, metrics::EsiR(probabilities));
    }
  }
}

namespace {

std::uint64_t FullHash(std::span<baselines::Recommender* const> recommenders, const StreamState& state) {
  Hasher hasher;
  for (const baselines::Recommender* r : recommenders) hasher.Add(r->StateHash());
  state.HashState(hasher);
  return hasher.digest();
}

}  // namespace

ProtocolResult RunProtocol(std::span<const HourBucket> buckets, std::span<baselines::Recommender* const> recommenders,
                           const ProtocolConfig& config, Timestamp dataset_start,
                           const std::function<std::string_view(ArticleIndex)>& article_keys, RecordSink* sink,
                           std::ostream* log) {
  config.Validate();
  if (recommenders.empty()) throw ConfigError("protocol: no recommenders to evaluate");
  const int cadence = config.train_hours_per_eval;
  if (buckets.size() < static_cast<std::size_t>(cadence) + 1) {
    throw DataError("protocol needs at least " + std::to_string(cadence + 1) + " hours of data, got " +
                    std::to_string(buckets.size()));
  }
  StreamState state(config, dataset_start);
  Rng rng(config.seed);
  ProtocolResult result;
  for (const HourBucket& bucket : buckets) {
    const int hour = bucket.hour_index;
    const auto started = std::chrono::steady_clock::now();
    std::int64_t hour_events = 0;
    if (hour >= cadence && hour % cadence == 0 && !bucket.sessions.empty()) {
      result.timeline.emplace_back(Phase::kEvaluate, hour);
      const std::uint64_t before = FullHash(recommenders, state);
      std::set<ArticleIndex> recommendable(state.pool().members().begin(), state.pool().members().end());
      for (const Session* session : bucket.sessions) {
        for (std::size_t i = 1; i < session->clicks.size(); ++i) recommendable.insert(session->clicks[i].article);
      }
      const int index = static_cast<int>(result.windows.size());
      WindowResult window = MakeWindow(index, hour, static_cast<std::int64_t>(recommendable.size()),
                                       recommenders.size(), config.cutoffs);
      if (sink != nullptr) sink->BeginWindow(index, hour, window.recommendable);
      for (const Session* session : bucket.sessions) {
        for (PredictionRecord& record : EvaluateSession(*session, recommenders, state, config.negatives, rng)) {
          record.window = index;
          record.hour = hour;
          std::vector<std::string_view> keys;
          for (const ArticleIndex c : record.candidates) keys.push_back(article_keys(c));
          AccumulateEvent({record.candidates, keys, record.scores, record.window_clicks, record.total_clicks},
                          config.cutoffs, window);
          if (sink != nullptr) sink->Event(record);
          ++hour_events;
        }
      }
      if (FullHash(recommenders, state) != before) {
        throw std::runtime_error("state changed while evaluating hour " + std::to_string(hour));
      }
      ++result.leakage_checks;
      result.events += hour_events;
      result.windows.push_back(std::move(window));
    }
    result.timeline.emplace_back(Phase::kTrain, hour);
    state.FeedBucket(bucket);
    const baselines::StreamContext context = state.context();
    for (baselines::Recommender* recommender : recommenders) {
      for (const Session* session : bucket.sessions) recommender->Update(*session, context);
    }
    if (log != nullptr) {
      const auto elapsed =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
      *log << "hour " << hour << " sessions " << bucket.sessions.size() << " events " << hour_events << " pool "
           << state.pool().size() << " seconds " << elapsed << '\n';
    }
  }
  return result;
}

}  // namespace newsrec::eval
