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

#ifndef NEWSREC_EVAL_PROTOCOL_H_
#define NEWSREC_EVAL_PROTOCOL_H_

#include <cstdint>
#include <functional>
#include <ostream>
#include <queue>
#include <span>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "newsrec/baselines/popularity_tracker.h"
#include "newsrec/baselines/recommender.h"
#include "newsrec/core/rng.h"
#include "newsrec/core/types.h"
#include "newsrec/eval/recommendable_pool.h"
#include "newsrec/metrics/accumulator.h"

namespace newsrec::eval {

struct ProtocolConfig {
  int train_hours_per_eval = 5;
  std::size_t negatives = 50;
  std::vector<std::size_t> cutoffs = {5, 10};
  int recommendable_window_hours = 24;
  int popularity_window_hours = 1;
  std::uint64_t seed = 0;

  // Throws ConfigError on out-of-range fields.
  void Validate() const;
};

// The recommendable pool and popularity tracker, fed with training clicks
// only. Clicks of a bucket that fall after its hour are held back until the
// clock reaches them, so both structures always see a time-ordered stream.
class StreamState {
 public:
  StreamState(const ProtocolConfig& config, Timestamp dataset_start);

  // Feeds the clicks of bucket `hour` up to the end of that hour and moves
  // the pool clock there.
  void FeedBucket(const HourBucket& bucket);

  Timestamp HourStart(std::int64_t hour) const { return start_ + hour * kSecondsPerHour; }
  const RecommendablePool& pool() const { return pool_; }
  const baselines::PopularityTracker& tracker() const { return tracker_; }
  baselines::StreamContext context(Timestamp clock = 0) const { return {clock, &tracker_, &pool_}; }
  void HashState(Hasher& hasher) const;

 private:
  Timestamp start_;
  RecommendablePool pool_;
  baselines::PopularityTracker tracker_;
  std::uint64_t sequence_ = 0;
  // (time, arrival order, article), earliest first.
  std::priority_queue<std::tuple<Timestamp, std::uint64_t, ArticleIndex>,
                      std::vector<std::tuple<Timestamp, std::uint64_t, ArticleIndex>>, std::greater<>>
      pending_;
};

// One revealed-click prediction shared by every recommender.
struct PredictionRecord {
  int window = 0;
  int hour = 0;
  std::int32_t session = 0;
  std::size_t prefix_length = 0;
  Timestamp clock = 0;                       // time of the predicted click
  std::vector<ArticleIndex> candidates;      // positive first, then K negatives in draw order
  std::vector<std::vector<double>> scores;   // [recommender][candidate]
  std::vector<std::int64_t> window_clicks;   // popularity-window clicks per candidate at `clock`
  std::int64_t total_clicks = 0;             // all popularity-window clicks at `clock`
};

// Evaluates clicks 2..L of `session`: one record per prediction, negatives
// drawn once and shared. Throws DataError if the pool is too small.
std::vector<PredictionRecord> EvaluateSession(const Session& session,
                                              std::span<baselines::Recommender* const> recommenders,
                                              const StreamState& state, std::size_t negatives, Rng& rng);

// Per-window accumulators, [recommender][cutoff].
struct WindowResult {
  int window = 0;
  int hour = 0;
  std::int64_t recommendable = 0;
  std::vector<std::vector<metrics::MetricsAccumulator>> metrics;
};

// Candidate data needed to turn one event into metrics. `keys` are external
// article ids, used to order ties in top-n lists.
struct EventView {
  std::span<const std::int32_t> ids;
  std::span<const std::string_view> keys;
  std::span<const std::vector<double>> scores;
  std::span<const std::int64_t> window_clicks;
  std::int64_t total_clicks = 0;
};

// Adds one event to every accumulator of `window`. Shared by live runs and
// record replay so both produce identical sums.
void AccumulateEvent(const EventView& event, std::span<const std::size_t> cutoffs, WindowResult& window);

WindowResult MakeWindow(int window, int hour, std::int64_t recommendable, std::size_t n_recommenders,
                        std::span<const std::size_t> cutoffs);

class RecordSink {
 public:
  virtual ~RecordSink() = default;
  virtual void BeginWindow(int window, int hour, std::int64_t recommendable) = 0;
  virtual void Event(const PredictionRecord& record) = 0;
};

enum class Phase { kTrain, kEvaluate };

struct ProtocolResult {
  std::vector<WindowResult> windows;
  std::vector<std::pair<Phase, int>> timeline;  // (phase, hour) in execution order
  std::int64_t events = 0;
  std::int64_t leakage_checks = 0;  // state hashes compared, all equal
};

// Runs the train/evaluate loop over contiguous hour buckets. Bucket h is
// evaluated before it is trained on when h >= cadence and h % cadence == 0
// and it holds sessions. `article_keys` maps an article index to its
// external id. Throws DataError with fewer than cadence + 1 buckets and
// std::runtime_error if any recommender or stream state changes while
// evaluating.
ProtocolResult RunProtocol(std::span<const HourBucket> buckets, std::span<baselines::Recommender* const> recommenders,
                           const ProtocolConfig& config, Timestamp dataset_start,
                           const std::function<std::string_view(ArticleIndex)>& article_keys,
                           RecordSink* sink = nullptr, std::ostream* log = nullptr);

}  // namespace newsrec::eval

#endif  // NEWSREC_EVAL_PROTOCOL_H_
