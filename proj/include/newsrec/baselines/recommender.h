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

#ifndef NEWSREC_BASELINES_RECOMMENDER_H_
#define NEWSREC_BASELINES_RECOMMENDER_H_

#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "newsrec/core/hash.h"
#include "newsrec/core/types.h"

namespace newsrec::eval {
class RecommendablePool;
}

namespace newsrec::baselines {

class PopularityTracker;

// Shared stream state handed to recommenders. `clock` is the time of the
// click being predicted when scoring.
struct StreamContext {
  Timestamp clock = 0;
  const PopularityTracker* popularity = nullptr;
  const eval::RecommendablePool* pool = nullptr;
};

class Recommender {
 public:
  explicit Recommender(std::string name) : name_(std::move(name)) {}
  virtual ~Recommender() = default;

  const std::string& name() const { return name_; }

  // Learns from a finished training session. A session id seen before is
  // ignored, which makes updates idempotent.
  void Update(const Session& session, const StreamContext& context);

  // One score per candidate for the next click after `prefix`. Never
  // mutates the model.
  virtual std::vector<double> Score(std::span<const Click> prefix, std::span<const ArticleIndex> candidates,
                                    const StreamContext& context) const = 0;

  // Digest of everything learned so far; used to detect leakage.
  std::uint64_t StateHash() const;

 protected:
  virtual void Learn(const Session& session, const StreamContext& context) = 0;
  virtual void HashModel(Hasher& hasher) const = 0;

 private:
  std::string name_;
  std::unordered_set<std::int32_t> seen_;
};

// Order-independent digest of (key, value) entries, for hashing hash maps.
class UnorderedDigest {
 public:
  template <typename K, typename V>
  void Add(const K& key, const V& value) {
    Hasher entry;
    entry.Add(key);
    entry.Add(value);
    sum_ += entry.digest();
    ++count_;
  }
  void MixInto(Hasher& hasher) const {
    hasher.Add(sum_);
    hasher.Add(count_);
  }

 private:
  std::uint64_t sum_ = 0;
  std::uint64_t count_ = 0;
};

}  // namespace newsrec::baselines

#endif  // NEWSREC_BASELINES_RECOMMENDER_H_
