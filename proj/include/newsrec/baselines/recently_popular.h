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

#ifndef NEWSREC_BASELINES_RECENTLY_POPULAR_H_
#define NEWSREC_BASELINES_RECENTLY_POPULAR_H_

#include "newsrec/baselines/recommender.h"

namespace newsrec::baselines {

// RP: clicks on the candidate within the popularity window ending at the
// context clock. Holds no state of its own; the tracker is shared.
class RecentlyPopular final : public Recommender {
 public:
  RecentlyPopular() : Recommender("RP") {}
  std::vector<double> Score(std::span<const Click> prefix, std::span<const ArticleIndex> candidates,
                            const StreamContext& context) const override;

 protected:
  void Learn(const Session&, const StreamContext&) override {}
  void HashModel(Hasher&) const override {}
};

}  // namespace newsrec::baselines

#endif  // NEWSREC_BASELINES_RECENTLY_POPULAR_H_
