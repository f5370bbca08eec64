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

#include "newsrec/baselines/recommender.h"

namespace newsrec::baselines {

void Recommender::Update(const Session& session, const StreamContext& context) {
  if (!seen_.insert(session.session).second) return;
  Learn(session, context);
}

std::uint64_t Recommender::StateHash() const {
  Hasher hasher;
  hasher.Add(std::string_view(name_));
  UnorderedDigest seen;
  for (const std::int32_t id : seen_) seen.Add(id, 0);
  seen.MixInto(hasher);
  HashModel(hasher);
  return hasher.digest();
}

}  // namespace newsrec::baselines
