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

#include "newsrec/core/vocabulary.h"

namespace newsrec {

Vocabulary::Vocabulary(bool reserve_unk) : has_unk_(reserve_unk) {
  if (has_unk_) {
    tokens_.emplace_back("<UNK>");
    index_.emplace(tokens_.back(), kUnk);
  }
}

std::int32_t Vocabulary::Intern(std::string_view token) {
  if (auto it = index_.find(token); it != index_.end()) {
    return it->second;
  }
  if (frozen_) {
    return has_unk_ ? kUnk : kMissing;
  }
  const auto index = static_cast<std::int32_t>(tokens_.size());
  tokens_.emplace_back(token);
  index_.emplace(tokens_.back(), index);
  return index;
}

std::int32_t Vocabulary::Lookup(std::string_view token) const {
  if (auto it = index_.find(token); it != index_.end()) {
    return it->second;
  }
  return has_unk_ ? kUnk : kMissing;
}

}  // namespace newsrec
