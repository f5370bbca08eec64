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

#ifndef NEWSREC_CORE_VOCABULARY_H_
#define NEWSREC_CORE_VOCABULARY_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace newsrec {

// Interns opaque string identifiers into dense indices in first-seen order.
// With `reserve_unk`, index 0 is the UNK token and lookups of unknown
// strings on a frozen vocabulary return it.
class Vocabulary {
 public:
  static constexpr std::int32_t kUnk = 0;
  static constexpr std::int32_t kMissing = -1;

  explicit Vocabulary(bool reserve_unk = false);

  // Returns the index of `token`, adding it unless the vocabulary is frozen.
  // A frozen vocabulary returns kUnk (or kMissing without an UNK row).
  std::int32_t Intern(std::string_view token);

  // Never adds. Unknown tokens map to kUnk or kMissing.
  std::int32_t Lookup(std::string_view token) const;

  const std::string& Token(std::int32_t index) const { return tokens_.at(index); }
  std::int32_t size() const { return static_cast<std::int32_t>(tokens_.size()); }
  bool has_unk() const { return has_unk_; }

  void Freeze() { frozen_ = true; }
  bool frozen() const { return frozen_; }

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const { return std::hash<std::string_view>{}(s); }
  };
  bool has_unk_;
  bool frozen_ = false;
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, std::int32_t, Hash, std::equal_to<>> index_;
};

}  // namespace newsrec

#endif  // NEWSREC_CORE_VOCABULARY_H_
