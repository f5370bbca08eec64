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

#ifndef NEWSREC_ACR_WORD_VECTORS_H_
#define NEWSREC_ACR_WORD_VECTORS_H_

#include <cstddef>
#include <istream>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "newsrec/core/catalog.h"
#include "newsrec/core/rng.h"

namespace newsrec::acr {

// Token vocabulary with one fixed vector per token. Row 0 is UNK.
class WordVectorTable {
 public:
  explicit WordVectorTable(std::size_t dim);

  // Every token in the catalog, first-seen order, N(0, 0.1) vectors.
  static WordVectorTable Random(const Catalog& catalog, std::size_t dim, Rng& rng);
  // "token v1 ... vd" per line. A "<UNK>" line sets the UNK row, which
  // otherwise stays zero. Bad rows throw DataError.
  static WordVectorTable Load(std::istream& in, std::size_t expected_dim);

  // Row index of `token`, or -1 when unknown.
  int Row(const std::string& token) const;
  std::span<const double> Vector(std::size_t row) const { return {values_.data() + row * dim_, dim_}; }
  std::size_t dim() const { return dim_; }
  std::size_t size() const { return values_.size() / dim_; }

  // Mean of the known tokens' vectors; the UNK vector when none is known.
  std::vector<double> Mean(std::span<const std::string> tokens) const;

 private:
  void AddRow(const std::string& token, std::span<const double> vector);

  std::size_t dim_;
  std::unordered_map<std::string, int> rows_;
  std::vector<double> values_;
};

}  // namespace newsrec::acr

#endif  // NEWSREC_ACR_WORD_VECTORS_H_
