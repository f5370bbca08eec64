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

#ifndef NEWSREC_ACR_EMBEDDING_TABLE_H_
#define NEWSREC_ACR_EMBEDDING_TABLE_H_

#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <vector>

#include "newsrec/core/catalog.h"
#include "newsrec/core/types.h"
#include "newsrec/core/vocabulary.h"

namespace newsrec::acr {

// Dense content vector per article, indexed by ArticleIndex.
class EmbeddingTable {
 public:
  EmbeddingTable(std::size_t dim, bool normalized) : dim_(dim), normalized_(normalized) {}

  void Set(ArticleIndex id, std::span<const double> vector);
  bool Contains(ArticleIndex id) const;
  // Empty span for articles without a vector.
  std::span<const double> Get(ArticleIndex id) const;

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return count_; }
  std::size_t capacity() const { return present_.size(); }
  bool normalized() const { return normalized_; }

  // Scales every non-zero vector to unit L2 norm.
  void NormalizeRows();

 private:
  std::size_t dim_;
  bool normalized_;
  std::size_t count_ = 0;
  std::vector<double> values_;
  std::vector<bool> present_;
};

// "article_id v1 ... vd" per line, whitespace separated.
void WriteEmbeddings(std::ostream& out, const EmbeddingTable& table, const Vocabulary& articles);

// Reads the same format. Rows of the wrong dimension or duplicate ids throw
// DataError naming the line. Article ids are interned into `articles`.
EmbeddingTable LoadPrecomputedEmbeddings(std::istream& in, std::size_t expected_dim, Vocabulary& articles);

// Uses each catalog article's precomputed vector; stubs get zeros.
EmbeddingTable EmbeddingsFromCatalog(const Catalog& catalog, bool normalize);

}  // namespace newsrec::acr

#endif  // NEWSREC_ACR_EMBEDDING_TABLE_H_
