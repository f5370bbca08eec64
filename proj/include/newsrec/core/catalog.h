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

#ifndef NEWSREC_CORE_CATALOG_H_
#define NEWSREC_CORE_CATALOG_H_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <ostream>
#include <span>
#include <vector>

#include "newsrec/core/types.h"

namespace newsrec {

// Articles indexed by ArticleIndex. Every index interned in the shared
// article vocabulary has an entry once CompleteWithStubs has run.
class Catalog {
 public:
  Catalog() = default;

  void Add(Article article);
  bool Contains(ArticleIndex id) const;
  const Article& Get(ArticleIndex id) const { return articles_.at(static_cast<std::size_t>(id)); }
  std::span<const Article> articles() const { return articles_; }
  std::size_t size() const { return articles_.size(); }

  // Fills indices known to `articles` but missing from the catalog with stub
  // articles (UNK category, no tokens, zero embedding of `embedding_dim`).
  // Returns the number of stubs created.
  std::int64_t CompleteWithStubs(const Vocabulary& articles, std::size_t embedding_dim);

  std::size_t embedding_dim() const { return embedding_dim_; }
  void set_embedding_dim(std::size_t dim) { embedding_dim_ = dim; }

 private:
  std::vector<Article> articles_;
  std::vector<bool> present_;
  std::size_t embedding_dim_ = 0;
};

struct CatalogParseOptions {
  // Declared dimension of "embedding" arrays; 0 accepts the first row's.
  std::size_t embedding_dim = 0;
  // Multiplier converting publish_timestamp values to seconds.
  double timestamp_scale = 1.0;
};

// Reads JSON-lines records: article_id, publish_timestamp, category, and
// either "tokens" (array of strings) or "embedding" (array of numbers).
// Any invalid record throws DataError with its line number.
Catalog ParseCatalog(std::istream& in, const CatalogParseOptions& options, DatasetVocab& vocab);
Catalog ParseCatalogFile(const std::filesystem::path& path, const CatalogParseOptions& options,
                         DatasetVocab& vocab);

void WriteCatalog(std::ostream& out, const Catalog& catalog, const DatasetVocab& vocab);

// Counts articles whose publish time is after their first click.
std::int64_t CountPublishAfterFirstClick(const Catalog& catalog, std::span<const Click> clicks);

}  // namespace newsrec

#endif  // NEWSREC_CORE_CATALOG_H_
