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

#include "newsrec/acr/embedding_table.h"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "newsrec/core/errors.h"

namespace newsrec::acr {

void EmbeddingTable::Set(ArticleIndex id, std::span<const double> vector) {
  if (vector.size() != dim_) {
    throw std::invalid_argument("embedding table: vector of dimension " + std::to_string(vector.size()) +
                                ", expected " + std::to_string(dim_));
  }
  const auto index = static_cast<std::size_t>(id);
  if (index >= present_.size()) {
    present_.resize(index + 1, false);
    values_.resize((index + 1) * dim_, 0.0);
  }
  if (!present_[index]) ++count_;
  present_[index] = true;
  std::copy(vector.begin(), vector.end(), values_.begin() + static_cast<std::ptrdiff_t>(index * dim_));
}

bool EmbeddingTable::Contains(ArticleIndex id) const {
  return id >= 0 && static_cast<std::size_t>(id) < present_.size() && present_[id];
}

std::span<const double> EmbeddingTable::Get(ArticleIndex id) const {
  if (!Contains(id)) return {};
  return {values_.data() + static_cast<std::size_t>(id) * dim_, dim_};
}

void EmbeddingTable::NormalizeRows() {
  for (std::size_t row = 0; row < present_.size(); ++row) {
    double* v = values_.data() + row * dim_;
    double sq = 0.0;
    for (std::size_t c = 0; c < dim_; ++c) sq += v[c] * v[c];
    if (sq == 0.0) continue;
    const double norm = std::sqrt(sq);
    for (std::size_t c = 0; c < dim_; ++c) v[c] /= norm;
  }
  normalized_ = true;
}

void WriteEmbeddings(std::ostream& out, const EmbeddingTable& table, const Vocabulary& articles) {
  char buffer[32];
  for (ArticleIndex id = 0; id < static_cast<ArticleIndex>(table.capacity()); ++id) {
    if (!table.Contains(id)) continue;
    out << articles.Token(id);
    for (const double v : table.Get(id)) {
      const auto result = std::to_chars(buffer, buffer + sizeof(buffer), v);
      out << ' ' << std::string_view(buffer, static_cast<std::size_t>(result.ptr - buffer));
    }
    out << '\n';
  }
}

EmbeddingTable LoadPrecomputedEmbeddings(std::istream& in, std::size_t expected_dim, Vocabulary& articles) {
  EmbeddingTable table(expected_dim, false);
  std::string line;
  std::int64_t line_number = 0;
  std::vector<double> vector;
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream fields(line);
    std::string id;
    if (!(fields >> id)) continue;
    vector.clear();
    std::string token;
    while (fields >> token) {
      double value = 0.0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw DataError("embedding file line " + std::to_string(line_number) + ": bad number '" + token + "'");
      }
      vector.push_back(value);
    }
    if (vector.size() != expected_dim) {
      throw DataError("embedding file line " + std::to_string(line_number) + ": dimension " +
                      std::to_string(vector.size()) + ", expected " + std::to_string(expected_dim));
    }
    const ArticleIndex article = articles.Intern(id);
    if (article < 0) {
      throw DataError("embedding file line " + std::to_string(line_number) + ": unknown article '" + id + "'");
    }
    if (table.Contains(article)) {
      throw DataError("embedding file line " + std::to_string(line_number) + ": duplicate article '" + id + "'");
    }
    table.Set(article, vector);
  }
  return table;
}

EmbeddingTable EmbeddingsFromCatalog(const Catalog& catalog, bool normalize) {
  EmbeddingTable table(catalog.embedding_dim(), false);
  const std::vector<double> zeros(catalog.embedding_dim(), 0.0);
  for (const Article& article : catalog.articles()) {
    table.Set(article.id, article.embedding.size() == table.dim() ? std::span<const double>(article.embedding)
                                                                  : std::span<const double>(zeros));
  }
  if (normalize) table.NormalizeRows();
  return table;
}

}  // namespace newsrec::acr
