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

#include "newsrec/acr/word_vectors.h"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "newsrec/core/errors.h"

namespace newsrec::acr {

WordVectorTable::WordVectorTable(std::size_t dim) : dim_(dim), values_(dim, 0.0) {}

void WordVectorTable::AddRow(const std::string& token, std::span<const double> vector) {
  rows_.emplace(token, static_cast<int>(size()));
  values_.insert(values_.end(), vector.begin(), vector.end());
}

WordVectorTable WordVectorTable::Random(const Catalog& catalog, std::size_t dim, Rng& rng) {
  WordVectorTable table(dim);
  std::vector<double> vector(dim);
  for (double& v : vector) v = rng.Normal(0.0, 0.1);
  std::copy(vector.begin(), vector.end(), table.values_.begin());
  for (const Article& article : catalog.articles()) {
    for (const std::string& token : article.tokens) {
      if (table.rows_.contains(token)) continue;
      for (double& v : vector) v = rng.Normal(0.0, 0.1);
      table.AddRow(token, vector);
    }
  }
  return table;
}

WordVectorTable WordVectorTable::Load(std::istream& in, std::size_t expected_dim) {
  WordVectorTable table(expected_dim);
  std::string line;
  std::int64_t line_number = 0;
  std::vector<double> vector;
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream fields(line);
    std::string token;
    if (!(fields >> token)) continue;
    vector.clear();
    std::string field;
    while (fields >> field) {
      double value = 0.0;
      const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw DataError("word vector line " + std::to_string(line_number) + ": bad number '" + field + "'");
      }
      vector.push_back(value);
    }
    if (vector.size() != expected_dim) {
      throw DataError("word vector line " + std::to_string(line_number) + ": dimension " +
                      std::to_string(vector.size()) + ", expected " + std::to_string(expected_dim));
    }
    if (token == "<UNK>") {
      std::copy(vector.begin(), vector.end(), table.values_.begin());
    } else if (!table.rows_.contains(token)) {
      table.AddRow(token, vector);
    }
  }
  return table;
}

int WordVectorTable::Row(const std::string& token) const {
  const auto it = rows_.find(token);
  return it == rows_.end() ? -1 : it->second;
}

std::vector<double> WordVectorTable::Mean(std::span<const std::string> tokens) const {
  // Summing in row order keeps the result independent of token order.
  std::vector<int> rows;
  rows.reserve(tokens.size());
  for (const std::string& token : tokens) {
    if (const int row = Row(token); row >= 0) rows.push_back(row);
  }
  if (rows.empty()) {
    const auto unk = Vector(0);
    return {unk.begin(), unk.end()};
  }
  std::sort(rows.begin(), rows.end());
  std::vector<double> mean(dim_, 0.0);
  for (const int row : rows) {
    const auto vector = Vector(static_cast<std::size_t>(row));
    for (std::size_t c = 0; c < dim_; ++c) mean[c] += vector[c];
  }
  for (double& v : mean) v /= static_cast<double>(rows.size());
  return mean;
}

}  // namespace newsrec::acr
