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

#include "newsrec/core/catalog.h"

#include <cmath>
#include <fstream>
#include <string>
#include <unordered_map>

#include "json.hpp"
#include "newsrec/core/errors.h"

namespace newsrec {

void Catalog::Add(Article article) {
  const auto index = static_cast<std::size_t>(article.id);
  if (index >= articles_.size()) {
    articles_.resize(index + 1);
    present_.resize(index + 1, false);
  }
  articles_[index] = std::move(article);
  present_[index] = true;
}

bool Catalog::Contains(ArticleIndex id) const {
  return id >= 0 && static_cast<std::size_t>(id) < present_.size() && present_[id];
}

std::int64_t Catalog::CompleteWithStubs(const Vocabulary& articles, std::size_t embedding_dim) {
  std::int64_t stubs = 0;
  for (ArticleIndex id = 0; id < articles.size(); ++id) {
    if (Contains(id)) continue;
    Article stub;
    stub.id = id;
    stub.category = Vocabulary::kUnk;
    stub.embedding.assign(embedding_dim, 0.0);
    stub.stub = true;
    Add(std::move(stub));
    ++stubs;
  }
  return stubs;
}

namespace {

std::string IdString(const nlohmann::json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer() || value.is_number_unsigned()) return value.dump();
  return {};
}

}  // namespace

Catalog ParseCatalog(std::istream& in, const CatalogParseOptions& options, DatasetVocab& vocab) {
  Catalog catalog;
  std::size_t dim = options.embedding_dim;
  std::string line;
  std::int64_t line_number = 0;
  const auto fail = [&](const std::string& what) {
    throw DataError("article catalog line " + std::to_string(line_number) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto record = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (record.is_discarded() || !record.is_object()) fail("not a JSON object");

    const std::string id = record.contains("article_id") ? IdString(record["article_id"]) : "";
    if (id.empty()) fail("missing article_id");
    const ArticleIndex index = vocab.articles.Intern(id);
    if (catalog.Contains(index)) fail("duplicate article_id '" + id + "'");

    Article article;
    article.id = index;
    if (const auto it = record.find("publish_timestamp"); it != record.end() && !it->is_null()) {
      if (!it->is_number()) fail("publish_timestamp is not a number");
      article.publish_timestamp =
          static_cast<Timestamp>(std::floor(it->get<double>() * options.timestamp_scale));
    }
    if (const auto it = record.find("category"); it != record.end() && !it->is_null()) {
      const std::string category = IdString(*it);
      if (category.empty()) fail("category is not a string or integer");
      article.category = vocab.categories.Intern(category);
    }
    if (const auto it = record.find("tokens"); it != record.end()) {
      if (!it->is_array()) fail("tokens is not an array");
      for (const auto& token : *it) {
        if (!token.is_string()) fail("token is not a string");
        article.tokens.push_back(token.get<std::string>());
      }
    }
    if (const auto it = record.find("embedding"); it != record.end()) {
      if (!it->is_array()) fail("embedding is not an array");
      for (const auto& value : *it) {
        if (!value.is_number()) fail("embedding value is not a number");
        article.embedding.push_back(value.get<double>());
      }
      if (dim == 0) dim = article.embedding.size();
      if (article.embedding.size() != dim) {
        fail("embedding has dimension " + std::to_string(article.embedding.size()) + ", expected " +
             std::to_string(dim));
      }
    }
    if (article.tokens.empty() && article.embedding.empty()) fail("neither tokens nor embedding present");
    catalog.Add(std::move(article));
  }
  catalog.set_embedding_dim(dim);
  return catalog;
}

Catalog ParseCatalogFile(const std::filesystem::path& path, const CatalogParseOptions& options,
                         DatasetVocab& vocab) {
  std::ifstream in(path);
  if (!in) {
    throw DataError("cannot read article catalog " + path.string());
  }
  try {
    return ParseCatalog(in, options, vocab);
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

void WriteCatalog(std::ostream& out, const Catalog& catalog, const DatasetVocab& vocab) {
  for (const Article& article : catalog.articles()) {
    if (article.stub) continue;
    nlohmann::ordered_json record;
    record["article_id"] = vocab.articles.Token(article.id);
    if (article.publish_timestamp) record["publish_timestamp"] = *article.publish_timestamp;
    record["category"] = vocab.categories.Token(article.category);
    if (!article.tokens.empty()) record["tokens"] = article.tokens;
    if (!article.embedding.empty()) record["embedding"] = article.embedding;
    out << record.dump() << '\n';
  }
}

std::int64_t CountPublishAfterFirstClick(const Catalog& catalog, std::span<const Click> clicks) {
  std::unordered_map<ArticleIndex, Timestamp> first_click;
  for (const Click& click : clicks) {
    auto [it, inserted] = first_click.emplace(click.article, click.timestamp);
    if (!inserted && click.timestamp < it->second) it->second = click.timestamp;
  }
  std::int64_t violations = 0;
  for (const auto& [article, first] : first_click) {
    if (!catalog.Contains(article)) continue;
    const auto& publish = catalog.Get(article).publish_timestamp;
    if (publish && *publish > first) ++violations;
  }
  return violations;
}

}  // namespace newsrec
