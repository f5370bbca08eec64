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

#include "newsrec/core/dataset.h"

#include <fstream>
#include <string>

#include "json.hpp"
#include "newsrec/core/errors.h"

namespace newsrec {

void WriteNormalizedDataset(const Dataset& dataset, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  {
    std::ofstream out(dir / "articles.jsonl", std::ios::binary);
    WriteCatalog(out, dataset.catalog, dataset.vocab);
  }
  {
    std::ofstream out(dir / "sessions.jsonl", std::ios::binary);
    for (const Session& session : dataset.sessions) {
      nlohmann::ordered_json record;
      record["session_id"] = dataset.vocab.sessions.Token(session.session);
      record["user_id"] = dataset.vocab.users.Token(session.user);
      auto clicks = nlohmann::ordered_json::array();
      for (const Click& click : session.clicks) {
        clicks.push_back({click.timestamp, dataset.vocab.articles.Token(click.article),
                          dataset.vocab.devices.Token(click.device),
                          dataset.vocab.locations.Token(click.location)});
      }
      record["clicks"] = std::move(clicks);
      out << record.dump() << '\n';
    }
  }
  std::ofstream meta(dir / "meta.json", std::ios::binary);
  nlohmann::ordered_json record;
  record["format"] = "newsrec-dataset-v1";
  record["start"] = dataset.start;
  record["embedding_dim"] = dataset.catalog.embedding_dim();
  meta << record.dump(2) << '\n';
}

Dataset ReadNormalizedDataset(const std::filesystem::path& dir) {
  Dataset dataset;
  std::ifstream meta_in(dir / "meta.json");
  if (!meta_in) throw DataError("no ingested dataset at " + dir.string());
  const auto meta = nlohmann::json::parse(meta_in, nullptr, false);
  if (meta.is_discarded() || meta.value("format", "") != "newsrec-dataset-v1") {
    throw DataError((dir / "meta.json").string() + ": unrecognized dataset metadata");
  }
  dataset.start = meta.value("start", Timestamp{0});
  const auto dim = meta.value("embedding_dim", std::size_t{0});

  CatalogParseOptions options;
  options.embedding_dim = dim;
  dataset.catalog = ParseCatalogFile(dir / "articles.jsonl", options, dataset.vocab);

  const auto path = dir / "sessions.jsonl";
  std::ifstream in(path);
  if (!in) throw DataError("cannot read " + path.string());
  std::string line;
  std::int64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    const auto record = nlohmann::json::parse(line, nullptr, false);
    try {
      if (record.is_discarded()) throw std::runtime_error("invalid JSON");
      Session session;
      session.session = dataset.vocab.sessions.Intern(record.at("session_id").get<std::string>());
      session.user = dataset.vocab.users.Intern(record.at("user_id").get<std::string>());
      for (const auto& entry : record.at("clicks")) {
        Click click;
        click.timestamp = entry.at(0).get<Timestamp>();
        click.session = session.session;
        click.user = session.user;
        click.article = dataset.vocab.articles.Intern(entry.at(1).get<std::string>());
        click.device = dataset.vocab.devices.Intern(entry.at(2).get<std::string>());
        click.location = dataset.vocab.locations.Intern(entry.at(3).get<std::string>());
        session.clicks.push_back(click);
      }
      if (session.clicks.size() < 2) throw std::runtime_error("session shorter than 2 clicks");
      dataset.sessions.push_back(std::move(session));
    } catch (const std::exception& e) {
      throw DataError(path.string() + " line " + std::to_string(line_number) + ": " + e.what());
    }
  }
  dataset.catalog.CompleteWithStubs(dataset.vocab.articles, dim);
  return dataset;
}

}  // namespace newsrec
