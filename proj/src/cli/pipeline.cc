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

#include "newsrec/cli/pipeline.h"

#include <algorithm>
#include <fstream>

#include "newsrec/acr/encoder.h"
#include "newsrec/acr/word_vectors.h"
#include "newsrec/baselines/content_based.h"
#include "newsrec/baselines/recently_popular.h"
#include "newsrec/baselines/session_models.h"
#include "newsrec/baselines/vsknn.h"
#include "newsrec/core/errors.h"
#include "newsrec/core/rng.h"
#include "newsrec/core/synthetic.h"
#include "newsrec/eval/records.h"
#include "newsrec/nar/model.h"
#include "newsrec/nar/recommender.h"

namespace newsrec::cli {
namespace {

namespace fs = std::filesystem;

std::vector<fs::path> ExpandClickPaths(const std::vector<fs::path>& paths) {
  std::vector<fs::path> files;
  for (const fs::path& path : paths) {
    if (!fs::is_directory(path)) {
      files.push_back(path);
      continue;
    }
    std::vector<fs::path> inside;
    for (const auto& entry : fs::directory_iterator(path)) {
      if (entry.is_regular_file()) inside.push_back(entry.path());
    }
    std::sort(inside.begin(), inside.end());
    if (inside.empty()) throw DataError("click log directory is empty: " + path.string());
    files.insert(files.end(), inside.begin(), inside.end());
  }
  return files;
}

Ingested IngestFiles(const FileSource& source, std::ostream* log) {
  Ingested result;
  Dataset& dataset = result.dataset;
  // The catalog goes first so article indices follow catalog order.
  if (source.catalog) {
    dataset.catalog = ParseCatalogFile(*source.catalog, source.catalog_options, dataset.vocab);
  } else if (log) {
    *log << "no article catalog configured; every article becomes a stub\n";
  }
  std::vector<Click> clicks;
  for (const fs::path& path : ExpandClickPaths(source.clicks)) {
    ClickLogResult parsed = ParseClickLogFile(path, source.schema, dataset.vocab);
    if (parsed.malformed > 0 && log) {
      *log << path.string() << ": skipped " << parsed.malformed << " malformed lines (first at line "
           << parsed.first_malformed_line << ")\n";
    }
    result.summary.malformed_lines += parsed.malformed;
    clicks.insert(clicks.end(), parsed.clicks.begin(), parsed.clicks.end());
  }
  result.summary.stub_articles =
      dataset.catalog.CompleteWithStubs(dataset.vocab.articles, dataset.catalog.embedding_dim());
  if (result.summary.stub_articles > 0 && source.catalog && log) {
    *log << result.summary.stub_articles << " clicked articles are missing from the catalog; using stubs\n";
  }
  result.summary.published_after_first_click = CountPublishAfterFirstClick(dataset.catalog, clicks);
  if (result.summary.published_after_first_click > 0 && log) {
    *log << "warning: " << result.summary.published_after_first_click
         << " articles have a publish time after their first click\n";
  }
  SessionizeResult sessions = BuildSessions(clicks, source.session_mode, source.gap_seconds, dataset.vocab);
  result.summary.dropped_singleton_clicks = sessions.dropped_singleton_clicks;
  result.summary.collapsed_duplicates = sessions.collapsed_duplicates;
  dataset.sessions = std::move(sessions.sessions);
  if (dataset.sessions.empty()) throw DataError("no sessions with at least two clicks");
  const Timestamp first = dataset.sessions.front().clicks.front().timestamp;
  dataset.start = first - first % kSecondsPerHour;
  return result;
}

bool SourceMatches(const fs::path& dir, const std::string& fingerprint) {
  std::ifstream in(dir / "source.json");
  if (!in) return false;
  const auto record = nlohmann::json::parse(in, nullptr, false);
  return !record.is_discarded() && record.value("data", std::string()) == fingerprint;
}

std::string Fingerprint(const RunConfig& config) { return std::to_string(config.seed) + ":" + config.data_fingerprint; }

bool NeedsContent(const RunConfig& config) {
  return std::any_of(config.roster.begin(), config.roster.end(), [&](const RosterEntry& entry) {
    if (entry.algorithm == "CB") return true;
    if (entry.algorithm == "NAR" || entry.algorithm == "GRU4Rec-lite") return ResolveNarConfig(config, entry).use_content;
    return false;
  });
}

}  // namespace

nlohmann::ordered_json StatsJson(const DatasetStats& stats) {
  nlohmann::ordered_json record;
  record["users"] = stats.n_users;
  record["sessions"] = stats.n_sessions;
  record["clicks"] = stats.n_clicks;
  record["articles"] = stats.n_articles;
  record["avg_session_length"] = stats.avg_session_length;
  return record;
}

Ingested IngestDataset(const RunConfig& config, std::ostream* log) {
  if (config.synthetic) {
    SyntheticDataset synthetic = GenerateSyntheticDataset(*config.synthetic, DeriveSeed(config.seed, "synthetic"));
    Ingested result{std::move(synthetic.dataset), {}};
    result.summary.stats = ComputeDatasetStats(result.dataset.sessions);
    return result;
  }
  Ingested result = IngestFiles(*config.files, log);
  result.summary.stats = ComputeDatasetStats(result.dataset.sessions);
  return result;
}

std::shared_ptr<acr::EmbeddingTable> PrepareContent(const RunConfig& config, const Dataset& dataset,
                                                    std::ostream* log) {
  const Catalog& catalog = dataset.catalog;
  if (catalog.embedding_dim() > 0) {
    if (log) *log << "content: precomputed catalog embeddings, dim " << catalog.embedding_dim() << '\n';
    return std::make_shared<acr::EmbeddingTable>(acr::EmbeddingsFromCatalog(catalog, config.acr.normalize));
  }
  const std::size_t word_dim = config.acr.training.word_dim;
  acr::WordVectorTable words(word_dim);
  if (config.acr.word_vectors) {
    std::ifstream in(*config.acr.word_vectors);
    if (!in) throw DataError("cannot open word vectors " + config.acr.word_vectors->string());
    words = acr::WordVectorTable::Load(in, word_dim);
  } else {
    Rng rng(DeriveSeed(config.seed, "word_vectors"));
    words = acr::WordVectorTable::Random(catalog, word_dim, rng);
  }
  const acr::AcrTrainingResult trained =
      acr::TrainAcr(catalog.articles(), words, static_cast<std::size_t>(dataset.vocab.categories.size()),
                    config.acr.training, DeriveSeed(config.seed, "acr"));
  if (log) {
    *log << "content: encoder trained for " << trained.epoch_losses.size() << " epochs, held-out category accuracy "
         << trained.heldout_accuracy << '\n';
  }
  return std::make_shared<acr::EmbeddingTable>(
      acr::ExportEmbeddings(trained.encoder, words, catalog, config.acr.normalize));
}

std::vector<std::unique_ptr<baselines::Recommender>> BuildRoster(
    const RunConfig& config, const Dataset& dataset, std::shared_ptr<const acr::EmbeddingTable> content) {
  std::vector<std::unique_ptr<baselines::Recommender>> roster;
  auto catalog = std::make_shared<Catalog>(dataset.catalog);
  for (const RosterEntry& entry : config.roster) {
    const auto& o = entry.options;
    const std::string& a = entry.algorithm;
    if (a == "CO") {
      roster.push_back(std::make_unique<baselines::CoOccurrence>());
    } else if (a == "SR") {
      roster.push_back(std::make_unique<baselines::SequentialRules>());
    } else if (a == "Item-kNN") {
      roster.push_back(std::make_unique<baselines::ItemKnn>(o.value("lambda", 20.0)));
    } else if (a == "V-SkNN") {
      baselines::VsknnConfig c;
      c.sample_size = o.value("sample_size", c.sample_size);
      c.neighbors = o.value("neighbors", c.neighbors);
      if (c.sample_size == 0 || c.neighbors == 0) throw ConfigError("V-SkNN sizes must be positive");
      roster.push_back(std::make_unique<baselines::Vsknn>(c));
    } else if (a == "RP") {
      roster.push_back(std::make_unique<baselines::RecentlyPopular>());
    } else if (a == "CB") {
      if (!content) throw ConfigError("CB needs content vectors");
      roster.push_back(std::make_unique<baselines::ContentBased>(content, o.value("decay", 0.8)));
    } else {
      nar::NarConfig c = ResolveNarConfig(config, entry);
      c.n_items = static_cast<std::size_t>(dataset.vocab.articles.size());
      c.n_devices = static_cast<std::size_t>(dataset.vocab.devices.size());
      c.n_locations = static_cast<std::size_t>(dataset.vocab.locations.size());
      c.Validate();
      // The model only reads the table; the const cast keeps one shared copy.
      auto table = std::const_pointer_cast<acr::EmbeddingTable>(content);
      const std::uint64_t seed = DeriveSeed(config.seed, "model/" + entry.name);
      roster.push_back(std::make_unique<nar::NarRecommender>(
          entry.name, std::make_unique<nar::NarModel>(c, c.use_content ? table : nullptr, catalog, seed), seed));
    }
    if (roster.back()->name() != entry.name) {
      throw ConfigError("only NAR and GRU4Rec-lite entries can be renamed (" + entry.name + ")");
    }
  }
  return roster;
}

IngestSummary CommandIngest(const RunConfig& config, std::ostream& out, std::ostream* log) {
  Ingested ingested = IngestDataset(config, log);
  const fs::path dir = config.output / "dataset";
  WriteNormalizedDataset(ingested.dataset, dir);
  nlohmann::ordered_json source;
  source["data"] = Fingerprint(config);
  source["stats"] = StatsJson(ingested.summary.stats);
  std::ofstream(dir / "source.json", std::ios::binary) << source.dump(2) << '\n';

  const IngestSummary& s = ingested.summary;
  char avg[32];
  std::snprintf(avg, sizeof(avg), "%.2f", s.stats.avg_session_length);
  out << "users\t" << s.stats.n_users << '\n'
      << "sessions\t" << s.stats.n_sessions << '\n'
      << "clicks\t" << s.stats.n_clicks << '\n'
      << "articles\t" << s.stats.n_articles << '\n'
      << "avg_session_length\t" << avg << '\n'
      << "malformed_lines\t" << s.malformed_lines << '\n'
      << "dropped_singleton_clicks\t" << s.dropped_singleton_clicks << '\n'
      << "collapsed_duplicates\t" << s.collapsed_duplicates << '\n'
      << "stub_articles\t" << s.stub_articles << '\n';
  return s;
}

Report CommandRun(const RunConfig& config, bool dump_records, std::ostream& out, std::ostream* log) {
  const fs::path dir = config.output / "dataset";
  if (!SourceMatches(dir, Fingerprint(config))) {
    std::ostream& sink = log ? *log : out;
    CommandIngest(config, sink, log);
  }
  // Always read back the normalized files so a run is the same whether or
  // not it ingested first.
  Dataset dataset = ReadNormalizedDataset(dir);
  const std::vector<HourBucket> buckets = BucketByHour(dataset.sessions, dataset.start);
  const nlohmann::json stats = StatsJson(ComputeDatasetStats(dataset.sessions));

  std::shared_ptr<acr::EmbeddingTable> content;
  if (NeedsContent(config)) content = PrepareContent(config, dataset, log);
  auto owned = BuildRoster(config, dataset, content);
  std::vector<baselines::Recommender*> roster;
  std::vector<std::string> names;
  for (const auto& r : owned) {
    roster.push_back(r.get());
    names.push_back(r->name());
  }

  eval::ProtocolConfig protocol = config.protocol;
  protocol.seed = config.seed;
  const auto article_keys = [&dataset](ArticleIndex a) -> std::string_view { return dataset.vocab.articles.Token(a); };
  eval::ProtocolResult result;
  if (dump_records) {
    fs::create_directories(config.output);
    std::ofstream records(config.output / "records.jsonl", std::ios::binary);
    if (!records) throw std::runtime_error("cannot write " + (config.output / "records.jsonl").string());
    nlohmann::json meta;
    meta["seed"] = config.seed;
    meta["dataset"] = stats;
    eval::RecordWriter writer(records, names, protocol.cutoffs, meta, article_keys,
                              [&dataset](std::int32_t s) -> std::string_view { return dataset.vocab.sessions.Token(s); });
    result = eval::RunProtocol(buckets, roster, protocol, dataset.start, article_keys, &writer, log);
    writer.Finish();
    records.flush();
    if (!records) throw std::runtime_error("failed writing records.jsonl");
  } else {
    result = eval::RunProtocol(buckets, roster, protocol, dataset.start, article_keys, nullptr, log);
  }

  Report report = BuildReport(names, protocol.cutoffs, result.windows, stats);
  WriteReportFiles(report, config.output);
  WriteReportText(out, report);
  return report;
}

Report CommandReport(const fs::path& records, const fs::path& output_dir, int only_window, std::ostream& out) {
  std::ifstream in(records, std::ios::binary);
  if (!in) throw DataError("cannot open records " + records.string());
  const eval::Replay replay = eval::ReplayRecords(in, only_window);
  const nlohmann::json dataset = replay.meta.is_object() && replay.meta.contains("dataset") ? replay.meta["dataset"]
                                                                                          : nlohmann::json();
  Report report = BuildReport(replay.recommenders, replay.cutoffs, replay.windows, dataset);
  WriteReportFiles(report, output_dir);
  WriteReportText(out, report);
  return report;
}

}  // namespace newsrec::cli
