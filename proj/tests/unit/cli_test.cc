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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "newsrec/cli/pipeline.h"
#include "newsrec/cli/report.h"
#include "newsrec/cli/run_config.h"
#include "newsrec/core/errors.h"

namespace newsrec::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

fs::path Scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("newsrec_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

json SyntheticDocument(const fs::path& output) {
  return json{{"seed", 5},
              {"output", output.string()},
              {"data", {{"synthetic", {{"n_hours", 11}, {"sessions_per_hour", 40}, {"n_articles", 90}}}}},
              {"acr", {{"epochs", 1}}}};
}

TEST(RunConfig, DefaultsAndOverrides) {
  json doc = SyntheticDocument("out");
  doc["protocol"] = {{"negatives", 20}, {"cutoffs", {5, 10, 20}}};
  doc["nar"] = {{"hidden_dim", 16}};
  doc["roster"] = {{{"algorithm", "CO"}}, {{"algorithm", "NAR"}, {"name", "NAR-small"}, {"hidden_dim", 8}}};
  const RunConfig config = ParseRunConfig(doc, "/base");
  EXPECT_EQ(config.output, fs::path("/base/out"));
  EXPECT_EQ(config.seed, 5u);
  EXPECT_EQ(config.protocol.negatives, 20u);
  EXPECT_EQ(config.protocol.seed, 5u);
  EXPECT_EQ(config.synthetic->n_hours, 11);
  ASSERT_EQ(config.roster.size(), 2u);
  EXPECT_EQ(config.roster[1].name, "NAR-small");
  EXPECT_EQ(ResolveNarConfig(config, config.roster[1]).hidden_dim, 8u);
  EXPECT_EQ(ResolveNarConfig(config, config.roster[0]).hidden_dim, 16u);
}

TEST(RunConfig, DefaultRosterIsTheFullComparison) {
  const RunConfig config = ParseRunConfig(SyntheticDocument("out"), ".");
  std::vector<std::string> names;
  for (const auto& entry : config.roster) names.push_back(entry.name);
  EXPECT_EQ(names, (std::vector<std::string>{"CO", "SR", "Item-kNN", "V-SkNN", "RP", "CB", "GRU4Rec-lite", "NAR"}));
  const auto lite = ResolveNarConfig(config, config.roster[6]);
  EXPECT_TRUE(lite.use_item_id);
  EXPECT_FALSE(lite.use_content);
}

TEST(RunConfig, Rejections) {
  const auto rejects = [](json doc) { EXPECT_THROW(ParseRunConfig(doc, "."), ConfigError) << doc.dump(); };
  json doc = SyntheticDocument("out");
  doc["protocl"] = json::object();
  rejects(doc);  // typo
  doc = SyntheticDocument("out");
  doc["data"]["clicks"] = "x.csv";
  rejects(doc);  // two sources
  doc = SyntheticDocument("out");
  doc["data"] = json::object();
  rejects(doc);  // no source
  doc = SyntheticDocument("out");
  doc["roster"] = json::array();
  rejects(doc);
  doc["roster"] = {{{"algorithm", "CO"}}, {{"algorithm", "CO"}}};
  rejects(doc);  // duplicate name
  doc["roster"] = {{{"algorithm", "BPR"}}};
  rejects(doc);
  doc["roster"] = {{{"algorithm", "Item-kNN"}, {"lamda", 3}}};
  rejects(doc);
  doc["roster"] = {{{"algorithm", "RP"}, {"decay", 0.5}}};
  rejects(doc);
  doc = SyntheticDocument("out");
  doc["protocol"] = {{"negatives", "fifty"}};
  rejects(doc);
  doc = SyntheticDocument("out");
  doc["data"]["synthetic"]["alpha"] = 1.5;
  rejects(doc);
}

TEST(RunConfig, MissingCatalogNamesThePath) {
  const fs::path dir = Scratch("catalog");
  std::ofstream(dir / "clicks.csv") << "timestamp,session_id,user_id,article_id\n";
  const json doc = {{"data", {{"clicks", "clicks.csv"}, {"catalog", "articles.jsonl"}}}};
  try {
    ParseRunConfig(doc, dir);
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find((dir / "articles.jsonl").string()), std::string::npos);
  }
}

TEST(RunConfig, LoadReportsBadJson) {
  const fs::path dir = Scratch("badjson");
  std::ofstream(dir / "run.json") << "{\"seed\": 1,";
  EXPECT_THROW(LoadRunConfig(dir / "run.json"), ConfigError);
  EXPECT_THROW(LoadRunConfig(dir / "absent.json"), ConfigError);
}

TEST(Ingest, SyntheticStatsFollowTheGenerator) {
  const fs::path dir = Scratch("ingest");
  const RunConfig config = ParseRunConfig(SyntheticDocument(dir), ".");
  std::ostringstream out;
  const IngestSummary summary = CommandIngest(config, out, nullptr);
  // The generator emits sessions of at least two clicks, so none are dropped.
  EXPECT_EQ(summary.stats.n_sessions, 11 * 40);
  EXPECT_EQ(summary.dropped_singleton_clicks, 0);
  EXPECT_NE(out.str().find("sessions\t440\n"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir / "dataset" / "sessions.jsonl"));
}

TEST(Ingest, FileSourceWithDirectoryOfLogs) {
  const fs::path dir = Scratch("files");
  fs::create_directories(dir / "clicks");
  std::ofstream(dir / "clicks" / "b.csv") << "timestamp,session_id,user_id,article_id\n7300,s2,u1,c\n7400,s2,u1,a\n";
  std::ofstream(dir / "clicks" / "a.csv")
      << "timestamp,session_id,user_id,article_id\n10,s1,u1,a\n20,s1,u1,b\nbad,s1,u1,b\n30,s1,u1,c\n40,s3,u2,d\n";
  std::ofstream(dir / "articles.jsonl")
      << R"({"article_id":"a","publish_timestamp":0,"category":"x","tokens":["t1","t2"]})" << '\n'
      << R"({"article_id":"b","publish_timestamp":0,"category":"y","tokens":["t3"]})" << '\n';
  const json doc = {{"output", "out"}, {"data", {{"clicks", "clicks"}, {"catalog", "articles.jsonl"}}}};
  const RunConfig config = ParseRunConfig(doc, dir);
  const Ingested ingested = IngestDataset(config, nullptr);
  EXPECT_EQ(ingested.summary.stats.n_sessions, 2);
  EXPECT_EQ(ingested.summary.stats.n_clicks, 5);
  EXPECT_EQ(ingested.summary.stats.n_users, 1);
  EXPECT_EQ(ingested.summary.malformed_lines, 1);
  EXPECT_EQ(ingested.summary.dropped_singleton_clicks, 1);
  EXPECT_EQ(ingested.summary.stub_articles, 2);  // c and d
  EXPECT_EQ(ingested.dataset.start, 0);
}

// 100 predictions per window; the first `hits` land at rank 1, the rest miss.
eval::WindowResult Window(int index, const std::vector<int>& hits) {
  const std::vector<std::size_t> cutoffs = {5, 10};
  eval::WindowResult w = eval::MakeWindow(index, 5 * (index + 1), 100, hits.size(), cutoffs);
  const std::vector<std::int32_t> shown = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  for (std::size_t r = 0; r < hits.size(); ++r) {
    for (int i = 0; i < 100; ++i) {
      const std::size_t rank = i < hits[r] ? 1 : 40;
      w.metrics[r][0].Add(rank, std::span(shown).first(5), 1.0);
      w.metrics[r][1].Add(rank, shown, 1.0);
    }
  }
  return w;
}

TEST(Report, ColumnsAndUnweightedMeans) {
  const Report report = BuildReport({"A", "B"}, {5, 10}, {Window(0, {10, 30}), Window(1, {20, 30})}, json());
  std::ostringstream tsv;
  WriteReportTsv(tsv, report);
  std::string header;
  std::getline(std::istringstream(tsv.str()) >> std::ws, header);
  EXPECT_EQ(header, "recommender\tHR@5\tMRR@5\tHR@10\tMRR@10\tCOV@10\tESI-R@10\tn_predictions");
  EXPECT_DOUBLE_EQ(*report.aggregate[0][0], 0.15);
  EXPECT_EQ(report.predictions[0], 200);
  EXPECT_DOUBLE_EQ(*report.aggregate[0][4], 0.1);  // 10 distinct of 100 recommendable
  EXPECT_EQ(report.best[0], 1u);
  EXPECT_NE(tsv.str().find("A\t0.150000\t0.150000\t0.150000\t0.150000\t0.100000\t1.000000\t200\n"),
            std::string::npos);
}

TEST(Report, UnweightedAcrossUnequalWindows) {
  eval::WindowResult big = Window(0, {50});
  eval::WindowResult small = eval::MakeWindow(1, 10, 100, 1, std::vector<std::size_t>{5, 10});
  const std::vector<std::int32_t> shown = {1, 2, 3, 4, 5};
  small.metrics[0][0].Add(40, shown, 1.0);
  small.metrics[0][1].Add(40, shown, 1.0);
  const Report report = BuildReport({"A"}, {5, 10}, {big, small}, json());
  EXPECT_DOUBLE_EQ(*report.aggregate[0][2], 0.25);  // (0.5 + 0) / 2, not 50 / 101
}

TEST(Report, StarNeedsBonferroniLevel) {
  // Paired differences (1, 2, 2, 2, 2) percentage points: p = 0.000844.
  const std::vector<int> a = {11, 12, 12, 12, 12};
  std::vector<eval::WindowResult> two;
  std::vector<eval::WindowResult> three;
  for (int w = 0; w < 5; ++w) {
    two.push_back(Window(w, {a[w], 10}));
    three.push_back(Window(w, {a[w], 10, 10}));
  }
  const Report pair = BuildReport({"A", "B"}, {5, 10}, two, json());
  ASSERT_EQ(pair.best[2], 0u);
  EXPECT_NEAR(*pair.comparisons[2].p_value, 0.0008438325176012791, 1e-9);
  EXPECT_TRUE(pair.starred[2]);  // p < 0.001 / 1
  const Report trio = BuildReport({"A", "B", "C"}, {5, 10}, three, json());
  EXPECT_FALSE(trio.starred[2]);  // p > 0.001 / 2
  std::ostringstream text;
  WriteReportText(text, pair);
  EXPECT_NE(text.str().find("[0.1180]*"), std::string::npos);
}

TEST(Report, SingleWindowHasNoTest) {
  const Report report = BuildReport({"A", "B"}, {5, 10}, {Window(0, {90, 10})}, json());
  EXPECT_FALSE(report.comparisons[0].p_value.has_value());
  EXPECT_FALSE(report.starred[0]);
  std::ostringstream sig;
  WriteSignificanceTsv(sig, report);
  EXPECT_NE(sig.str().find("\tNA\tno\n"), std::string::npos);
}

json Roster(std::initializer_list<const char*> algorithms) {
  json roster = json::array();
  for (const char* a : algorithms) roster.push_back({{"algorithm", a}});
  return roster;
}

TEST(Run, CoBeatsRecentPopularityOnPlantedPattern) {
  const fs::path dir = Scratch("co_rp");
  json doc = SyntheticDocument(dir);
  doc["data"]["synthetic"]["n_hours"] = 21;
  doc["roster"] = Roster({"RP", "CO"});
  std::ostringstream out;
  const Report report = CommandRun(ParseRunConfig(doc, "."), false, out, nullptr);
  EXPECT_GT(*report.aggregate[1][2], *report.aggregate[0][2]);
  EXPECT_TRUE(fs::exists(dir / "report.tsv"));
  EXPECT_FALSE(fs::exists(dir / "records.jsonl"));
}

TEST(Run, SameSeedSameBytesAndReplayMatches) {
  const fs::path dir = Scratch("replay");
  json doc = SyntheticDocument(dir);
  doc["roster"] = Roster({"CO", "SR", "RP", "CB", "GRU4Rec-lite", "NAR"});
  const RunConfig config = ParseRunConfig(doc, ".");
  std::ostringstream out;
  CommandRun(config, true, out, nullptr);
  const std::string first = Slurp(dir / "report.tsv");
  const std::string windows = Slurp(dir / "windows.tsv");
  fs::remove_all(dir / "dataset");  // force a fresh ingest
  CommandRun(config, true, out, nullptr);
  EXPECT_EQ(Slurp(dir / "report.tsv"), first);
  EXPECT_EQ(Slurp(dir / "windows.tsv"), windows);

  CommandReport(dir / "records.jsonl", dir / "replay", -1, out);
  for (const char* file : {"report.tsv", "report.txt", "windows.tsv", "significance.tsv"}) {
    EXPECT_EQ(Slurp(dir / "replay" / file), Slurp(dir / file)) << file;
  }
}

TEST(Run, ReplayOfOneWindowGivesThatWindowsRow) {
  const fs::path dir = Scratch("one_window");
  json doc = SyntheticDocument(dir);
  doc["roster"] = Roster({"CO", "RP"});
  std::ostringstream out;
  const Report full = CommandRun(ParseRunConfig(doc, "."), true, out, nullptr);
  ASSERT_EQ(full.windows.size(), 2u);
  const Report one = CommandReport(dir / "records.jsonl", dir / "w1", 1, out);
  ASSERT_EQ(one.windows.size(), 1u);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t m = 0; m < full.metrics.size(); ++m) EXPECT_EQ(one.aggregate[r][m], full.windows[1].values[r][m]);
  }
}

TEST(Run, TruncatedRecordsNameLastGoodLine) {
  const fs::path dir = Scratch("truncated");
  json doc = SyntheticDocument(dir);
  doc["roster"] = Roster({"CO"});
  std::ostringstream out;
  CommandRun(ParseRunConfig(doc, "."), true, out, nullptr);
  std::istringstream lines(Slurp(dir / "records.jsonl"));
  std::ofstream cut(dir / "cut.jsonl", std::ios::binary);
  std::string line;
  for (int i = 0; i < 7 && std::getline(lines, line); ++i) cut << line << '\n';
  cut.close();
  try {
    CommandReport(dir / "cut.jsonl", dir / "cut", -1, out);
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("last good line is 7"), std::string::npos) << e.what();
  }
}

TEST(Run, CorruptRecordNamesItsLine) {
  const fs::path dir = Scratch("corrupt");
  std::ofstream(dir / "bad.jsonl") << R"({"type":"header","format":"newsrec-records-v1","recommenders":["CO"],"cutoffs":[10],"meta":{}})"
                                   << "\n{not json\n";
  std::ostringstream out;
  try {
    CommandReport(dir / "bad.jsonl", dir / "x", -1, out);
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

}  // namespace
}  // namespace newsrec::cli
