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

// Acceptance checks. Prints one PASS/FAIL/SKIP line per criterion and
// exits nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "newsrec/baselines/recently_popular.h"
#include "newsrec/baselines/session_models.h"
#include "newsrec/cli/pipeline.h"
#include "newsrec/cli/report.h"
#include "newsrec/cli/run_config.h"
#include "newsrec/core/sessions.h"
#include "newsrec/core/synthetic.h"
#include "newsrec/eval/protocol.h"
#include "newsrec/metrics/t_test.h"
#include "newsrec/nar/model.h"
#include "newsrec/nar/recommender.h"
#include "support/baseline_oracles.h"
#include "support/metric_sims.h"
#include "support/nar_toy.h"
#include "support/op_trials.h"

namespace newsrec {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

enum class Outcome { kPass, kFail, kSkip };

struct Verdict {
  Outcome outcome = Outcome::kFail;
  std::string detail;
};

Verdict Check(bool ok, std::string detail) { return {ok ? Outcome::kPass : Outcome::kFail, std::move(detail)}; }

std::string Num(double value, int digits = 4) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  return buffer;
}

fs::path Scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("newsrec_acceptance_" + name);
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

const std::vector<const char*> kReportFiles = {"report.tsv", "report.txt", "windows.tsv", "significance.tsv"};

Verdict MetricAnalytics() {
  const auto random = testing::SimulateScorer(false, 50'000, 51, 10, 1);
  const auto oracle = testing::SimulateScorer(true, 50'000, 51, 10, 2);
  const bool ok = std::fabs(random.hr - 0.19608) <= 0.01 && std::fabs(random.mrr - 0.05743) <= 0.005 &&
                  oracle.hr == 1.0 && oracle.mrr == 1.0;
  return Check(ok, "random HR@10 " + Num(random.hr) + " MRR@10 " + Num(random.mrr) + ", oracle HR@10 " +
                       Num(oracle.hr) + " MRR@10 " + Num(oracle.mrr));
}

Verdict GradientCorrectness() {
  double worst = 0.0;
  std::string worst_op;
  for (const tensor::OpKind kind : testing::DifferentiableOps()) {
    const double error = testing::WorstOpError(kind, 100);
    if (error > worst || worst_op.empty()) {
      worst = std::max(worst, error);
      worst_op = tensor::OpName(kind);
    }
  }
  const nar::NarConfig toy = testing::MakeToy(6, 8, 8, 1).config;
  const double end_to_end = testing::EndToEndError(toy, 1);
  return Check(worst < 1e-4 && end_to_end < 1e-4,
               std::to_string(testing::DifferentiableOps().size()) + " ops x 100 trials, worst relative error " +
                   std::to_string(worst) + " (" + worst_op + "); end-to-end NAR loss " + std::to_string(end_to_end));
}

Verdict BaselineOracles() {
  std::int64_t mismatches = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) mismatches += testing::BaselineOracleMismatches(seed);
  return Check(mismatches == 0, "200 random corpora, " + std::to_string(mismatches) + " mismatching scores");
}

class SessionCounter final : public eval::RecordSink {
 public:
  void BeginWindow(int, int, std::int64_t) override {}
  void Event(const eval::PredictionRecord& record) override { ++per_session[record.session]; }
  std::map<std::int32_t, std::int64_t> per_session;
};

Verdict ProtocolFidelity() {
  SyntheticConfig config;
  config.n_hours = 30;
  SyntheticDataset data = GenerateSyntheticDataset(config, 4);
  const std::vector<HourBucket> buckets = BucketByHour(data.dataset.sessions, data.dataset.start);
  baselines::CoOccurrence co;
  baselines::RecentlyPopular rp;
  nar::NarConfig nc;
  nc.n_items = static_cast<std::size_t>(data.dataset.vocab.articles.size());
  nc.n_devices = static_cast<std::size_t>(data.dataset.vocab.devices.size());
  nc.n_locations = static_cast<std::size_t>(data.dataset.vocab.locations.size());
  auto catalog = std::make_shared<Catalog>(data.dataset.catalog);
  nar::NarRecommender lite("GRU4Rec-lite",
                           std::make_unique<nar::NarModel>(nar::Gru4RecLiteConfig(nc), nullptr, catalog, 4), 4);
  std::vector<baselines::Recommender*> roster = {&co, &rp, &lite};
  eval::ProtocolConfig protocol;
  protocol.seed = 4;
  SessionCounter counter;
  const Vocabulary& articles = data.dataset.vocab.articles;
  eval::ProtocolResult result;
  try {
    result = eval::RunProtocol(buckets, roster, protocol, data.dataset.start,
                               [&articles](ArticleIndex a) -> std::string_view { return articles.Token(a); },
                               &counter);
  } catch (const std::exception& e) {
    return Check(false, std::string("protocol threw: ") + e.what());
  }

  std::vector<std::pair<eval::Phase, int>> expected;
  for (int h = 0; h < 30; ++h) {
    if (h >= 5 && h % 5 == 0) expected.emplace_back(eval::Phase::kEvaluate, h);
    expected.emplace_back(eval::Phase::kTrain, h);
  }
  std::string hours;
  for (const auto& w : result.windows) hours += (hours.empty() ? "" : ",") + std::to_string(w.hour);
  std::int64_t wrong_sessions = 0;
  std::int64_t evaluated_sessions = 0;
  for (const int hour : {5, 10, 15, 20, 25}) {
    for (const Session* s : buckets[static_cast<std::size_t>(hour)].sessions) {
      ++evaluated_sessions;
      const auto it = counter.per_session.find(s->session);
      const std::int64_t got = it == counter.per_session.end() ? 0 : it->second;
      if (got != static_cast<std::int64_t>(s->length()) - 1) ++wrong_sessions;
    }
  }
  const bool ok = result.timeline == expected && result.leakage_checks == 5 && wrong_sessions == 0 &&
                  counter.per_session.size() == static_cast<std::size_t>(evaluated_sessions);
  return Check(ok, "evaluated hours " + hours + " each before training; " + std::to_string(result.leakage_checks) +
                       " leakage hash checks equal; " + std::to_string(evaluated_sessions) + " sessions, " +
                       std::to_string(wrong_sessions) + " without exactly L-1 events");
}

double Hr10(const cli::Report& report, const std::string& name) {
  const auto r = std::find(report.recommenders.begin(), report.recommenders.end(), name) - report.recommenders.begin();
  const auto m = std::find(report.metrics.begin(), report.metrics.end(), "HR@10") - report.metrics.begin();
  return report.aggregate.at(static_cast<std::size_t>(r)).at(static_cast<std::size_t>(m)).value_or(0.0);
}

Verdict Learnability() {
  // 50 articles cannot supply 50 negatives, so evaluation draws K = 40 and
  // sessions are capped at 8 clicks; the random baseline is 10 / 41.
  const fs::path dir = Scratch("learnability");
  const json doc = {
      {"seed", 1},
      {"output", dir.string()},
      {"data",
       {{"synthetic",
         {{"n_articles", 50}, {"n_hours", 40}, {"sessions_per_hour", 200}, {"alpha", 0.8}, {"max_length", 8},
          {"successor_tokens", true}}}}},
      {"protocol", {{"negatives", 40}}},
      {"roster", json::array({{{"algorithm", "CO"}}, {{"algorithm", "SR"}}, {{"algorithm", "RP"}},
                              {{"algorithm", "GRU4Rec-lite"}}, {{"algorithm", "NAR"}}})}};
  std::ostringstream out;
  const cli::Report report = cli::CommandRun(cli::ParseRunConfig(doc, "."), false, out, nullptr);
  const double random = 10.0 / 41.0;
  const double co = Hr10(report, "CO");
  const double sr = Hr10(report, "SR");
  const double rp = Hr10(report, "RP");
  const double lite = Hr10(report, "GRU4Rec-lite");
  const double nar = Hr10(report, "NAR");
  const bool a = co >= 2.0 * random && sr >= 2.0 * random;
  const bool b = nar >= rp && nar >= lite;
  return Check(a && b, std::string("(a) ") + (a ? "pass" : "FAIL") + ": CO " + Num(co) + ", SR " + Num(sr) +
                           " vs 2x random " + Num(2.0 * random) + "; (b) " + (b ? "pass" : "FAIL") + ": NAR " +
                           Num(nar) + " vs RP " + Num(rp) + ", GRU4Rec-lite " + Num(lite) + " (HR@10)");
}

json SmallRun(const fs::path& dir) {
  return {{"seed", 9},
          {"output", dir.string()},
          {"data", {{"synthetic", {{"n_hours", 16}, {"sessions_per_hour", 60}, {"n_articles", 120}}}}},
          {"acr", {{"epochs", 2}}}};
}

Verdict MetricReplay() {
  const fs::path dir = Scratch("replay");
  std::ostringstream out;
  cli::CommandRun(cli::ParseRunConfig(SmallRun(dir), "."), true, out, nullptr);
  cli::CommandReport(dir / "records.jsonl", dir / "replay", -1, out);
  std::string differing;
  for (const char* file : kReportFiles) {
    if (Slurp(dir / file) != Slurp(dir / "replay" / file)) differing += std::string(" ") + file;
  }
  return Check(differing.empty(), differing.empty() ? "replayed report files byte-identical to the live run (full roster)"
                                                    : "differs:" + differing);
}

Verdict Determinism() {
  const fs::path first = Scratch("determinism_a");
  const fs::path second = Scratch("determinism_b");
  std::ostringstream out;
  cli::CommandRun(cli::ParseRunConfig(SmallRun(first), "."), false, out, nullptr);
  cli::CommandRun(cli::ParseRunConfig(SmallRun(second), "."), false, out, nullptr);
  std::string differing;
  for (const char* file : kReportFiles) {
    if (Slurp(first / file) != Slurp(second / file)) differing += std::string(" ") + file;
  }
  return Check(differing.empty(),
               differing.empty() ? "two runs, same config and seed: report files byte-identical" : "differs:" + differing);
}

struct PublishedRow {
  const char* name;
  std::int64_t users, sessions, clicks, articles;
  double avg;
};

std::string CompareStats(const PublishedRow& row, const DatasetStats& got, bool& ok) {
  char avg[16];
  std::snprintf(avg, sizeof(avg), "%.2f", got.avg_session_length);
  char want_avg[16];
  std::snprintf(want_avg, sizeof(want_avg), "%.2f", row.avg);
  const bool same = got.n_users == row.users && got.n_sessions == row.sessions && got.n_clicks == row.clicks &&
                    got.n_articles == row.articles && std::string(avg) == want_avg;
  ok = ok && same;
  return std::string(row.name) + (same ? " matches" : " differs") + " (" + std::to_string(got.n_users) + " users, " +
         std::to_string(got.n_sessions) + " sessions, " + std::to_string(got.n_clicks) + " clicks, " +
         std::to_string(got.n_articles) + " articles, avg " + avg + ")";
}

// NEWSREC_G1_CLICKS points at the G1 clicks directory (clicks_hour_*.csv);
// NEWSREC_ADRESSA_CONFIG at a run config whose data block reads Adressa.
Verdict DatasetValidation() {
  const char* g1 = std::getenv("NEWSREC_G1_CLICKS");
  const char* adressa = std::getenv("NEWSREC_ADRESSA_CONFIG");
  if (g1 == nullptr && adressa == nullptr) {
    return {Outcome::kSkip, "public data absent (set NEWSREC_G1_CLICKS and/or NEWSREC_ADRESSA_CONFIG)"};
  }
  bool ok = true;
  std::string detail;
  if (g1 != nullptr) {
    const json doc = {{"output", Scratch("g1").string()},
                      {"data",
                       {{"clicks", g1},
                        {"timestamp_scale", 0.001},
                        {"columns",
                         {{"timestamp", "click_timestamp"},
                          {"session", "session_id"},
                          {"user", "user_id"},
                          {"article", "click_article_id"},
                          {"device", "click_deviceGroup"},
                          {"location", "click_region"}}}}},
                      {"roster", json::array({{{"algorithm", "CO"}}})}};
    const cli::Ingested g = cli::IngestDataset(cli::ParseRunConfig(doc, "."), nullptr);
    detail += CompareStats({"G1", 322'897, 1'048'594, 2'988'181, 46'033, 2.84}, g.summary.stats, ok);
  } else {
    detail += "G1 not supplied";
  }
  if (adressa != nullptr) {
    const cli::Ingested a = cli::IngestDataset(cli::LoadRunConfig(adressa), nullptr);
    detail += "; " + CompareStats({"Adressa", 314'661, 982'210, 2'648'999, 13'820, 2.70}, a.summary.stats, ok);
  } else {
    detail += "; Adressa not supplied";
  }
  return Check(ok, detail);
}

eval::WindowResult HitWindow(int index, const std::vector<int>& hits) {
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

Verdict SignificanceMachinery() {
  const std::vector<double> a = {1, 2, 3};
  const std::vector<double> b = {1, 1, 1};
  const metrics::TTestResult fixture = metrics::PairedTTest(a, b, cli::kSignificanceAlpha, 1);
  const bool fixture_ok = std::fabs(fixture.t - std::sqrt(3.0)) < 1e-12 && fixture.df == 2 &&
                          std::fabs(fixture.p_value - (1.0 - std::sqrt(3.0) / std::sqrt(5.0))) < 1e-12;
  // Cushny and Peebles sleep data: published t = -4.0621, df = 9, p = 0.002833.
  const std::vector<double> drug1 = {0.7, -1.6, -0.2, -1.2, -0.1, 3.4, 3.7, 0.8, 0.0, 2.0};
  const std::vector<double> drug2 = {1.9, 0.8, 1.1, 0.1, -0.1, 4.4, 5.5, 1.6, 4.6, 3.4};
  const metrics::TTestResult sleep = metrics::PairedTTest(drug1, drug2, 0.05, 1);
  const bool sleep_ok = std::fabs(sleep.t + 4.0621) < 5e-5 && sleep.df == 9 && std::fabs(sleep.p_value - 0.002833) < 1e-6;
  // p = 0.000844 for the best recommender: starred against one rival
  // (threshold 0.001), not against two (0.0005).
  const std::vector<int> best = {11, 12, 12, 12, 12};
  std::vector<eval::WindowResult> two;
  std::vector<eval::WindowResult> three;
  for (int w = 0; w < 5; ++w) {
    two.push_back(HitWindow(w, {best[w], 10}));
    three.push_back(HitWindow(w, {best[w], 10, 10}));
  }
  const cli::Report pair = cli::BuildReport({"A", "B"}, {5, 10}, two, json());
  const cli::Report trio = cli::BuildReport({"A", "B", "C"}, {5, 10}, three, json());
  const bool stars_ok = pair.starred[2] && !trio.starred[2];
  return Check(fixture_ok && sleep_ok && stars_ok,
               "t = " + Num(fixture.t, 6) + ", df " + std::to_string(fixture.df) + ", p " + Num(fixture.p_value, 6) +
                   "; sleep data t " + Num(sleep.t) + ", p " + Num(sleep.p_value, 6) + "; star at p 0.000844 with m=1 " +
                   (pair.starred[2] ? "yes" : "no") + ", m=2 " + (trio.starred[2] ? "yes" : "no"));
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;  // 0: no runtime bound
  std::function<Verdict()> run;
};

}  // namespace
}  // namespace newsrec

int main() {
  using namespace newsrec;
  const std::vector<Criterion> criteria = {
      {1, "metric analytics", 10, MetricAnalytics},
      {2, "gradient correctness", 60, GradientCorrectness},
      {3, "baseline oracle equivalence", 30, BaselineOracles},
      {4, "protocol fidelity", 30, ProtocolFidelity},
      {5, "learnability", 600, Learnability},
      {6, "metric replay", 0, MetricReplay},
      {7, "determinism", 0, Determinism},
      {8, "dataset validation", 0, DatasetValidation},
      {9, "significance machinery", 0, SignificanceMachinery},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict verdict;
    try {
      verdict = c.run();
    } catch (const std::exception& e) {
      verdict = {Outcome::kFail, std::string("threw: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string timing = Num(seconds, 1) + " s";
    if (c.budget_seconds > 0) {
      timing += " of " + Num(c.budget_seconds, 0) + " s";
      if (verdict.outcome == Outcome::kPass && seconds > c.budget_seconds) {
        verdict.outcome = Outcome::kFail;
        verdict.detail += "; over the runtime budget";
      }
    }
    const char* label = verdict.outcome == Outcome::kPass ? "PASS" : verdict.outcome == Outcome::kSkip ? "SKIP" : "FAIL";
    if (verdict.outcome == Outcome::kFail) ++failures;
    std::printf("%s %d %s: %s [%s]\n", label, c.id, c.title, verdict.detail.c_str(), timing.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
