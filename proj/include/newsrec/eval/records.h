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

#ifndef NEWSREC_EVAL_RECORDS_H_
#define NEWSREC_EVAL_RECORDS_H_

#include <cstdint>
#include <functional>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "newsrec/eval/protocol.h"

namespace newsrec::eval {

// Line-delimited JSON dump of a run, in this order:
//   {"type":"header","format":"newsrec-records-v1","recommenders":[...],"cutoffs":[...],"meta":{...}}
//   {"type":"window","window":w,"hour":h,"recommendable":n}
//   {"type":"event","window":w,"session":"id","prefix":k,"clock":t,
//    "candidates":["positive","neg1",...],"window_clicks":[...],"total_clicks":c,
//    "scores":[[per candidate] per recommender]}
//   ... more windows and events ...
//   {"type":"end","windows":W,"events":E}
// Doubles are written with round-trip precision so replay is exact.
class RecordWriter final : public RecordSink {
 public:
  RecordWriter(std::ostream& out, std::vector<std::string> recommenders, std::vector<std::size_t> cutoffs,
               nlohmann::json meta, std::function<std::string_view(ArticleIndex)> article_keys,
               std::function<std::string_view(std::int32_t)> session_keys);

  void BeginWindow(int window, int hour, std::int64_t recommendable) override;
  void Event(const PredictionRecord& record) override;
  // Writes the footer. Call once after the run.
  void Finish();

 private:
  std::ostream& out_;
  std::function<std::string_view(ArticleIndex)> article_keys_;
  std::function<std::string_view(std::int32_t)> session_keys_;
  std::int64_t windows_ = 0;
  std::int64_t events_ = 0;
};

struct Replay {
  std::vector<std::string> recommenders;
  std::vector<std::size_t> cutoffs;
  nlohmann::json meta;
  std::vector<WindowResult> windows;
  std::int64_t events = 0;
};

// Rebuilds per-window metrics from a dump. Throws DataError naming the line
// on malformed input, and naming the last good line when the footer is
// missing. `only_window` keeps a single window when set (>= 0).
Replay ReplayRecords(std::istream& in, int only_window = -1);

}  // namespace newsrec::eval

#endif  // NEWSREC_EVAL_RECORDS_H_
