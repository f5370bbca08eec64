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

#include "newsrec/eval/records.h"

#include <string>

#include "newsrec/core/errors.h"
#include "newsrec/core/vocabulary.h"

namespace newsrec::eval {

using nlohmann::json;

namespace {

constexpr std::string_view kFormat = "newsrec-records-v1";

void WriteLine(std::ostream& out, const json& line) { out << line.dump() << '\n'; }

}  // namespace

RecordWriter::RecordWriter(std::ostream& out, std::vector<std::string> recommenders, std::vector<std::size_t> cutoffs,
                           json meta, std::function<std::string_view(ArticleIndex)> article_keys,
                           std::function<std::string_view(std::int32_t)> session_keys)
    : out_(out), article_keys_(std::move(article_keys)), session_keys_(std::move(session_keys)) {
  WriteLine(out_, {{"type", "header"},
                   {"format", kFormat},
                   {"recommenders", recommenders},
                   {"cutoffs", cutoffs},
                   {"meta", std::move(meta)}});
}

void RecordWriter::BeginWindow(int window, int hour, std::int64_t recommendable) {
  ++windows_;
  WriteLine(out_, {{"type", "window"}, {"window", window}, {"hour", hour}, {"recommendable", recommendable}});
}

void RecordWriter::Event(const PredictionRecord& record) {
  ++events_;
  json candidates = json::array();
  for (const ArticleIndex c : record.candidates) candidates.push_back(article_keys_(c));
  WriteLine(out_, {{"type", "event"},
                   {"window", record.window},
                   {"session", session_keys_(record.session)},
                   {"prefix", record.prefix_length},
                   {"clock", record.clock},
                   {"candidates", std::move(candidates)},
                   {"window_clicks", record.window_clicks},
                   {"total_clicks", record.total_clicks},
                   {"scores", record.scores}});
}

void RecordWriter::Finish() {
  WriteLine(out_, {{"type", "end"}, {"windows", windows_}, {"events", events_}});
  out_.flush();
}

Replay ReplayRecords(std::istream& in, int only_window) {
  Replay replay;
  Vocabulary ids(false);
  std::string text;
  std::int64_t line_number = 0;
  std::int64_t windows_seen = 0;
  std::int64_t events_seen = 0;
  bool header = false;
  bool finished = false;
  WindowResult* current = nullptr;
  const auto fail = [&](const std::string& why) {
    throw DataError("records line " + std::to_string(line_number) + ": " + why);
  };
  while (std::getline(in, text)) {
    ++line_number;
    if (finished) fail("content after the end marker");
    json line;
    try {
      line = json::parse(text);
      const std::string type = line.at("type").get<std::string>();
      if (!header) {
        if (type != "header" || line.at("format").get<std::string>() != kFormat) fail("missing records header");
        replay.recommenders = line.at("recommenders").get<std::vector<std::string>>();
        replay.cutoffs = line.at("cutoffs").get<std::vector<std::size_t>>();
        replay.meta = line.at("meta");
        if (replay.recommenders.empty() || replay.cutoffs.empty()) fail("empty roster or cutoffs");
        header = true;
      } else if (type == "window") {
        ++windows_seen;
        const int window = line.at("window").get<int>();
        current = nullptr;
        if (only_window < 0 || window == only_window) {
          replay.windows.push_back(MakeWindow(window, line.at("hour").get<int>(),
                                              line.at("recommendable").get<std::int64_t>(),
                                              replay.recommenders.size(), replay.cutoffs));
          current = &replay.windows.back();
        }
      } else if (type == "event") {
        ++events_seen;
        if (windows_seen == 0) fail("event before any window");
        if (current == nullptr) continue;
        if (line.at("window").get<int>() != current->window) fail("event belongs to another window");
        const auto keys_owned = line.at("candidates").get<std::vector<std::string>>();
        const auto scores = line.at("scores").get<std::vector<std::vector<double>>>();
        const auto clicks = line.at("window_clicks").get<std::vector<std::int64_t>>();
        if (scores.size() != replay.recommenders.size()) fail("score rows do not match the roster");
        for (const auto& row : scores) {
          if (row.size() != keys_owned.size()) fail("score count does not match candidates");
        }
        if (clicks.size() != keys_owned.size() || keys_owned.size() < 2) fail("bad candidate data");
        std::vector<std::string_view> keys(keys_owned.begin(), keys_owned.end());
        std::vector<std::int32_t> idx;
        for (const std::string& key : keys_owned) idx.push_back(ids.Intern(key));
        AccumulateEvent({idx, keys, scores, clicks, line.at("total_clicks").get<std::int64_t>()}, replay.cutoffs,
                        *current);
        ++replay.events;
      } else if (type == "end") {
        if (line.at("windows").get<std::int64_t>() != windows_seen ||
            line.at("events").get<std::int64_t>() != events_seen) {
          fail("end marker counts do not match the file");
        }
        finished = true;
      } else {
        fail("unknown record type '" + type + "'");
      }
    } catch (const json::exception& e) {
      fail(e.what());
    }
  }
  if (!header) throw DataError("records file is empty");
  if (!finished) {
    throw DataError("records file is truncated; last good line is " + std::to_string(line_number) +
                    " (no end marker)");
  }
  return replay;
}

}  // namespace newsrec::eval
