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

#include "newsrec/core/click_log.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string_view>

#include "json.hpp"
#include "newsrec/core/errors.h"

namespace newsrec {
namespace {

std::vector<std::string_view> SplitLine(std::string_view line, char separator) {
  std::vector<std::string_view> fields;
  std::size_t begin = 0;
  while (true) {
    const std::size_t end = line.find(separator, begin);
    fields.push_back(line.substr(begin, end == std::string_view::npos ? std::string_view::npos : end - begin));
    if (end == std::string_view::npos) break;
    begin = end + 1;
  }
  return fields;
}

std::optional<Timestamp> ParseTimestamp(std::string_view text, double scale) {
  while (!text.empty() && (text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  if (text.empty()) return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  const auto seconds = static_cast<Timestamp>(std::floor(value * scale));
  if (seconds <= 0) return std::nullopt;
  return seconds;
}

std::string_view Trim(std::string_view text) {
  while (!text.empty() && (text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  return text;
}

struct ColumnIndex {
  int timestamp = -1;
  int session = -1;
  int user = -1;
  int article = -1;
  int device = -1;
  int location = -1;
};

int FindColumn(const std::vector<std::string_view>& header, const std::string& name) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (Trim(header[i]) == name) return static_cast<int>(i);
  }
  return -1;
}

ColumnIndex ResolveHeader(std::string_view header_line, const ClickLogSchema& schema) {
  const auto header = SplitLine(header_line, schema.separator);
  ColumnIndex columns;
  const auto require = [&](const std::string& name) {
    const int index = FindColumn(header, name);
    if (index < 0) {
      throw DataError("click log header is missing mandatory column '" + name + "'");
    }
    return index;
  };
  columns.timestamp = require(schema.timestamp_column);
  columns.session = require(schema.session_column);
  columns.user = require(schema.user_column);
  columns.article = require(schema.article_column);
  if (!schema.device_column.empty()) columns.device = FindColumn(header, schema.device_column);
  if (!schema.location_column.empty()) columns.location = FindColumn(header, schema.location_column);
  return columns;
}

void CountMalformed(ClickLogResult& result, std::int64_t line_number) {
  if (result.malformed++ == 0) result.first_malformed_line = line_number;
}

void ParseDelimited(std::istream& in, const ClickLogSchema& schema, DatasetVocab& vocab,
                    ClickLogResult& result) {
  std::string line;
  if (!std::getline(in, line)) {
    throw DataError("click log is empty (no header line)");
  }
  const ColumnIndex columns = ResolveHeader(line, schema);
  const int needed = std::max({columns.timestamp, columns.session, columns.user, columns.article,
                               columns.device, columns.location});
  std::int64_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (Trim(line).empty()) continue;
    const auto fields = SplitLine(line, schema.separator);
    if (static_cast<int>(fields.size()) <= needed) {
      CountMalformed(result, line_number);
      continue;
    }
    const auto timestamp = ParseTimestamp(fields[columns.timestamp], schema.timestamp_scale);
    const auto session = Trim(fields[columns.session]);
    const auto user = Trim(fields[columns.user]);
    const auto article = Trim(fields[columns.article]);
    if (!timestamp || session.empty() || user.empty() || article.empty()) {
      CountMalformed(result, line_number);
      continue;
    }
    Click click;
    click.timestamp = *timestamp;
    click.session = vocab.sessions.Intern(session);
    click.user = vocab.users.Intern(user);
    click.article = vocab.articles.Intern(article);
    if (columns.device >= 0) click.device = vocab.devices.Intern(Trim(fields[columns.device]));
    if (columns.location >= 0) click.location = vocab.locations.Intern(Trim(fields[columns.location]));
    result.clicks.push_back(click);
  }
}

std::optional<std::string> JsonToken(const nlohmann::json& record, const std::string& key) {
  const auto it = record.find(key);
  if (it == record.end() || it->is_null()) return std::nullopt;
  if (it->is_string()) return it->get<std::string>();
  if (it->is_number_integer() || it->is_number_unsigned()) return it->dump();
  return std::nullopt;
}

void ParseJsonLines(std::istream& in, const ClickLogSchema& schema, DatasetVocab& vocab,
                    ClickLogResult& result) {
  std::string line;
  std::int64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (Trim(line).empty()) continue;
    const auto record = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (record.is_discarded() || !record.is_object()) {
      CountMalformed(result, line_number);
      continue;
    }
    std::optional<Timestamp> timestamp;
    if (const auto it = record.find(schema.timestamp_column); it != record.end()) {
      if (it->is_number()) {
        timestamp = ParseTimestamp(it->dump(), schema.timestamp_scale);
      } else if (it->is_string()) {
        timestamp = ParseTimestamp(it->get<std::string>(), schema.timestamp_scale);
      }
    }
    const auto session = JsonToken(record, schema.session_column);
    const auto user = JsonToken(record, schema.user_column);
    const auto article = JsonToken(record, schema.article_column);
    if (!timestamp || !session || !user || !article || session->empty() || user->empty() ||
        article->empty()) {
      CountMalformed(result, line_number);
      continue;
    }
    Click click;
    click.timestamp = *timestamp;
    click.session = vocab.sessions.Intern(*session);
    click.user = vocab.users.Intern(*user);
    click.article = vocab.articles.Intern(*article);
    if (!schema.device_column.empty()) {
      if (auto device = JsonToken(record, schema.device_column)) click.device = vocab.devices.Intern(*device);
    }
    if (!schema.location_column.empty()) {
      if (auto location = JsonToken(record, schema.location_column)) {
        click.location = vocab.locations.Intern(*location);
      }
    }
    result.clicks.push_back(click);
  }
}

}  // namespace

ClickLogResult ParseClickLog(std::istream& in, const ClickLogSchema& schema, DatasetVocab& vocab) {
  ClickLogResult result;
  if (schema.format == RecordFormat::kDelimited) {
    ParseDelimited(in, schema, vocab, result);
  } else {
    ParseJsonLines(in, schema, vocab, result);
  }
  return result;
}

ClickLogResult ParseClickLogFile(const std::filesystem::path& path, const ClickLogSchema& schema,
                                 DatasetVocab& vocab) {
  std::ifstream in(path);
  if (!in) {
    throw DataError("cannot read click log " + path.string());
  }
  try {
    return ParseClickLog(in, schema, vocab);
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

void WriteClickLog(std::ostream& out, std::span<const Click> clicks, const DatasetVocab& vocab) {
  out << "timestamp,session_id,user_id,article_id,device,location\n";
  for (const Click& click : clicks) {
    out << click.timestamp << ',' << vocab.sessions.Token(click.session) << ','
        << vocab.users.Token(click.user) << ',' << vocab.articles.Token(click.article) << ','
        << vocab.devices.Token(click.device) << ',' << vocab.locations.Token(click.location) << '\n';
  }
}

}  // namespace newsrec
