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

#include "newsrec/core/sessions.h"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "newsrec/core/errors.h"

namespace newsrec {
namespace {

// Groups clicks by `key`, preserving first-appearance order of groups and
// input order inside each group.
template <typename KeyFn>
std::vector<std::vector<Click>> GroupBy(std::span<const Click> clicks, KeyFn key) {
  std::unordered_map<std::int32_t, std::size_t> slot;
  std::vector<std::vector<Click>> groups;
  for (const Click& click : clicks) {
    auto [it, inserted] = slot.emplace(key(click), groups.size());
    if (inserted) groups.emplace_back();
    groups[it->second].push_back(click);
  }
  for (auto& group : groups) {
    std::stable_sort(group.begin(), group.end(),
                     [](const Click& a, const Click& b) { return a.timestamp < b.timestamp; });
  }
  return groups;
}

void Emit(std::vector<Click> clicks, SessionizeResult& result) {
  std::vector<Click> collapsed;
  collapsed.reserve(clicks.size());
  for (const Click& click : clicks) {
    if (!collapsed.empty() && collapsed.back().article == click.article) {
      ++result.collapsed_duplicates;
      continue;
    }
    collapsed.push_back(click);
  }
  if (collapsed.size() < 2) {
    result.dropped_singleton_clicks += static_cast<std::int64_t>(collapsed.size());
    return;
  }
  Session session;
  session.session = collapsed.front().session;
  session.user = collapsed.front().user;
  session.clicks = std::move(collapsed);
  result.sessions.push_back(std::move(session));
}

}  // namespace

SessionizeResult BuildSessions(std::span<const Click> clicks, SessionMode mode, Timestamp gap_seconds,
                               DatasetVocab& vocab) {
  SessionizeResult result;
  if (mode == SessionMode::kProvidedId) {
    for (auto& group : GroupBy(clicks, [](const Click& c) { return c.session; })) {
      Emit(std::move(group), result);
    }
  } else {
    if (gap_seconds <= 0) {
      throw ConfigError("gap_split sessionization needs gap_seconds > 0");
    }
    for (auto& group : GroupBy(clicks, [](const Click& c) { return c.user; })) {
      const std::string& user = vocab.users.Token(group.front().user);
      std::int32_t ordinal = 0;
      std::vector<Click> current;
      const auto flush = [&] {
        if (current.empty()) return;
        const std::int32_t id = vocab.sessions.Intern(user + "#" + std::to_string(ordinal++));
        for (Click& click : current) click.session = id;
        Emit(std::move(current), result);
        current.clear();
      };
      for (const Click& click : group) {
        if (!current.empty() && click.timestamp - current.back().timestamp > gap_seconds) flush();
        current.push_back(click);
      }
      flush();
    }
  }
  std::stable_sort(result.sessions.begin(), result.sessions.end(),
                   [](const Session& a, const Session& b) { return a.start() < b.start(); });
  return result;
}

std::vector<HourBucket> BucketByHour(std::span<Session> sessions, Timestamp dataset_start) {
  std::vector<HourBucket> buckets;
  std::vector<Session*> ordered;
  ordered.reserve(sessions.size());
  for (Session& session : sessions) {
    if (session.start() < dataset_start) {
      throw std::invalid_argument("session starts before dataset_start");
    }
    ordered.push_back(&session);
  }
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const Session* a, const Session* b) { return a->start() < b->start(); });
  for (Session* session : ordered) {
    const auto hour = static_cast<std::int32_t>((session->start() - dataset_start) / kSecondsPerHour);
    session->start_hour = hour;
    while (static_cast<std::int32_t>(buckets.size()) <= hour) {
      buckets.push_back(HourBucket{static_cast<std::int32_t>(buckets.size()), {}});
    }
    buckets[hour].sessions.push_back(session);
  }
  return buckets;
}

DatasetStats ComputeDatasetStats(std::span<const Session> sessions) {
  if (sessions.empty()) {
    throw DataError("no sessions: dataset statistics are undefined");
  }
  std::unordered_set<std::int32_t> users;
  std::unordered_set<ArticleIndex> articles;
  DatasetStats stats;
  for (const Session& session : sessions) {
    users.insert(session.user);
    for (const Click& click : session.clicks) articles.insert(click.article);
    stats.n_clicks += static_cast<std::int64_t>(session.length());
  }
  stats.n_users = static_cast<std::int64_t>(users.size());
  stats.n_sessions = static_cast<std::int64_t>(sessions.size());
  stats.n_articles = static_cast<std::int64_t>(articles.size());
  stats.avg_session_length = static_cast<double>(stats.n_clicks) / static_cast<double>(stats.n_sessions);
  return stats;
}

}  // namespace newsrec
