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

#include "newsrec/cli/run_config.h"

#include <fstream>
#include <set>

#include "newsrec/core/errors.h"
#include "newsrec/core/hash.h"

namespace newsrec::cli {
namespace {

using nlohmann::json;

// Reads fields of one JSON object and rejects the keys nobody asked for.
class Section {
 public:
  Section(const json& node, std::string path) : node_(node), path_(std::move(path)) {
    if (!node_.is_object()) throw ConfigError(path_ + " must be an object");
  }

  bool Has(const std::string& key) const { return node_.contains(key); }

  template <typename T>
  void Read(const std::string& key, T& out) {
    seen_.insert(key);
    if (!node_.contains(key)) return;
    try {
      out = node_.at(key).get<T>();
    } catch (const json::exception&) {
      throw ConfigError(path_ + "." + key + " has the wrong type");
    }
  }

  const json& Child(const std::string& key) {
    seen_.insert(key);
    return node_.at(key);
  }

  void Finish() const {
    for (const auto& [key, value] : node_.items()) {
      if (!seen_.contains(key)) throw ConfigError("unknown key " + path_ + "." + key);
    }
  }

 private:
  const json& node_;
  std::string path_;
  std::set<std::string> seen_;
};

std::filesystem::path Resolve(const std::filesystem::path& base, const std::string& value) {
  const std::filesystem::path p(value);
  return p.is_absolute() ? p : base / p;
}

SyntheticConfig ParseSynthetic(const json& node) {
  SyntheticConfig c;
  Section s(node, "data.synthetic");
  s.Read("n_articles", c.n_articles);
  s.Read("n_hours", c.n_hours);
  s.Read("sessions_per_hour", c.sessions_per_hour);
  s.Read("min_length", c.min_length);
  s.Read("max_length", c.max_length);
  s.Read("continue_prob", c.continue_prob);
  s.Read("alpha", c.alpha);
  s.Read("n_categories", c.n_categories);
  s.Read("vocab_size", c.vocab_size);
  s.Read("tokens_per_article", c.tokens_per_article);
  s.Read("category_token_purity", c.category_token_purity);
  s.Read("successor_tokens", c.successor_tokens);
  s.Read("n_users", c.n_users);
  s.Read("n_devices", c.n_devices);
  s.Read("n_locations", c.n_locations);
  s.Read("start_timestamp", c.start_timestamp);
  s.Read("min_click_gap", c.min_click_gap);
  s.Read("max_click_gap", c.max_click_gap);
  s.Finish();
  c.Validate();
  return c;
}

FileSource ParseFiles(Section& s, const std::filesystem::path& base) {
  FileSource f;
  const json& clicks = s.Child("clicks");
  if (clicks.is_string()) {
    f.clicks.push_back(Resolve(base, clicks.get<std::string>()));
  } else if (clicks.is_array() && !clicks.empty()) {
    for (const json& item : clicks) {
      if (!item.is_string()) throw ConfigError("data.clicks entries must be paths");
      f.clicks.push_back(Resolve(base, item.get<std::string>()));
    }
  } else {
    throw ConfigError("data.clicks must be a path or a nonempty list of paths");
  }
  std::string catalog;
  s.Read("catalog", catalog);
  if (!catalog.empty()) f.catalog = Resolve(base, catalog);

  std::string format = "delimited";
  s.Read("format", format);
  if (format == "delimited") {
    f.schema.format = RecordFormat::kDelimited;
  } else if (format == "jsonl") {
    f.schema.format = RecordFormat::kJsonLines;
  } else {
    throw ConfigError("data.format must be \"delimited\" or \"jsonl\"");
  }
  std::string separator = ",";
  s.Read("separator", separator);
  if (separator == "\\t") separator = "\t";
  if (separator.size() != 1) throw ConfigError("data.separator must be one character");
  f.schema.separator = separator[0];
  s.Read("timestamp_scale", f.schema.timestamp_scale);
  if (s.Has("columns")) {
    Section columns(s.Child("columns"), "data.columns");
    columns.Read("timestamp", f.schema.timestamp_column);
    columns.Read("session", f.schema.session_column);
    columns.Read("user", f.schema.user_column);
    columns.Read("article", f.schema.article_column);
    columns.Read("device", f.schema.device_column);
    columns.Read("location", f.schema.location_column);
    columns.Finish();
  }
  std::string mode = "provided_id";
  s.Read("session_mode", mode);
  if (mode == "provided_id") {
    f.session_mode = SessionMode::kProvidedId;
  } else if (mode == "gap_split") {
    f.session_mode = SessionMode::kGapSplit;
  } else {
    throw ConfigError("data.session_mode must be \"provided_id\" or \"gap_split\"");
  }
  s.Read("gap_seconds", f.gap_seconds);
  if (f.gap_seconds <= 0) throw ConfigError("data.gap_seconds must be positive");
  s.Read("catalog_timestamp_scale", f.catalog_options.timestamp_scale);
  s.Read("embedding_dim", f.catalog_options.embedding_dim);
  return f;
}

eval::ProtocolConfig ParseProtocol(const json& node) {
  eval::ProtocolConfig c;
  Section s(node, "protocol");
  s.Read("train_hours_per_eval", c.train_hours_per_eval);
  s.Read("negatives", c.negatives);
  s.Read("cutoffs", c.cutoffs);
  s.Read("recommendable_window_hours", c.recommendable_window_hours);
  s.Read("popularity_window_hours", c.popularity_window_hours);
  s.Finish();
  return c;
}

void ReadNar(Section& s, nar::NarConfig& c) {
  s.Read("hidden_dim", c.hidden_dim);
  s.Read("gamma", c.gamma);
  s.Read("use_content", c.use_content);
  s.Read("use_article_context", c.use_article_context);
  s.Read("use_user_context", c.use_user_context);
  s.Read("use_item_id", c.use_item_id);
  s.Read("negatives", c.negatives);
  s.Read("learning_rate", c.learning_rate);
  s.Read("item_dim", c.item_dim);
  s.Read("device_dim", c.device_dim);
  s.Read("location_dim", c.location_dim);
  s.Read("time_dim", c.time_dim);
}

AcrSettings ParseAcr(const json& node, const std::filesystem::path& base) {
  AcrSettings a;
  Section s(node, "acr");
  s.Read("word_dim", a.training.word_dim);
  s.Read("embedding_dim", a.training.embedding_dim);
  s.Read("epochs", a.training.epochs);
  s.Read("learning_rate", a.training.learning_rate);
  s.Read("batch_size", a.training.batch_size);
  s.Read("holdout_fraction", a.training.holdout_fraction);
  s.Read("normalize", a.normalize);
  std::string words;
  s.Read("word_vectors", words);
  if (!words.empty()) a.word_vectors = Resolve(base, words);
  s.Finish();
  if (a.training.word_dim == 0 || a.training.embedding_dim == 0) throw ConfigError("acr dimensions must be positive");
  if (a.training.epochs < 0) throw ConfigError("acr.epochs must be non-negative");
  if (a.training.batch_size == 0) throw ConfigError("acr.batch_size must be positive");
  if (!(a.training.learning_rate > 0.0)) throw ConfigError("acr.learning_rate must be positive");
  if (!(a.training.holdout_fraction > 0.0 && a.training.holdout_fraction < 1.0)) {
    throw ConfigError("acr.holdout_fraction must lie in (0, 1)");
  }
  return a;
}

const std::set<std::string>& KnownAlgorithms() {
  static const std::set<std::string> known = {"CO", "SR", "Item-kNN", "V-SkNN", "RP", "CB", "NAR", "GRU4Rec-lite"};
  return known;
}

RosterEntry ParseEntry(const json& node, std::size_t index) {
  const std::string path = "roster[" + std::to_string(index) + "]";
  if (!node.is_object() || !node.contains("algorithm") || !node.at("algorithm").is_string()) {
    throw ConfigError(path + " needs an \"algorithm\" string");
  }
  RosterEntry entry;
  entry.algorithm = node.at("algorithm").get<std::string>();
  if (!KnownAlgorithms().contains(entry.algorithm)) throw ConfigError(path + ": unknown algorithm " + entry.algorithm);
  entry.name = node.value("name", entry.algorithm);
  entry.options = json::object();
  for (const auto& [key, value] : node.items()) {
    if (key != "algorithm" && key != "name") entry.options[key] = value;
  }
  // Check option names and types now, so a bad roster fails before ingest.
  if (entry.algorithm == "Item-kNN") {
    Section s(entry.options, path);
    double lambda = 0.0;
    s.Read("lambda", lambda);
    s.Finish();
  } else if (entry.algorithm == "V-SkNN") {
    Section s(entry.options, path);
    std::size_t n = 0;
    s.Read("sample_size", n);
    s.Read("neighbors", n);
    s.Finish();
  } else if (entry.algorithm == "CB") {
    Section s(entry.options, path);
    double decay = 0.0;
    s.Read("decay", decay);
    s.Finish();
  } else if (entry.algorithm == "NAR" || entry.algorithm == "GRU4Rec-lite") {
    Section s(entry.options, path);
    nar::NarConfig scratch;
    ReadNar(s, scratch);
    s.Finish();
  } else if (!entry.options.empty()) {
    throw ConfigError(path + ": " + entry.algorithm + " takes no options");
  }
  return entry;
}

}  // namespace

nar::NarConfig ResolveNarConfig(const RunConfig& config, const RosterEntry& entry) {
  nar::NarConfig c = config.nar;
  Section s(entry.options, "roster." + entry.name);
  ReadNar(s, c);
  s.Finish();
  return entry.algorithm == "GRU4Rec-lite" ? nar::Gru4RecLiteConfig(c) : c;
}

std::vector<RosterEntry> DefaultRoster() {
  std::vector<RosterEntry> roster;
  for (const char* algorithm : {"CO", "SR", "Item-kNN", "V-SkNN", "RP", "CB", "GRU4Rec-lite", "NAR"}) {
    roster.push_back({algorithm, algorithm, json::object()});
  }
  return roster;
}

std::uint64_t DeriveSeed(std::uint64_t seed, std::string_view component) {
  Hasher hasher;
  hasher.Add(seed);
  hasher.Add(component);
  return hasher.digest();
}

void RunConfig::Validate() const {
  if (synthetic.has_value() == files.has_value()) {
    throw ConfigError("exactly one data source is required: data.synthetic or data.clicks");
  }
  if (roster.empty()) throw ConfigError("roster is empty");
  std::set<std::string> names;
  for (const RosterEntry& entry : roster) {
    if (!names.insert(entry.name).second) throw ConfigError("duplicate recommender name " + entry.name);
  }
  protocol.Validate();
  if (files) {
    for (const auto& path : files->clicks) {
      if (!std::filesystem::exists(path)) throw ConfigError("click log not found: " + path.string());
    }
    if (files->catalog && !std::filesystem::exists(*files->catalog)) {
      throw ConfigError("article catalog not found: " + files->catalog->string());
    }
  }
  if (acr.word_vectors && !std::filesystem::exists(*acr.word_vectors)) {
    throw ConfigError("word vectors not found: " + acr.word_vectors->string());
  }
}

RunConfig ParseRunConfig(const json& document, const std::filesystem::path& base_dir) {
  RunConfig config;
  Section root(document, "config");
  root.Read("seed", config.seed);
  std::string output;
  root.Read("output", output);
  if (!output.empty()) config.output = Resolve(base_dir, output);

  if (!root.Has("data")) throw ConfigError("config.data is required");
  const json& data_node = root.Child("data");
  config.data_fingerprint = data_node.dump();
  Section data(data_node, "data");
  if (data.Has("synthetic")) config.synthetic = ParseSynthetic(data.Child("synthetic"));
  if (data.Has("clicks")) config.files = ParseFiles(data, base_dir);
  data.Finish();

  if (root.Has("protocol")) config.protocol = ParseProtocol(root.Child("protocol"));
  if (root.Has("nar")) {
    Section s(root.Child("nar"), "nar");
    ReadNar(s, config.nar);
    s.Finish();
  }
  if (root.Has("acr")) config.acr = ParseAcr(root.Child("acr"), base_dir);
  if (root.Has("roster")) {
    const json& roster = root.Child("roster");
    if (!roster.is_array()) throw ConfigError("roster must be a list");
    for (std::size_t i = 0; i < roster.size(); ++i) config.roster.push_back(ParseEntry(roster[i], i));
  } else {
    config.roster = DefaultRoster();
  }
  root.Finish();
  config.protocol.seed = config.seed;
  config.Validate();
  return config;
}

RunConfig LoadRunConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  json document;
  try {
    document = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config " + path.string() + " is not valid JSON: " + e.what());
  }
  return ParseRunConfig(document, path.parent_path());
}

}  // namespace newsrec::cli
