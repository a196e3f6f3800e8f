// Copyright 2026 The Hasoc Joint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hasoc/cli.h"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "hasoc/classifier.h"
#include "hasoc/common.h"
#include "hasoc/corpus.h"
#include "hasoc/embedkit.h"
#include "hasoc/emojikit.h"
#include "hasoc/featurizer.h"
#include "hasoc/hashseg.h"
#include "hasoc/metrics.h"
#include "hasoc/textprep.h"
#include "json.hpp"

namespace hasoc::cli {

namespace {

using nlohmann::json;

struct Settings {
  std::string config;
  std::uint64_t seed = 0;
  std::string backend = "hash";
  std::string endpoint = "http://127.0.0.1:8080";
  std::string model_id = "xlmr";
  std::size_t dim = 128;
  int timeout_ms = 30000;
  std::string cache;
  std::string task = "1a";
  std::string mode = "mono";
  std::string lang;
  std::string lexicon;
  std::string emoji_descriptions;
  std::string emoji_table;
  std::string word_table;
  bool quiet = false;

  // train
  std::vector<std::string> train;
  std::size_t hidden_dim = 256;
  double dropout = 0.2;
  double lr = 2e-4;
  std::size_t batch_size = 64;
  std::size_t epochs = 50;
  std::size_t patience = 5;
  double val_fraction = 0.1;
  bool soup = false;
  bool no_hashtags = false;
  bool no_emoji_vectors = false;
  bool no_emoji_descriptions = false;
  bool no_script_filter = false;
  std::string history;

  // shared by several commands
  std::string input;
  std::string output = "-";
  std::vector<std::string> models;
  std::vector<std::string> tests;
  std::string csv;
  std::vector<std::string> hashtags;
};

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string join(const std::vector<std::string> &items, std::string_view sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += items[i];
  }
  return out;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kIo, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes to `out` for "-", otherwise to a file.
class Sink {
 public:
  Sink(const std::string &path, std::ostream &out) {
    if (path.empty() || path == "-") {
      stream_ = &out;
    } else {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error(Errc::kIo, "cannot write " + path);
      stream_ = &file_;
    }
  }
  std::ostream &operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream *stream_;
};

Language require_language(const std::string &s, bool allow_multi = false) {
  auto lang = parse_language(s);
  if (!lang || (!allow_multi && *lang == Language::MULTI)) {
    throw Error(Errc::kInvalidArgument, "unknown language '" + s + "' (en, hi, mr)");
  }
  return *lang;
}

corpus::Task require_task(const std::string &s) {
  auto task = corpus::parse_task(s);
  if (!task) throw Error(Errc::kInvalidArgument, "unknown task '" + s + "' (1a, 1b)");
  return *task;
}

// "lang=path" pairs.
std::pair<Language, std::string> lang_path(const std::string &arg) {
  const auto eq = arg.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == arg.size()) {
    throw Error(Errc::kInvalidArgument, "expected LANG=PATH, got '" + arg + "'");
  }
  return {require_language(arg.substr(0, eq)), arg.substr(eq + 1)};
}

class Context {
 public:
  Context(const Settings &s, std::set<std::string> explicit_keys, std::ostream &out,
          std::ostream &err)
      : s_(s), explicit_(std::move(explicit_keys)), out_(out), err_(err) {
    warn_ = [this](std::string_view msg) {
      if (!s_.quiet) err_ << "warning: " << msg << "\n";
    };
  }

  bool given(const std::string &key) const { return explicit_.count(key) > 0; }

  int preprocess();
  int segment();
  int train();
  int predict();
  int evaluate();
  int stats();

 private:
  embedkit::EmbeddingBackendSpec backend_spec(const std::string &model_backend_id) const;
  std::unique_ptr<embedkit::EmbeddingBackend> make_backend(
      const std::string &model_backend_id = "") const;
  classifier::FeatureResources load_resources(
      const std::map<std::string, std::string> &fallback = {}) const;
  classifier::FeatureOptions feature_options() const;
  std::map<std::string, std::string> resource_metadata() const;

  const Settings &s_;
  std::set<std::string> explicit_;
  std::ostream &out_;
  std::ostream &err_;
  WarningSink warn_;
};

embedkit::EmbeddingBackendSpec Context::backend_spec(
    const std::string &model_backend_id) const {
  embedkit::EmbeddingBackendSpec spec;
  spec.seed = s_.seed;
  spec.dim = s_.dim;
  spec.model_id = s_.model_id;
  spec.endpoint = s_.endpoint;
  spec.timeout_ms = s_.timeout_ms;
  std::string kind = s_.backend;

  // Unless overridden on the command line, reuse the backend a model was
  // trained with ("hash:DIM:SEED" or "remote:MODEL:DIM").
  if (!model_backend_id.empty()) {
    std::vector<std::string> parts;
    std::stringstream ss(model_backend_id);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() == 3) {
      try {
        if (!given("backend")) kind = parts[0];
        if (parts[0] == "hash" && kind == "hash") {
          if (!given("dim")) spec.dim = std::stoul(parts[1]);
          if (!given("seed")) spec.seed = std::stoull(parts[2]);
        } else if (parts[0] == "remote" && kind == "remote") {
          if (!given("model-id")) spec.model_id = parts[1];
          if (!given("dim")) spec.dim = std::stoul(parts[2]);
        }
      } catch (const std::exception &) {
        throw Error(Errc::kMalformedModel, "bad backend id '" + model_backend_id + "'");
      }
    }
  }
  if (kind == "hash") {
    spec.kind = embedkit::BackendKind::kHash;
  } else if (kind == "remote") {
    spec.kind = embedkit::BackendKind::kRemote;
  } else {
    throw Error(Errc::kInvalidArgument, "unknown backend '" + kind + "' (hash, remote)");
  }
  return spec;
}

std::unique_ptr<embedkit::EmbeddingBackend> Context::make_backend(
    const std::string &model_backend_id) const {
  auto backend = embedkit::make_backend(backend_spec(model_backend_id));
  if (!s_.cache.empty()) {
    return std::make_unique<embedkit::CachingBackend>(std::move(backend), s_.cache);
  }
  return backend;
}

classifier::FeatureResources Context::load_resources(
    const std::map<std::string, std::string> &fallback) const {
  auto path_for = [&](const std::string &key, const std::string &value) {
    if (!value.empty()) return value;
    auto it = fallback.find(key);
    return it == fallback.end() ? std::string() : it->second;
  };
  classifier::FeatureResources r;
  if (auto p = path_for("lexicon", s_.lexicon); !p.empty()) {
    r.lexicon = hashseg::load_lexicon(p);
  }
  if (auto p = path_for("emoji-descriptions", s_.emoji_descriptions); !p.empty()) {
    r.registry = emojikit::load_descriptions(p);
  }
  if (auto p = path_for("emoji-table", s_.emoji_table); !p.empty()) {
    r.emoji_table = emojikit::load_embedding_table(p);
  }
  if (auto p = path_for("word-table", s_.word_table); !p.empty()) {
    r.word_table = emojikit::load_embedding_table(p);
  }
  return r;
}

classifier::FeatureOptions Context::feature_options() const {
  classifier::FeatureOptions o;
  o.use_hashtags = !s_.no_hashtags;
  o.use_emoji_vectors = !s_.no_emoji_vectors;
  o.use_emoji_descriptions = !s_.no_emoji_descriptions;
  o.script_filter = !s_.no_script_filter;
  return o;
}

std::map<std::string, std::string> Context::resource_metadata() const {
  std::map<std::string, std::string> m;
  if (!s_.lexicon.empty()) m["lexicon"] = s_.lexicon;
  if (!s_.emoji_descriptions.empty()) m["emoji-descriptions"] = s_.emoji_descriptions;
  if (!s_.emoji_table.empty()) m["emoji-table"] = s_.emoji_table;
  if (!s_.word_table.empty()) m["word-table"] = s_.word_table;
  return m;
}

int Context::preprocess() {
  const Language lang = require_language(s_.lang.empty() ? "en" : s_.lang);
  const corpus::LabeledDataset ds = corpus::load_dataset(s_.input, lang, {}, warn_);
  Sink sink(s_.output, out_);
  corpus::write_csv_row(*sink, {"hasoc_id", "tweet_id", "text", "task_1", "task_2",
                                "tokens", "hashtags", "mentions", "urls", "emojis",
                                "smileys", "reserved", "numbers"});
  for (const corpus::Row &row : ds.rows) {
    textprep::CleanPost c;
    try {
      c = textprep::clean_keep_empty({row.text, row.language});
    } catch (const Error &e) {
      if (e.code() != Errc::kInvalidPost) throw;
      warn_("row " + row.hasoc_id + ": " + e.what());
    }
    const textprep::PostEntities &en = c.entities;
    corpus::write_csv_row(
        *sink,
        {row.hasoc_id, row.tweet_id, row.text, std::string(corpus::to_string(row.task_1)),
         row.task_2 ? std::string(corpus::to_string(*row.task_2)) : std::string(),
         join(c.tokens), join(en.hashtags), join(en.mentions), join(en.urls),
         join(en.emojis), join(en.smileys), join(en.reserved), join(en.numbers)});
  }
  return 0;
}

int Context::segment() {
  if (s_.lexicon.empty()) {
    throw Error(Errc::kInvalidArgument, "segment needs --lexicon");
  }
  const hashseg::Lexicon lex = hashseg::load_lexicon(s_.lexicon);
  std::vector<std::string> tags = s_.hashtags;
  if (!s_.input.empty()) {
    std::istringstream in(read_file(s_.input));
    for (std::string line; std::getline(in, line);) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) tags.push_back(line);
    }
  }
  Sink sink(s_.output, out_);
  for (const std::string &raw : tags) {
    std::string_view tag = raw;
    while (!tag.empty() && tag.front() == '#') tag.remove_prefix(1);
    if (tag.empty()) {
      *sink << raw << "\t\n";
      continue;
    }
    const hashseg::Segmentation seg = hashseg::segment(tag, lex);
    *sink << raw << '\t' << join(seg.tokens) << '\n';
  }
  return 0;
}

int Context::train() {
  const corpus::Task task = require_task(s_.task);
  const auto mode = classifier::parse_mode(s_.mode);
  if (!mode) throw Error(Errc::kInvalidArgument, "unknown mode '" + s_.mode + "'");
  if (s_.train.empty()) throw Error(Errc::kInvalidArgument, "train needs --train LANG=PATH");

  std::vector<corpus::LabeledDataset> datasets;
  for (const std::string &arg : s_.train) {
    auto [lang, path] = lang_path(arg);
    datasets.push_back(corpus::load_dataset(path, lang, {}, warn_));
  }
  if (*mode == classifier::Mode::kMono && datasets.size() != 1) {
    throw Error(Errc::kInvalidArgument, "mono mode takes exactly one --train");
  }

  classifier::HeadConfig config;
  config.hidden_dim = s_.hidden_dim;
  config.dropout = s_.dropout;
  config.lr = s_.lr;
  config.batch_size = s_.batch_size;
  config.max_epochs = s_.epochs;
  config.patience = s_.patience;
  config.seed = s_.seed;
  config.task = task;
  config.val_fraction = s_.val_fraction;
  config.soup = s_.soup;
  config.validate();

  const auto backend = make_backend();
  const classifier::FeatureResources resources = load_resources();
  const classifier::Featurizer featurizer(*backend, resources, feature_options(), warn_);
  classifier::TrainedModel model =
      classifier::train(datasets, *mode, config, featurizer, warn_);
  model.metadata = resource_metadata();
  model.metadata["train"] = join(s_.train, ",");

  if (s_.output.empty() || s_.output == "-") {
    out_ << classifier::serialize_model(model);
  } else {
    classifier::save_model(s_.output, model);
  }

  json hist;
  hist["best_epoch"] = model.best_epoch;
  hist["epochs"] = json::array();
  for (const classifier::EpochRecord &r : model.history) {
    hist["epochs"].push_back({{"epoch", r.epoch},
                              {"train_loss", r.train_loss},
                              {"val_macro_f1", r.val_macro_f1},
                              {"steps", r.steps}});
  }
  std::string history_path = s_.history;
  if (history_path.empty() && !s_.output.empty() && s_.output != "-") {
    std::filesystem::path p(s_.output);
    history_path = (p.parent_path() / (p.stem().string() + ".history.json")).string();
  }
  if (!history_path.empty()) {
    Sink sink(history_path, out_);
    *sink << hist.dump(1) << '\n';
  }
  if (auto *cache = dynamic_cast<embedkit::CachingBackend *>(backend.get())) cache->flush();

  const classifier::EpochRecord &best = model.history.at(model.best_epoch - 1);
  err_ << "trained " << classifier::to_string(model.mode) << " "
       << to_string(model.language) << " model: best epoch " << model.best_epoch
       << ", validation macro-F1 " << format_double(best.val_macro_f1) << "\n";
  return 0;
}

int Context::predict() {
  if (s_.models.size() != 1) throw Error(Errc::kInvalidArgument, "predict takes one --model");
  if (s_.input.empty()) throw Error(Errc::kInvalidArgument, "predict needs --input");
  const classifier::TrainedModel model = classifier::load_model(s_.models.front());
  Language lang = model.language;
  if (!s_.lang.empty()) lang = require_language(s_.lang);
  if (lang == Language::MULTI) {
    throw Error(Errc::kInvalidArgument, "multilingual model: pass --lang for the input");
  }

  const std::string content = read_file(s_.input);
  std::vector<corpus::CsvRecord> records =
      corpus::parse_csv(content, corpus::detect_delimiter(content));
  Sink sink(s_.output, out_);
  std::vector<std::string> header;
  std::vector<std::string> out_header = {"id", "label"};
  for (const std::string &l : model.labels) out_header.push_back("p_" + l);
  if (records.empty()) {
    corpus::write_csv_row(*sink, out_header);
    return 0;
  }
  header = records.front().fields;
  auto column = [&](const std::vector<std::string> &names) -> long {
    for (const std::string &n : names) {
      auto it = std::find(header.begin(), header.end(), n);
      if (it != header.end()) return it - header.begin();
    }
    return -1;
  };
  const corpus::ColumnAliases aliases;
  const long text_col = column(aliases.text);
  if (text_col < 0) throw Error(Errc::kMissingColumn, "input has no text column");
  const long id_col = column(aliases.id);

  std::vector<textprep::RawPost> posts;
  std::vector<std::string> ids;
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto &f = records[i].fields;
    if (static_cast<long>(f.size()) <= text_col) {
      throw Error(Errc::kMalformedRow, "too few fields", records[i].line);
    }
    posts.push_back({f[text_col], lang});
    ids.push_back(id_col >= 0 && static_cast<long>(f.size()) > id_col
                      ? f[id_col]
                      : std::to_string(i));
  }

  const auto backend = make_backend(model.backend_id);
  const classifier::FeatureResources resources = load_resources(model.metadata);
  const classifier::Featurizer featurizer(*backend, resources, model.features, warn_);
  const auto preds = classifier::predict_batch(model, posts, featurizer);
  corpus::write_csv_row(*sink, out_header);
  for (std::size_t i = 0; i < preds.size(); ++i) {
    std::vector<std::string> line = {ids[i], preds[i].label};
    for (double p : preds[i].probabilities) line.push_back(format_double(p));
    corpus::write_csv_row(*sink, line);
  }
  if (auto *cache = dynamic_cast<embedkit::CachingBackend *>(backend.get())) cache->flush();
  return 0;
}

int Context::evaluate() {
  if (s_.models.empty()) throw Error(Errc::kInvalidArgument, "evaluate needs --model");
  if (s_.tests.empty()) throw Error(Errc::kInvalidArgument, "evaluate needs --test LANG=PATH");
  std::vector<corpus::LabeledDataset> tests;
  for (const std::string &arg : s_.tests) {
    auto [lang, path] = lang_path(arg);
    tests.push_back(corpus::load_dataset(path, lang, {}, warn_));
  }
  std::vector<metrics::EvalReport> reports;
  for (const std::string &path : s_.models) {
    const classifier::TrainedModel model = classifier::load_model(path);
    const auto backend = make_backend(model.backend_id);
    const classifier::FeatureResources resources = load_resources(model.metadata);
    const classifier::Featurizer featurizer(*backend, resources, model.features, warn_);
    for (const corpus::LabeledDataset &test : tests) {
      const bool labelled = std::all_of(
          test.rows.begin(), test.rows.end(),
          [&](const corpus::Row &r) { return corpus::label_index(r, model.config.task); });
      if (!labelled) {
        warn_("skipping " + std::string(to_string(test.language)) + " for " + path +
              ": no labels for task " + std::string(corpus::to_string(model.config.task)));
        continue;
      }
      metrics::EvalReport r = classifier::evaluate(model, test, featurizer);
      r.model = std::filesystem::path(path).stem().string();
      reports.push_back(std::move(r));
    }
    if (auto *cache = dynamic_cast<embedkit::CachingBackend *>(backend.get())) {
      cache->flush();
    }
  }
  metrics::write_grid_text(out_, metrics::build_grid(reports));
  if (!s_.csv.empty()) {
    Sink sink(s_.csv, out_);
    metrics::write_report_csv(*sink, reports);
  }
  return 0;
}

int Context::stats() {
  if (s_.input.empty()) throw Error(Errc::kInvalidArgument, "stats needs --input");
  const Language lang = require_language(s_.lang.empty() ? "en" : s_.lang);
  const corpus::LabeledDataset ds = corpus::load_dataset(s_.input, lang, {}, warn_);
  const corpus::ClassStats st = corpus::class_stats(ds);
  out_ << to_string(lang) << ": " << st.total << " rows\n" << st.summary() << "\n";
  if (!st.consistent()) warn_("label counts are inconsistent");
  return 0;
}

// Applies config-file values to options that were not given on the command
// line. Keys are long option names without the dashes.
void apply_config(const json &cfg, CLI::App &app, CLI::App *sub,
                  std::set<std::string> &explicit_keys) {
  if (!cfg.is_object()) throw Error(Errc::kInvalidConfig, "config must be a JSON object");
  for (const auto &[key, value] : cfg.items()) {
    CLI::Option *opt = sub ? sub->get_option_no_throw("--" + key) : nullptr;
    if (!opt) opt = app.get_option_no_throw("--" + key);
    if (!opt || key == "config") {
      throw Error(Errc::kInvalidConfig, "unknown config key '" + key + "'");
    }
    if (opt->count() > 0) continue;
    std::vector<json> items;
    if (value.is_array()) {
      items.assign(value.begin(), value.end());
    } else {
      items.push_back(value);
    }
    for (const json &v : items) {
      if (v.is_string()) {
        opt->add_result(v.get<std::string>());
      } else if (v.is_boolean()) {
        opt->add_result(v.get<bool>() ? "true" : "false");
      } else if (v.is_number()) {
        opt->add_result(v.dump());
      } else {
        throw Error(Errc::kInvalidConfig, "config key '" + key + "' has an unsupported value");
      }
    }
    try {
      opt->run_callback();
    } catch (const CLI::ParseError &e) {
      throw Error(Errc::kInvalidConfig, "config key '" + key + "': " + e.what());
    }
    explicit_keys.insert(key);
  }
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  Settings s;
  CLI::App app{"Hate and offensive content identification toolkit", "hasoc"};
  app.set_version_flag("--version", "hasoc " + std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--config", s.config, "JSON file whose keys override defaults");
  app.add_option("--seed", s.seed, "Seed for every random choice");
  app.add_option("--backend", s.backend, "Sentence encoder: hash or remote");
  app.add_option("--endpoint", s.endpoint, "Embedding service base URL");
  app.add_option("--model-id", s.model_id, "Remote encoder: xlmr, mbert, distilmbert");
  app.add_option("--dim", s.dim, "Sentence vector dimension");
  app.add_option("--timeout-ms", s.timeout_ms, "Remote request timeout");
  app.add_option("--cache", s.cache, "On-disk sentence embedding cache");
  app.add_option("--task", s.task, "1a or 1b");
  app.add_option("--mode", s.mode, "mono or multi");
  app.add_option("--lang", s.lang, "en, hi or mr");
  app.add_option("--lexicon", s.lexicon, "Hashtag segmentation lexicon (word<TAB>count)");
  app.add_option("--emoji-descriptions", s.emoji_descriptions, "Emoji description TSV");
  app.add_option("--emoji-table", s.emoji_table, "Emoji embedding table");
  app.add_option("--word-table", s.word_table, "Word embedding table");
  app.add_flag("--quiet", s.quiet, "Suppress warnings");

  CLI::App *pre = app.add_subcommand("preprocess", "Clean posts and list their entities");
  pre->add_option("--input", s.input, "HASOC CSV/TSV")->required();
  pre->add_option("--output", s.output, "Output CSV (default stdout)");

  CLI::App *seg = app.add_subcommand("segment", "Split hashtags into words");
  seg->add_option("hashtags", s.hashtags, "Hashtags to segment");
  seg->add_option("--input", s.input, "File with one hashtag per line");
  seg->add_option("--output", s.output, "Output file (default stdout)");

  CLI::App *tr = app.add_subcommand("train", "Train a classification head");
  tr->add_option("--train", s.train, "LANG=PATH training file, repeatable")->required();
  tr->add_option("--output", s.output, "Model JSON path")->required();
  tr->add_option("--history", s.history, "Training history JSON path");
  tr->add_option("--hidden-dim", s.hidden_dim, "Hidden layer width");
  tr->add_option("--dropout", s.dropout, "Dropout rate");
  tr->add_option("--lr", s.lr, "Adam learning rate");
  tr->add_option("--batch-size", s.batch_size, "Mini-batch size");
  tr->add_option("--epochs", s.epochs, "Maximum epochs");
  tr->add_option("--patience", s.patience, "Early stopping patience");
  tr->add_option("--val-fraction", s.val_fraction, "Validation share of each dataset");
  tr->add_flag("--soup", s.soup, "Similarity-based resampling of the training set");
  tr->add_flag("--no-hashtags", s.no_hashtags, "Drop the hashtag segment");
  tr->add_flag("--no-emoji-vectors", s.no_emoji_vectors, "Drop the emoji segment");
  tr->add_flag("--no-emoji-descriptions", s.no_emoji_descriptions,
               "Drop the emoji description segment");
  tr->add_flag("--no-script-filter", s.no_script_filter,
               "Keep non-Devanagari tokens in Hindi and Marathi posts");

  CLI::App *pr = app.add_subcommand("predict", "Label posts with a trained model");
  pr->add_option("--model", s.models, "Model JSON")->required();
  pr->add_option("--input", s.input, "CSV/TSV with a text column")->required();
  pr->add_option("--output", s.output, "Output CSV (default stdout)");

  CLI::App *ev = app.add_subcommand("evaluate", "Score models on labelled test sets");
  ev->add_option("--model", s.models, "Model JSON, repeatable")->required();
  ev->add_option("--test", s.tests, "LANG=PATH test file, repeatable")->required();
  ev->add_option("--csv", s.csv, "Per-class report CSV");

  CLI::App *st = app.add_subcommand("stats", "Class distribution of a dataset");
  st->add_option("--input", s.input, "HASOC CSV/TSV")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    std::set<std::string> explicit_keys;
    for (const CLI::App *a : {&app, pre, seg, tr, pr, ev, st}) {
      for (const CLI::Option *o : a->get_options()) {
        if (o->count() > 0 && !o->get_lnames().empty()) {
          explicit_keys.insert(o->get_lnames().front());
        }
      }
    }
    CLI::App *chosen = app.get_subcommands().front();
    if (!s.config.empty()) {
      json cfg;
      try {
        cfg = json::parse(read_file(s.config));
      } catch (const json::exception &e) {
        throw Error(Errc::kInvalidConfig, s.config + ": " + e.what());
      }
      apply_config(cfg, app, chosen, explicit_keys);
    }

    Context ctx(s, explicit_keys, out, err);
    if (chosen == pre) return ctx.preprocess();
    if (chosen == seg) return ctx.segment();
    if (chosen == tr) return ctx.train();
    if (chosen == pr) return ctx.predict();
    if (chosen == ev) return ctx.evaluate();
    return ctx.stats();
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return e.is_input_error() ? 2 : 1;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace hasoc::cli
