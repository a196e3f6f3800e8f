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

// Acceptance runner: one PASS/FAIL line per headline criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hasoc/classifier.h"
#include "hasoc/cli.h"
#include "hasoc/common.h"
#include "hasoc/corpus.h"
#include "hasoc/embedkit.h"
#include "hasoc/emojikit.h"
#include "hasoc/hashseg.h"
#include "hasoc/metrics.h"
#include "mock_embed_server.h"
#include "testing.h"

namespace hasoc {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char *f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

// ---------------------------------------------------------------- segmenter

hashseg::Lexicon lexicon_of(std::initializer_list<std::pair<const char *, int>> words) {
  hashseg::Lexicon lex;
  for (const auto &[w, c] : words) lex.add(w, static_cast<std::uint64_t>(c));
  return lex;
}

// Enumerates every cut set directly, with its own boundary rules and scores.
hashseg::Segmentation exhaustive(const std::string &raw, const hashseg::Lexicon &lex) {
  const std::size_t n = raw.size();
  auto lower = [](char c) { return c >= 'a' && c <= 'z'; };
  auto upper = [](char c) { return c >= 'A' && c <= 'Z'; };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  std::optional<hashseg::Segmentation> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    bool ok = true;
    for (std::size_t p = 1; p < n && ok; ++p) {
      const bool forced = (lower(raw[p - 1]) && upper(raw[p])) ||
                          (digit(raw[p - 1]) != digit(raw[p]));
      if (forced && !(mask >> (p - 1) & 1)) ok = false;
    }
    if (!ok) continue;
    hashseg::Segmentation cand;
    std::size_t start = 0;
    const double total = static_cast<double>(lex.total());
    for (std::size_t p = 1; p <= n; ++p) {
      if (p < n && !(mask >> (p - 1) & 1)) continue;
      const std::string w = raw.substr(start, p - start);
      const std::uint64_t c = lex.count(w);
      cand.score += c > 0 ? std::log(static_cast<double>(c) / total)
                          : -(std::log(total) + static_cast<double>(w.size()) * std::log(10.0));
      cand.tokens.push_back(w);
      start = p;
    }
    if (!best || cand.score > best->score ||
        (cand.score == best->score &&
         (cand.tokens.size() < best->tokens.size() ||
          (cand.tokens.size() == best->tokens.size() && cand.tokens < best->tokens)))) {
      best = cand;
    }
  }
  return *best;
}

Outcome segmenter_oracle() {
  using Tokens = std::vector<std::string>;
  const hashseg::Lexicon ipl = lexicon_of({{"ipl", 10}, {"final", 5}});
  const hashseg::Lexicon hindi =
      lexicon_of({{"hogi", 40}, {"congress", 120}, {"ki", 900}, {"jeet", 60}, {"the", 5000}});
  const bool examples =
      hashseg::segment("IPL2019Final", ipl).tokens == Tokens{"IPL", "2019", "Final"} &&
      hashseg::segment("JitegaModiJitegaBharat", ipl).tokens ==
          Tokens{"Jitega", "Modi", "Jitega", "Bharat"} &&
      hashseg::segment("hogicongresskijeet", hindi).tokens ==
          Tokens{"hogi", "congress", "ki", "jeet"};

  SplitMix64 rng(2021);
  const auto t0 = Clock::now();
  const int cases = 600;
  int mismatches = 0;
  static const char kText[] = "abcaAB1";
  static const char kWord[] = "abc";
  for (int i = 0; i < cases; ++i) {
    std::string text;
    const std::size_t len = 1 + rng.below(14);
    for (std::size_t k = 0; k < len; ++k) text.push_back(kText[rng.below(sizeof(kText) - 1)]);
    hashseg::Lexicon lex;
    for (int w = 0; w < 5; ++w) {
      std::string word;
      const std::size_t wl = 1 + rng.below(4);
      for (std::size_t k = 0; k < wl; ++k) word.push_back(kWord[rng.below(3)]);
      lex.add(word, 1 + rng.below(50));
    }
    const hashseg::Segmentation dp = hashseg::segment(text, lex);
    if (!(dp == hashseg::brute_force_segment(text, lex)) || !(dp == exhaustive(text, lex))) {
      ++mismatches;
    }
  }
  const double secs = seconds_since(t0);
  return {examples && mismatches == 0 && secs < 10.0,
          std::to_string(cases) + " random cases, " + std::to_string(mismatches) +
              " mismatches, " + fmt("%.2f s", secs) + ", three worked examples " +
              (examples ? "verbatim" : "WRONG")};
}

// ------------------------------------------------------------ gradient check

double mean_loss(const classifier::HeadParams &p,
                 const std::vector<const classifier::Example *> &batch,
                 const classifier::DropoutMasks *masks) {
  double s = 0.0;
  for (std::size_t i = 0; i < batch.size(); ++i) {
    s += classifier::loss(classifier::forward(p, batch[i]->input, masks, i), batch[i]->gold);
  }
  return s / static_cast<double>(batch.size());
}

Outcome gradient_check() {
  SplitMix64 rng(4242);
  const double h = 1e-5;
  const int configs = 30;
  double worst = 0.0;
  std::size_t checked = 0;
  for (int cfg = 0; cfg < configs; ++cfg) {
    const std::size_t d = 2 + rng.below(8);
    const std::size_t hid = 2 + rng.below(8);
    const std::size_t k = 2 + rng.below(3);
    classifier::HeadParams p = classifier::init_params(d, hid, k, 100 + cfg);
    for (double &b : p.b1.data) b = 0.2 * (rng.uniform() - 0.5);
    for (double &b : p.b2.data) b = 0.2 * (rng.uniform() - 0.5);
    std::vector<classifier::Example> examples(1 + rng.below(5));
    for (classifier::Example &ex : examples) {
      ex.input.resize(d);
      for (double &x : ex.input) x = 2.0 * rng.uniform() - 1.0;
      ex.gold = rng.below(k);
    }
    std::vector<const classifier::Example *> batch;
    for (const classifier::Example &ex : examples) batch.push_back(&ex);
    const classifier::DropoutMasks masks(derive_key(cfg, 9), cfg % 3 == 0 ? 0.0 : 0.2);
    const classifier::Gradients g = classifier::compute_gradients(p, batch, &masks);
    std::vector<classifier::Tensor *> ts = p.tensors();
    for (std::size_t t = 0; t < ts.size(); ++t) {
      for (std::size_t i = 0; i < ts[t]->data.size(); ++i) {
        double &w = ts[t]->data[i];
        const double orig = w;
        w = orig + h;
        const double up = mean_loss(p, batch, &masks);
        w = orig - h;
        const double down = mean_loss(p, batch, &masks);
        w = orig;
        const double numeric = (up - down) / (2 * h);
        const double analytic = g.grads[t].data[i];
        const double denom = std::max({std::abs(numeric), std::abs(analytic), 1e-6});
        worst = std::max(worst, std::abs(numeric - analytic) / denom);
        ++checked;
      }
    }
  }
  return {worst < 1e-4, std::to_string(configs) + " configurations, " +
                            std::to_string(checked) + " parameters, max relative error " +
                            fmt("%.2e", worst)};
}

// ---------------------------------------------------------------- macro-F1

Outcome metric_fixtures() {
  const std::vector<std::string> labels = {"0", "1"};
  using V = std::vector<std::size_t>;
  const double a = metrics::macro_f1(metrics::confusion(V{1, 1, 0, 0}, V{1, 0, 0, 0}, labels));
  const double b = metrics::macro_f1(metrics::confusion(V{0, 1, 1}, V{0, 1, 1}, labels));
  const double c = metrics::macro_f1(metrics::confusion(V{1, 0}, V{0, 1}, labels));
  return {std::abs(a - 0.733333) < 1e-6 && b == 1.0 && c == 0.0,
          fmt("hand-derived %.6f", a) + fmt(", perfect %.1f", b) + fmt(", inverted %.1f", c)};
}

// ---------------------------------------------------------------- data-exact

struct TableRow {
  const char *lang;
  Language language;
  std::size_t hof, not_;
  std::optional<std::array<std::size_t, 4>> task2;  // HATE, OFFN, PRFN, NONE
  std::size_t total;
};

std::vector<std::string> compare(const std::string &name, const corpus::ClassStats &s,
                                 const TableRow &row) {
  std::vector<std::string> diffs;
  auto check = [&](const char *cell, std::size_t got, std::size_t want) {
    if (got != want) {
      diffs.push_back(name + " " + cell + " " + std::to_string(got) + " != " +
                      std::to_string(want));
    }
  };
  check("HOF", s.count(corpus::Task1Label::kHof), row.hof);
  check("NOT", s.count(corpus::Task1Label::kNot), row.not_);
  check("TOTAL", s.total, row.total);
  if (row.task2) {
    check("HATE", s.count(corpus::Task2Label::kHate), (*row.task2)[0]);
    check("OFFN", s.count(corpus::Task2Label::kOffn), (*row.task2)[1]);
    check("PRFN", s.count(corpus::Task2Label::kPrfn), (*row.task2)[2]);
    check("NONE", s.count(corpus::Task2Label::kNone), (*row.task2)[3]);
  }
  return diffs;
}

Outcome data_exact() {
  const char *dir = std::getenv("HASOC_DATA_DIR");
  const bool real = dir != nullptr && *dir != '\0';
  std::vector<TableRow> train;
  std::vector<TableRow> test;
  std::size_t combined = 0;
  std::function<std::string(const std::string &, const std::string &)> path_of;
  if (real) {
    train = {{"en", Language::EN, 2501, 1342, std::array<std::size_t, 4>{683, 622, 1196, 1342}, 3843},
             {"hi", Language::HI, 1433, 3161, std::array<std::size_t, 4>{566, 654, 213, 3161}, 4594},
             {"mr", Language::MR, 1205, 669, std::nullopt, 1874}};
    test = {{"en", Language::EN, 798, 483, std::array<std::size_t, 4>{224, 195, 379, 483}, 1281},
            {"hi", Language::HI, 505, 1027, std::array<std::size_t, 4>{215, 215, 44, 1027}, 1532},
            {"mr", Language::MR, 483, 418, std::nullopt, 901}};
    combined = 10311;
    path_of = [dir](const std::string &lang, const std::string &part) {
      return std::string(dir) + "/" + lang + "_" + part + ".csv";
    };
  } else {
    // Counts generated into tests/data by make_fixtures.py.
    train = {{"en", Language::EN, 25, 13, std::array<std::size_t, 4>{7, 6, 12, 13}, 38},
             {"hi", Language::HI, 14, 32, std::array<std::size_t, 4>{6, 6, 2, 32}, 46},
             {"mr", Language::MR, 12, 7, std::nullopt, 19}};
    test = {{"en", Language::EN, 8, 5, std::array<std::size_t, 4>{2, 2, 4, 5}, 13},
            {"hi", Language::HI, 5, 10, std::array<std::size_t, 4>{2, 2, 1, 10}, 15},
            {"mr", Language::MR, 5, 4, std::nullopt, 9}};
    combined = 103;
    path_of = [](const std::string &lang, const std::string &part) {
      return testing::data_path("mini_" + part + "_" + lang + ".csv");
    };
  }
  std::vector<std::string> diffs;
  std::vector<corpus::LabeledDataset> train_sets;
  std::size_t cells = 0;
  for (auto *rows : {&train, &test}) {
    const std::string part = rows == &train ? "train" : "test";
    for (const TableRow &row : *rows) {
      corpus::LabeledDataset ds = corpus::load_dataset(path_of(row.lang, part), row.language);
      const auto d = compare(std::string(row.lang) + "/" + part, corpus::class_stats(ds), row);
      diffs.insert(diffs.end(), d.begin(), d.end());
      cells += row.task2 ? 7 : 3;
      if (rows == &train) train_sets.push_back(std::move(ds));
    }
  }
  const std::size_t n = corpus::combine(train_sets).size();
  if (n != combined) {
    diffs.push_back("combine " + std::to_string(n) + " != " + std::to_string(combined));
  }
  std::string detail = std::string(real ? "HASOC 2021 files" : "bundled mini fixtures") + ", " +
                       std::to_string(cells) + " cells, combined train rows " +
                       std::to_string(n);
  for (const std::string &d : diffs) detail += "; " + d;
  return {diffs.empty(), detail};
}

// ---------------------------------------------------------- mono vs multi

classifier::HeadConfig benchmark_config(std::uint64_t seed) {
  classifier::HeadConfig c;
  c.hidden_dim = 32;
  c.dropout = 0.2;
  c.lr = 5e-3;
  c.batch_size = 16;
  c.max_epochs = 60;
  c.patience = 10;
  c.val_fraction = 0.2;
  c.seed = seed;
  return c;
}

Outcome mono_vs_multi() {
  const auto t0 = Clock::now();
  int wins = 0;
  std::string per_seed;
  double sum_mono = 0.0;
  double sum_multi = 0.0;
  const std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
  for (std::uint64_t seed : seeds) {
    const testing::Benchmark b = testing::make_benchmark(seed);
    const embedkit::HashBackend backend(64, seed);
    classifier::FeatureResources res;
    res.emoji_table = b.emoji_table;
    const classifier::Featurizer fz(backend, res, {}, nullptr);
    const classifier::HeadConfig c = benchmark_config(seed);
    const auto mono = classifier::train({b.mr}, classifier::Mode::kMono, c, fz, nullptr);
    const auto multi =
        classifier::train({b.en, b.hi, b.mr}, classifier::Mode::kMulti, c, fz, nullptr);
    const double f_mono = classifier::evaluate(mono, b.mr_test, fz).macro_f1;
    const double f_multi = classifier::evaluate(multi, b.mr_test, fz).macro_f1;
    sum_mono += f_mono;
    sum_multi += f_multi;
    wins += f_multi >= f_mono;
    per_seed += fmt(" %.3f", f_mono) + fmt("/%.3f", f_multi);
  }
  const double secs = seconds_since(t0);
  const double k = static_cast<double>(seeds.size());
  return {wins >= 4 && secs < 120.0,
          "MULTI >= MONO on held-out Marathi in " + std::to_string(wins) + "/5 seeds (mono/multi" +
              per_seed + "; means " + fmt("%.3f", sum_mono / k) + fmt("/%.3f", sum_multi / k) +
              "), " + fmt("%.1f s", secs)};
}

// ------------------------------------------------------------- determinism

int run_cli(const std::vector<std::string> &args, std::string *err_text = nullptr) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  if (err_text) *err_text = err.str();
  return code;
}

Outcome determinism() {
  testing::TempDir dir;
  auto args_for = [&](const std::string &name) {
    return std::vector<std::string>{
        "--quiet", "--seed", "13", "--dim", "32", "--mode", "multi",
        "--lexicon", testing::resource_path("hashtag_lexicon.tsv"),
        "--emoji-descriptions", testing::resource_path("emoji_descriptions.tsv"),
        "train",
        "--train", "en=" + testing::data_path("mini_train_en.csv"),
        "--train", "hi=" + testing::data_path("mini_train_hi.csv"),
        "--train", "mr=" + testing::data_path("mini_train_mr.csv"),
        "--output", dir.file(name + ".json"),
        "--hidden-dim", "16", "--epochs", "8", "--batch-size", "8", "--lr", "0.005"};
  };
  std::string err;
  if (run_cli(args_for("a"), &err) != 0 || run_cli(args_for("b"), &err) != 0) {
    return {false, "train failed: " + err};
  }
  const std::string model_a = testing::read_text(dir.file("a.json"));
  const bool same_model = model_a == testing::read_text(dir.file("b.json"));
  const bool same_hist = testing::read_text(dir.file("a.history.json")) ==
                         testing::read_text(dir.file("b.history.json"));
  return {same_model && same_hist,
          std::string("model files ") + (same_model ? "identical" : "DIFFER") + " (" +
              std::to_string(model_a.size()) + " bytes), history " +
              (same_hist ? "identical" : "DIFFERS")};
}

// ------------------------------------------------------------------ pooling

Outcome pooling_identities() {
  SplitMix64 rng(77);
  emojikit::EmbeddingTable table("rand", 6);
  std::vector<std::string> tokens;
  for (int i = 0; i < 40; ++i) {
    std::vector<double> v(6);
    for (double &x : v) x = (rng.uniform() - 0.5) * std::pow(10.0, static_cast<int>(rng.below(5)) - 2);
    tokens.push_back("t" + std::to_string(i));
    table.set(tokens.back(), v);
  }
  int failures = 0;
  for (const std::string &t : tokens) {
    failures += emojikit::pool({t}, table).values != *table.find(t);
    failures += emojikit::pool({t, t}, table).values != *table.find(t);
  }
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::string> items(1 + rng.below(8));
    for (std::string &s : items) s = tokens[rng.below(tokens.size())];
    std::vector<std::string> shuffled = items;
    for (std::size_t i = shuffled.size(); i > 1; --i) std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
    failures += emojikit::pool(items, table).values != emojikit::pool(shuffled, table).values;
  }
  return {failures == 0, "40 single-item, 40 duplicate and 500 permutation checks, " +
                             std::to_string(failures) + " inexact"};
}

// ------------------------------------------------------------ wire protocol

Outcome wire_protocol() {
  using tools::MockEmbedServer;
  std::vector<std::string> problems;
  auto spec_for = [](const MockEmbedServer &s, std::size_t dim) {
    embedkit::EmbeddingBackendSpec spec;
    spec.kind = embedkit::BackendKind::kRemote;
    spec.endpoint = s.url();
    spec.model_id = "xlmr";
    spec.dim = dim;
    spec.timeout_ms = 5000;
    spec.backoff_ms = 5;
    return spec;
  };
  auto code_of = [](const std::function<void()> &fn) -> std::optional<Errc> {
    try {
      fn();
    } catch (const Error &e) {
      return e.code();
    }
    return std::nullopt;
  };

  {
    MockEmbedServer::Options o;
    o.delay_ms = 40;
    MockEmbedServer server(o);
    server.start();
    auto spec = spec_for(server, 16);
    spec.max_batch = 4;
    spec.max_in_flight = 4;
    std::vector<std::string> texts;
    for (int i = 0; i < 37; ++i) texts.push_back("text " + std::to_string(i));
    const auto out = embedkit::RemoteBackend(spec).embed_batch(texts);
    bool ordered = out.size() == texts.size();
    for (std::size_t i = 0; ordered && i < texts.size(); ++i) {
      ordered = out[i] == embedkit::hash_embed(texts[i], 16, 0);
    }
    if (!ordered) problems.push_back("order lost");
    if (server.max_concurrent() < 2) problems.push_back("no concurrency observed");
  }
  {
    MockEmbedServer::Options o;
    o.dim = 8;
    o.reply_dim = 5;
    MockEmbedServer server(o);
    server.start();
    if (code_of([&] { embedkit::RemoteBackend(spec_for(server, 8)).embed_batch({"a"}); }) !=
        Errc::kDimensionMismatch) {
      problems.push_back("dim mismatch not reported");
    }
  }
  {
    MockEmbedServer::Options o;
    o.fail_first = 1000;
    MockEmbedServer server(o);
    server.start();
    if (code_of([&] { embedkit::RemoteBackend(spec_for(server, 16)).embed_batch({"a"}); }) !=
            Errc::kServiceUnavailable ||
        server.embed_requests() != 3) {
      problems.push_back("retry-then-fail wrong");
    }
  }
  {
    MockEmbedServer::Options o;
    o.fail_first = 2;
    MockEmbedServer server(o);
    server.start();
    if (code_of([&] { embedkit::RemoteBackend(spec_for(server, 16)).embed_batch({"a"}); })) {
      problems.push_back("retry-then-succeed wrong");
    }
  }
  std::string detail = "order under chunking/concurrency, DimMismatch, retry-then-fail, "
                       "retry-then-succeed";
  for (const std::string &p : problems) detail += "; " + p;
  return {problems.empty(), detail};
}

}  // namespace
}  // namespace hasoc

int main() {
  using hasoc::Outcome;
  const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria = {
      {"segmenter-oracle", hasoc::segmenter_oracle},
      {"gradient-check", hasoc::gradient_check},
      {"metric-fixtures", hasoc::metric_fixtures},
      {"data-exact", hasoc::data_exact},
      {"mono-vs-multi", hasoc::mono_vs_multi},
      {"determinism", hasoc::determinism},
      {"pooling-identities", hasoc::pooling_identities},
      {"wire-protocol", hasoc::wire_protocol},
  };
  int failed = 0;
  for (const auto &[name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
