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

#include "testing.h"

#include <unistd.h>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hasoc/common.h"

namespace hasoc::testing {

std::string data_path(const std::string &name) {
  return std::string(HASOC_TEST_DATA_DIR) + "/" + name;
}

std::string resource_path(const std::string &name) {
  return std::string(HASOC_RESOURCE_DIR) + "/" + name;
}

TempDir::TempDir() {
  static std::uint64_t counter = 0;
  const auto base = std::filesystem::temp_directory_path();
  for (;;) {
    path_ = base / ("hasoc-test-" + std::to_string(::getpid()) + "-" +
                    std::to_string(counter++));
    if (std::filesystem::create_directory(path_)) break;
  }
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

void write_text(const std::string &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

std::string read_text(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

const char *const kConsonants[] = {"क", "ख", "ग", "च", "ज", "ट", "ड", "त", "द", "न",
                                   "प", "ब", "म", "य", "र", "ल", "व", "स", "ह"};
const char *const kVowelSigns[] = {"", "ा", "ि", "ी", "ु", "ू", "े", "ो"};

std::string devanagari_word(SplitMix64 &rng, std::size_t syllables) {
  std::string w;
  for (std::size_t i = 0; i < syllables; ++i) {
    w += kConsonants[rng.below(std::size(kConsonants))];
    w += kVowelSigns[rng.below(std::size(kVowelSigns))];
  }
  return w;
}

std::string latin_word(SplitMix64 &rng, std::size_t len) {
  std::string w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<char>('a' + rng.below(26)));
  return w;
}

// Distinct words from a generator.
template <typename Gen>
std::vector<std::string> vocabulary(std::size_t n, Gen gen,
                                    std::vector<std::string> *taken) {
  std::vector<std::string> out;
  while (out.size() < n) {
    std::string w = gen();
    if (std::find(taken->begin(), taken->end(), w) != taken->end()) continue;
    taken->push_back(w);
    out.push_back(w);
  }
  return out;
}

struct Vocab {
  std::vector<std::string> cues[2];
  std::vector<std::string> filler;
};

corpus::LabeledDataset generate(const Vocab &v, Language lang, std::size_t n,
                                std::uint64_t key, const std::string &prefix) {
  static const char *const kEmojiCues[2][2] = {{"🙏", "🌸"}, {"😡", "🤬"}};
  SplitMix64 rng(key);
  corpus::LabeledDataset ds;
  ds.language = lang;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t label = i % 2;  // alternate NOT / HOF
    std::vector<std::string> words;
    const std::size_t cues = 1 + rng.below(2);
    for (std::size_t k = 0; k < cues; ++k) {
      words.push_back(v.cues[label][rng.below(v.cues[label].size())]);
    }
    const std::size_t fill = 3 + rng.below(4);
    for (std::size_t k = 0; k < fill; ++k) {
      words.push_back(v.filler[rng.below(v.filler.size())]);
    }
    for (std::size_t k = words.size(); k > 1; --k) {
      std::swap(words[k - 1], words[rng.below(k)]);
    }
    std::string text;
    for (const std::string &w : words) {
      if (!text.empty()) text += ' ';
      text += w;
    }
    if (rng.uniform() < 0.3) {
      text += ' ';
      text += kEmojiCues[label][rng.below(2)];
    }
    corpus::Row row;
    row.hasoc_id = prefix + std::to_string(i);
    row.tweet_id = std::to_string(key % 100000) + std::to_string(i);
    row.text = text;
    row.task_1 = label == 1 ? corpus::Task1Label::kHof : corpus::Task1Label::kNot;
    row.task_2 = label == 1 ? corpus::Task2Label::kOffn : corpus::Task2Label::kNone;
    row.language = lang;
    ds.rows.push_back(std::move(row));
  }
  return ds;
}

}  // namespace

Benchmark make_benchmark(std::uint64_t seed, BenchmarkSize size) {
  SplitMix64 rng(derive_key(seed, 0xbe4c));
  std::vector<std::string> taken;
  auto deva = [&] { return devanagari_word(rng, 2 + rng.below(2)); };
  auto latin = [&] { return latin_word(rng, 4 + rng.below(4)); };

  Vocab shared_deva;
  shared_deva.cues[0] = vocabulary(24, deva, &taken);
  shared_deva.cues[1] = vocabulary(24, deva, &taken);
  Vocab hi = shared_deva;
  hi.filler = vocabulary(300, deva, &taken);
  Vocab mr = shared_deva;
  mr.filler = vocabulary(300, deva, &taken);
  Vocab en;
  en.cues[0] = vocabulary(24, latin, &taken);
  en.cues[1] = vocabulary(24, latin, &taken);
  en.filler = vocabulary(300, latin, &taken);

  Benchmark b;
  b.en = generate(en, Language::EN, size.en, derive_key(seed, 1), "en-");
  b.hi = generate(hi, Language::HI, size.hi, derive_key(seed, 2), "hi-");
  b.mr = generate(mr, Language::MR, size.mr, derive_key(seed, 3), "mr-");
  b.mr_test = generate(mr, Language::MR, size.mr_test, derive_key(seed, 4), "mrt-");
  for (const char *e : {"🙏", "🌸", "😡", "🤬"}) {
    std::vector<double> v(8);
    for (double &x : v) x = 2.0 * rng.uniform() - 1.0;
    b.emoji_table.set(e, v);
  }
  return b;
}

corpus::LabeledDataset separable_dataset(std::size_t per_class, std::uint64_t seed) {
  SplitMix64 rng(derive_key(seed, 0x5e9a));
  static const char *const kWords[2][4] = {{"calm", "kind", "sunny", "gentle"},
                                           {"angry", "vile", "cruel", "nasty"}};
  corpus::LabeledDataset ds;
  ds.language = Language::EN;
  for (std::size_t i = 0; i < 2 * per_class; ++i) {
    const std::size_t label = i % 2;
    std::string text;
    for (int k = 0; k < 3; ++k) {
      if (!text.empty()) text += ' ';
      text += kWords[label][rng.below(4)];
    }
    corpus::Row row;
    row.hasoc_id = "sep-" + std::to_string(i);
    row.tweet_id = std::to_string(9000 + i);
    row.text = text;
    row.task_1 = label == 1 ? corpus::Task1Label::kHof : corpus::Task1Label::kNot;
    row.task_2 = label == 1 ? corpus::Task2Label::kHate : corpus::Task2Label::kNone;
    ds.rows.push_back(std::move(row));
  }
  return ds;
}

}  // namespace hasoc::testing
