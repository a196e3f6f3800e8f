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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gtest/gtest.h"
#include "hasoc/common.h"
#include "hasoc/emojikit.h"
#include "testing.h"

namespace hasoc::emojikit {
namespace {

Errc code_of(const std::function<void()> &fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::kInvalidArgument;
}

TEST(EmojiRegistryTest, DescribesKnownEmojis) {
  std::istringstream in("🙏\tfolded hands\n💁\twoman tipping hand\n");
  const EmojiRegistry reg = read_descriptions(in);
  EXPECT_EQ(reg.size(), 2u);
  EXPECT_EQ(reg.describe("🙏"), "folded hands");
  EXPECT_EQ(reg.describe("💁"), "woman tipping hand");
  EXPECT_FALSE(reg.contains("😂"));
  EXPECT_EQ(code_of([&] { reg.describe("😂"); }), Errc::kNotFound);
}

TEST(EmojiRegistryTest, LaterDuplicatesWin) {
  std::istringstream in("🙏\tpraying\n🙏\tfolded hands\n");
  EXPECT_EQ(read_descriptions(in).describe("🙏"), "folded hands");
}

TEST(EmojiRegistryTest, MalformedInput) {
  for (const char *bad : {"🙏 folded hands\n", "abc\tletters\n", "", "🙏😂\ttwo\n"}) {
    std::istringstream in(bad);
    EXPECT_EQ(code_of([&] { read_descriptions(in); }), Errc::kMalformedRegistry) << bad;
  }
}

TEST(EmojiRegistryTest, BundledRegistryLoads) {
  const EmojiRegistry reg = load_descriptions(testing::resource_path("emoji_descriptions.tsv"));
  EXPECT_GT(reg.size(), 1000u);
  EXPECT_EQ(reg.describe("🙏"), "person with folded hands");
  EXPECT_EQ(reg.describe("😂"), "face with tears of joy");
}

TEST(SmileyTest, Descriptions) {
  ASSERT_NE(describe_smiley(":)"), nullptr);
  EXPECT_EQ(*describe_smiley(":)"), "smiling face");
  EXPECT_EQ(*describe_smiley("xD"), "laughing face");
  EXPECT_EQ(describe_smiley(":|"), nullptr);
}

TEST(EmbeddingTableTest, ReadsWord2VecText) {
  std::istringstream in("2 3\n🙏 0.5 -1 2\nhate 1e-3 0 0.25\n");
  const EmbeddingTable t = read_embedding_table(in, "toy");
  EXPECT_EQ(t.name(), "toy");
  EXPECT_EQ(t.dim(), 3u);
  EXPECT_EQ(t.size(), 2u);
  EXPECT_EQ(*t.find("🙏"), (std::vector<double>{0.5, -1, 2}));
  EXPECT_EQ(*t.find("hate"), (std::vector<double>{1e-3, 0, 0.25}));
  EXPECT_EQ(t.find("love"), nullptr);
  EXPECT_EQ(t.tokens(), (std::vector<std::string>{"🙏", "hate"}));
}

TEST(EmbeddingTableTest, Errors) {
  auto read = [](const std::string &text) {
    std::istringstream in(text);
    read_embedding_table(in, "t");
  };
  EXPECT_EQ(code_of([&] { read("2 3\na 1 2\n"); }), Errc::kDimensionMismatch);
  EXPECT_EQ(code_of([&] { read("1 3\na 1 nan 2\n"); }), Errc::kMalformedRow);
  EXPECT_EQ(code_of([&] { read("1 3\na 1 x 2\n"); }), Errc::kMalformedRow);
  EXPECT_EQ(code_of([&] { read("one 3\n"); }), Errc::kMalformedHeader);
  EXPECT_EQ(code_of([&] { read(""); }), Errc::kMalformedHeader);
  EXPECT_EQ(code_of([&] { read("3 2\na 1 2\n"); }), Errc::kMalformedHeader);
  try {
    read("2 2\na 1 2\nb 1\n");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::kDimensionMismatch);
    EXPECT_EQ(e.line(), 3u);
  }
  EmbeddingTable t("t", 2);
  EXPECT_EQ(code_of([&] { t.set("x", {1.0}); }), Errc::kDimensionMismatch);
  EXPECT_EQ(code_of([&] { t.set("x", {1.0, INFINITY}); }), Errc::kMalformedRow);
}

TEST(EmbeddingTableTest, WriteReadRoundTripIsExact) {
  EmbeddingTable t("t", 3);
  SplitMix64 rng(4);
  for (const char *tok : {"a", "😂", "नमस्ते"}) {
    t.set(tok, {rng.uniform() - 0.5, 1.0 / 3.0, -1e-300});
  }
  std::ostringstream out;
  write_embedding_table(out, t);
  std::istringstream in(out.str());
  const EmbeddingTable back = read_embedding_table(in, "t");
  for (const std::string &tok : t.tokens()) EXPECT_EQ(*back.find(tok), *t.find(tok));
}

EmbeddingTable random_table(SplitMix64 &rng, std::size_t n, std::size_t dim) {
  EmbeddingTable t("rand", dim);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> v(dim);
    for (double &x : v) x = (rng.uniform() - 0.5) * std::pow(10.0, static_cast<int>(rng.below(7)) - 3);
    t.set("tok" + std::to_string(i), v);
  }
  return t;
}

TEST(PoolTest, Examples) {
  EmbeddingTable t("e", 2);
  t.set("🙏", {1.0, 4.0});
  t.set("💁", {3.0, -2.0});
  const PooledVector one = pool({"🙏"}, t);
  EXPECT_TRUE(one.present);
  EXPECT_EQ(one.values, (std::vector<double>{1.0, 4.0}));
  EXPECT_EQ(pool({"🙏", "💁"}, t).values, (std::vector<double>{2.0, 1.0}));
  const PooledVector none = pool({}, t);
  EXPECT_FALSE(none.present);
  EXPECT_EQ(none.values, (std::vector<double>{0.0, 0.0}));
  const PooledVector absent = pool({"😂"}, t);
  EXPECT_FALSE(absent.present);
  EXPECT_EQ(absent.values, (std::vector<double>{0.0, 0.0}));
  // Absent items are skipped, not averaged in as zeros.
  EXPECT_EQ(pool({"😂", "🙏"}, t).values, (std::vector<double>{1.0, 4.0}));
}

TEST(PoolPropertyTest, SingleItemIdentity) {
  SplitMix64 rng(1);
  const EmbeddingTable t = random_table(rng, 50, 7);
  for (const std::string &tok : t.tokens()) {
    ASSERT_EQ(pool({tok}, t).values, *t.find(tok));
  }
}

TEST(PoolPropertyTest, DuplicatesAverageToThemselves) {
  SplitMix64 rng(2);
  const EmbeddingTable t = random_table(rng, 50, 7);
  for (const std::string &tok : t.tokens()) {
    ASSERT_EQ(pool({tok, tok}, t).values, *t.find(tok));
    ASSERT_EQ(pool({tok, tok, tok}, t).values, *t.find(tok));
  }
}

TEST(PoolPropertyTest, PermutationInvariantAndConvex) {
  SplitMix64 rng(3);
  const EmbeddingTable t = random_table(rng, 30, 5);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::string> items;
    const std::size_t n = 1 + rng.below(8);
    for (std::size_t i = 0; i < n; ++i) {
      items.push_back(rng.below(5) == 0 ? "missing" : t.tokens()[rng.below(t.size())]);
    }
    const PooledVector base = pool(items, t);
    std::vector<std::string> shuffled = items;
    for (std::size_t i = shuffled.size(); i > 1; --i) {
      std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
    }
    ASSERT_EQ(pool(shuffled, t).values, base.values);
    for (std::size_t d = 0; d < t.dim() && base.present; ++d) {
      double lo = INFINITY;
      double hi = -INFINITY;
      for (const std::string &it : items) {
        if (const auto *v = t.find(it)) {
          lo = std::min(lo, (*v)[d]);
          hi = std::max(hi, (*v)[d]);
        }
      }
      ASSERT_GE(base.values[d], lo);
      ASSERT_LE(base.values[d], hi);
    }
  }
}

}  // namespace
}  // namespace hasoc::emojikit
