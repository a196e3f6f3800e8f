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

#include <sstream>

#include "gtest/gtest.h"
#include "hasoc/common.h"
#include "hasoc/featurizer.h"

namespace hasoc::classifier {
namespace {

using emojikit::EmbeddingTable;
using emojikit::PooledVector;

TEST(FuseTest, LayoutAndMasks) {
  const FusedVector f = fuse({0.1, 0.2}, {{1, 2, 3}, true}, {{0, 0, 0}, false}, {{7, 8, 9}, true});
  EXPECT_EQ(f.layout.size(), 2u + 9u + 3u);
  EXPECT_EQ(f.layout.hashtag_offset(), 2u);
  EXPECT_EQ(f.layout.emoji_offset(), 5u);
  EXPECT_EQ(f.layout.desc_offset(), 8u);
  EXPECT_EQ(f.layout.mask_offset(), 11u);
  EXPECT_EQ(f.values, (std::vector<double>{0.1, 0.2, 1, 2, 3, 0, 0, 0, 7, 8, 9, 1, 0, 1}));
}

TEST(FuseTest, AbsentSegmentIsZeroedEvenWithValues) {
  const FusedVector f = fuse({1.0}, {{5, 5}, false}, {{0, 0}, false}, {{0, 0}, false});
  EXPECT_EQ(f.values, (std::vector<double>{1, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
}

TEST(FuseTest, DimMismatch) {
  try {
    fuse({1.0}, {{1, 2}, true}, {{1}, true}, {{1, 2}, true});
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::kDimensionMismatch);
  }
}

FeatureResources toy_resources() {
  FeatureResources r;
  r.emoji_table = EmbeddingTable("emoji", 2);
  r.emoji_table->set("😡", {1.0, -1.0});
  r.emoji_table->set("🙏", {0.0, 2.0});
  r.word_table = EmbeddingTable("words", 2);
  r.word_table->set("india", {1.0, 0.0});
  r.word_table->set("wants", {0.0, 1.0});
  r.word_table->set("folded", {3.0, 3.0});
  r.word_table->set("hands", {1.0, 1.0});
  std::istringstream lex("india\t100\nwants\t50\njustice\t40\n");
  r.lexicon = hashseg::read_lexicon(lex);
  std::istringstream reg("🙏\tfolded hands\n");
  r.registry = emojikit::read_descriptions(reg);
  return r;
}

TEST(FeaturizerTest, FullPipeline) {
  const embedkit::HashBackend backend(8, 1);
  const FeatureResources res = toy_resources();
  const Featurizer fz(backend, res);
  EXPECT_EQ(fz.layout(), (FusedLayout{8, 2}));

  const PostFeatures pf = fz.prepare({"#IndiaWants more 🙏🙏 😡 @someone", Language::EN});
  EXPECT_EQ(pf.hashtag_words, (std::vector<std::string>{"india", "wants"}));
  EXPECT_EQ(pf.description_words,
            (std::vector<std::string>{"folded", "hands", "folded", "hands"}));

  const auto out = fz.featurize({{"#IndiaWants more 🙏🙏 😡 @someone", Language::EN}});
  ASSERT_EQ(out.size(), 1u);
  const std::vector<double> &v = out[0].values;
  ASSERT_EQ(v.size(), 8u + 6u + 3u);
  const std::vector<double> text = embedkit::hash_embed(pf.text, 8, 1);
  EXPECT_EQ(std::vector<double>(v.begin(), v.begin() + 8), text);
  EXPECT_EQ(std::vector<double>(v.begin() + 8, v.end()),
            (std::vector<double>{0.5, 0.5, 1.0 / 3.0, 1.0, 2, 2, 1, 1, 1}));
}

TEST(FeaturizerTest, DisabledSegmentsAndMissingTables) {
  const embedkit::HashBackend backend(8, 1);
  const FeatureResources res = toy_resources();
  FeatureOptions opts;
  opts.use_emoji_vectors = false;
  opts.use_hashtags = false;
  const Featurizer fz(backend, res, opts);
  const auto v = fz.featurize({{"#IndiaWants 🙏", Language::EN}})[0].values;
  EXPECT_EQ(std::vector<double>(v.begin() + 8, v.end()),
            (std::vector<double>{0, 0, 0, 0, 2, 2, 0, 0, 1}));

  FeatureResources bare;
  const Featurizer plain(backend, bare);
  EXPECT_EQ(plain.layout(), (FusedLayout{8, 0}));
  const auto p = plain.featurize({{"#IndiaWants 🙏", Language::EN}})[0].values;
  EXPECT_EQ(p.size(), 11u);
  EXPECT_EQ(std::vector<double>(p.begin() + 8, p.end()), (std::vector<double>{0, 0, 0}));
}

TEST(FeaturizerTest, BlankPostsKeepTheirSlot) {
  const embedkit::HashBackend backend(8, 1);
  const FeatureResources res = toy_resources();
  const Featurizer fz(backend, res);
  const auto out = fz.featurize({{"   ", Language::EN}, {"@only https://t.co/x", Language::EN}});
  ASSERT_EQ(out.size(), 2u);
  for (const FusedVector &f : out) EXPECT_EQ(f.values, std::vector<double>(17, 0.0));
}

TEST(FeaturizerTest, DevanagariFilterForHindi) {
  const embedkit::HashBackend backend(8, 1);
  const FeatureResources bare;
  const Featurizer fz(backend, bare);
  EXPECT_EQ(fz.prepare({"yeh नहीं chalega भाई", Language::HI}).text, "नहीं भाई");
  EXPECT_EQ(fz.prepare({"yeh नहीं chalega भाई", Language::EN}).text, "yeh नहीं chalega भाई");
  FeatureOptions off;
  off.script_filter = false;
  const Featurizer unfiltered(backend, bare, off);
  EXPECT_EQ(unfiltered.prepare({"yeh नहीं", Language::MR}).text, "yeh नहीं");
}

TEST(FeaturizerTest, MismatchedAuxTables) {
  FeatureResources r;
  r.emoji_table = EmbeddingTable("a", 2);
  r.word_table = EmbeddingTable("b", 3);
  const embedkit::HashBackend backend(8, 1);
  try {
    Featurizer fz(backend, r);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), Errc::kDimensionMismatch);
  }
}

}  // namespace
}  // namespace hasoc::classifier
