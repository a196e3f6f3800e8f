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

#include <map>
#include <set>

#include "gtest/gtest.h"
#include "hasoc/common.h"
#include "hasoc/utf8.h"

namespace hasoc {
namespace {

TEST(SplitMix64Test, MatchesReferenceStream) {
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(rng.next(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(rng.next(), 0x06c45d188009454fULL);
}

TEST(SplitMix64Test, UniformStaysInUnitInterval) {
  SplitMix64 rng(42);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(SplitMix64Test, BelowCoversRangeEvenly) {
  SplitMix64 rng(7);
  std::map<std::uint64_t, int> hist;
  for (int i = 0; i < 60000; ++i) ++hist[rng.below(6)];
  ASSERT_EQ(hist.size(), 6u);
  for (const auto &[value, n] : hist) {
    EXPECT_LT(value, 6u);
    EXPECT_NEAR(n, 10000, 500);
  }
  EXPECT_EQ(SplitMix64(1).below(1), 0u);
}

TEST(DeriveKeyTest, OrderAndArgumentsMatter) {
  EXPECT_EQ(derive_key(1, 2, 3), derive_key(1, 2, 3));
  EXPECT_NE(derive_key(1, 2, 3), derive_key(1, 3, 2));
  EXPECT_NE(derive_key(1, 2), derive_key(2, 2));
  std::set<std::uint64_t> keys;
  for (std::uint64_t e = 0; e < 50; ++e) {
    for (std::uint64_t b = 0; b < 50; ++b) keys.insert(derive_key(9, e, b));
  }
  EXPECT_EQ(keys.size(), 2500u);
}

TEST(Fnv1aTest, KnownValues) {
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(fnv1a64("foobar"), 0x85944171f73967e8ULL);
}

TEST(LanguageTest, ParsesAndPrints) {
  for (Language l : {Language::EN, Language::HI, Language::MR, Language::MULTI}) {
    EXPECT_EQ(parse_language(to_string(l)), l);
  }
  EXPECT_EQ(parse_language("HI"), Language::HI);
  EXPECT_FALSE(parse_language("de").has_value());
}

TEST(ErrorTest, CarriesCodeAndLine) {
  const Error e(Errc::kMalformedRow, "bad", 12);
  EXPECT_EQ(e.code(), Errc::kMalformedRow);
  EXPECT_EQ(e.line(), 12u);
  EXPECT_NE(std::string(e.what()).find("12"), std::string::npos);
  EXPECT_TRUE(e.is_input_error());
  EXPECT_FALSE(Error(Errc::kServiceUnavailable, "down").is_input_error());
  EXPECT_FALSE(Error(Errc::kNonFiniteGradient, "nan").is_input_error());
}

TEST(Utf8Test, DecodeEncodeRoundTrip) {
  const std::string s = "aéन\U0001F64F";
  const auto chars = utf8::decode(s);
  ASSERT_EQ(chars.size(), 4u);
  EXPECT_EQ(chars[0].cp, U'a');
  EXPECT_EQ(chars[1].cp, U'é');
  EXPECT_EQ(chars[2].cp, U'न');
  EXPECT_EQ(chars[3].cp, U'\U0001F64F');
  EXPECT_EQ(chars[3].begin, 6u);
  EXPECT_EQ(chars[3].end, 10u);
  std::string back;
  for (const auto &c : chars) utf8::append(back, c.cp);
  EXPECT_EQ(back, s);
  EXPECT_EQ(utf8::length(s), 4u);
}

TEST(Utf8Test, RejectsMalformedInput) {
  for (const std::string bad : {std::string("\xff"), std::string("\xc3"),
                                std::string("\xe0\x80\x80"), std::string("\xed\xa0\x80")}) {
    EXPECT_FALSE(utf8::is_valid(bad));
    try {
      utf8::decode(bad);
      ADD_FAILURE() << "expected an encoding error";
    } catch (const Error &e) {
      EXPECT_EQ(e.code(), Errc::kEncoding);
    }
  }
}

TEST(Utf8Test, WhitespaceAndFolding) {
  EXPECT_TRUE(utf8::is_whitespace(U' '));
  EXPECT_TRUE(utf8::is_whitespace(U'\n'));
  EXPECT_TRUE(utf8::is_whitespace(U' '));
  EXPECT_TRUE(utf8::is_whitespace(U'　'));
  EXPECT_FALSE(utf8::is_whitespace(U'x'));
  EXPECT_EQ(utf8::ascii_fold("IPL2019 Final न"), "ipl2019 final न");
}

}  // namespace
}  // namespace hasoc
