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

#ifndef HASOC_HASHSEG_H_
#define HASOC_HASHSEG_H_

#include <cstdint>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hasoc::hashseg {

// Unigram frequency table. Tokens are stored ASCII-case-folded.
class Lexicon {
 public:
  static constexpr std::size_t kDefaultMaxWordLen = 20;

  Lexicon() = default;

  // Adds count to token (after case folding). count must be >= 1 and the
  // token non-empty without whitespace.
  void add(std::string_view token, std::uint64_t count);

  // 0 when absent. token is case-folded before lookup.
  std::uint64_t count(std::string_view token) const;

  std::uint64_t total() const { return total_; }
  std::size_t size() const { return counts_.size(); }
  bool empty() const { return counts_.empty(); }

  std::size_t max_word_len() const { return max_word_len_; }
  void set_max_word_len(std::size_t n);

  const std::map<std::string, std::uint64_t, std::less<>> &counts() const {
    return counts_;
  }

 private:
  std::map<std::string, std::uint64_t, std::less<>> counts_;
  std::uint64_t total_ = 0;
  std::size_t max_word_len_ = kDefaultMaxWordLen;
};

// Reads `token<TAB>count` lines; '#'-prefixed and blank lines are skipped.
// Throws MalformedLexicon (with line number) or EmptyLexicon.
Lexicon read_lexicon(std::istream &in);
Lexicon load_lexicon(const std::string &path);

struct Segmentation {
  std::vector<std::string> tokens;  // original casing
  double score = 0.0;               // sum of score_word over tokens

  friend bool operator==(const Segmentation &, const Segmentation &) = default;
};

// log(count/total) for known words; log(1 / (total * 10^len)) otherwise,
// with len counted in codepoints.
double score_word(std::string_view word, const Lexicon &lexicon);

// Codepoint positions p (0 < p < length) where a split is mandatory:
// lower->UPPER case changes and letter<->digit transitions.
std::vector<std::size_t> forced_boundaries(std::string_view raw);

// Splits only at forced boundaries.
std::vector<std::string> split_forced(std::string_view raw);

// Highest-scoring segmentation under the forced boundaries. Ties go to
// fewer tokens, then to the lexicographically smallest token list. Throws
// EmptyLexicon for a lexicon without entries.
Segmentation segment(std::string_view raw, const Lexicon &lexicon);

// Exhaustive reference implementation of segment(); raw may hold at most
// kBruteForceMaxLength codepoints (InputTooLong otherwise).
inline constexpr std::size_t kBruteForceMaxLength = 22;
Segmentation brute_force_segment(std::string_view raw, const Lexicon &lexicon);

}  // namespace hasoc::hashseg

#endif  // HASOC_HASHSEG_H_
