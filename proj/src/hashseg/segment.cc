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

#include <cmath>
#include <optional>

#include "hasoc/common.h"
#include "hasoc/hashseg.h"
#include "hasoc/utf8.h"

namespace hasoc::hashseg {

namespace {

enum class CharClass { kLower, kUpper, kDigit, kLetter, kOther };

CharClass char_class(char32_t cp) {
  if (utf8::is_ascii_lower(cp)) return CharClass::kLower;
  if (utf8::is_ascii_upper(cp)) return CharClass::kUpper;
  if (utf8::is_ascii_digit(cp)) return CharClass::kDigit;
  if (cp >= 0x80 && !utf8::is_whitespace(cp)) return CharClass::kLetter;
  return CharClass::kOther;
}

bool is_letter(CharClass c) {
  return c == CharClass::kLower || c == CharClass::kUpper ||
         c == CharClass::kLetter;
}

struct State {
  double score = 0.0;
  std::vector<std::string> tokens;
};

// Strict "a is preferred over b" under (score desc, count asc, lex asc).
bool better(double score_a, const std::vector<std::string> &a, double score_b,
            const std::vector<std::string> &b) {
  if (score_a != score_b) return score_a > score_b;
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

double score_word(std::string_view word, const Lexicon &lexicon) {
  const std::uint64_t c = lexicon.count(word);
  const double total = static_cast<double>(lexicon.total());
  if (c > 0) return std::log(static_cast<double>(c) / total);
  const double len = static_cast<double>(utf8::length(word));
  return -(std::log(total) + len * std::log(10.0));
}

std::vector<std::size_t> forced_boundaries(std::string_view raw) {
  const std::vector<utf8::Char> chars = utf8::decode(raw);
  std::vector<std::size_t> out;
  for (std::size_t p = 1; p < chars.size(); ++p) {
    const CharClass prev = char_class(chars[p - 1].cp);
    const CharClass cur = char_class(chars[p].cp);
    const bool camel = prev == CharClass::kLower && cur == CharClass::kUpper;
    const bool digit_edge =
        (is_letter(prev) && cur == CharClass::kDigit) ||
        (prev == CharClass::kDigit && is_letter(cur));
    if (camel || digit_edge) out.push_back(p);
  }
  return out;
}

std::vector<std::string> split_forced(std::string_view raw) {
  const std::vector<utf8::Char> chars = utf8::decode(raw);
  std::vector<std::string> out;
  if (chars.empty()) return out;
  std::size_t start = 0;
  auto emit = [&](std::size_t end) {
    const std::size_t b = chars[start].begin;
    out.emplace_back(raw.substr(b, chars[end - 1].end - b));
    start = end;
  };
  for (std::size_t p : forced_boundaries(raw)) emit(p);
  emit(chars.size());
  return out;
}

Segmentation segment(std::string_view raw, const Lexicon &lexicon) {
  const std::vector<utf8::Char> chars = utf8::decode(raw);
  const std::size_t n = chars.size();
  if (n == 0) throw Error(Errc::kInvalidArgument, "cannot segment empty string");
  if (lexicon.empty()) throw Error(Errc::kEmptyLexicon, "segmentation needs a lexicon");

  // block_start[p] = start of the forced block that contains character p.
  std::vector<bool> forced(n + 1, false);
  forced[0] = forced[n] = true;
  for (std::size_t p : forced_boundaries(raw)) forced[p] = true;
  std::vector<std::size_t> block_start(n);
  for (std::size_t p = 0, s = 0; p < n; ++p) {
    if (forced[p]) s = p;
    block_start[p] = s;
  }

  auto substr = [&](std::size_t i, std::size_t j) {
    return std::string(raw.substr(chars[i].begin, chars[j - 1].end - chars[i].begin));
  };

  const std::size_t max_len = lexicon.max_word_len();
  std::vector<std::optional<State>> best(n + 1);
  best[0] = State{};
  for (std::size_t j = 1; j <= n; ++j) {
    const std::size_t lo = block_start[j - 1];
    for (std::size_t i = lo; i < j; ++i) {
      // Over-long words are only allowed as a whole forced block.
      if (j - i > max_len && !(i == lo && forced[j])) continue;
      if (!best[i]) continue;
      std::string word = substr(i, j);
      const double s = best[i]->score + score_word(word, lexicon);
      std::vector<std::string> tokens = best[i]->tokens;
      tokens.push_back(std::move(word));
      if (!best[j] || better(s, tokens, best[j]->score, best[j]->tokens)) {
        best[j] = State{s, std::move(tokens)};
      }
    }
  }
  return {std::move(best[n]->tokens), best[n]->score};
}

Segmentation brute_force_segment(std::string_view raw, const Lexicon &lexicon) {
  const std::vector<utf8::Char> chars = utf8::decode(raw);
  const std::size_t n = chars.size();
  if (n == 0) throw Error(Errc::kInvalidArgument, "cannot segment empty string");
  if (lexicon.empty()) throw Error(Errc::kEmptyLexicon, "segmentation needs a lexicon");
  if (n > kBruteForceMaxLength) {
    throw Error(Errc::kInputTooLong,
                std::to_string(n) + " characters exceeds " +
                    std::to_string(kBruteForceMaxLength));
  }

  const std::vector<std::size_t> forced = forced_boundaries(raw);
  std::vector<bool> is_forced(n + 1, false);
  for (std::size_t p : forced) is_forced[p] = true;
  std::vector<std::size_t> free_cuts;
  for (std::size_t p = 1; p < n; ++p) {
    if (!is_forced[p]) free_cuts.push_back(p);
  }

  std::optional<Segmentation> best;
  const std::uint64_t combos = std::uint64_t{1} << free_cuts.size();
  for (std::uint64_t mask = 0; mask < combos; ++mask) {
    std::vector<bool> cut = is_forced;
    for (std::size_t k = 0; k < free_cuts.size(); ++k) {
      if (mask & (std::uint64_t{1} << k)) cut[free_cuts[k]] = true;
    }
    Segmentation cand;
    bool valid = true;
    std::size_t start = 0;
    for (std::size_t p = 1; p <= n && valid; ++p) {
      if (p < n && !cut[p]) continue;
      const std::size_t len = p - start;
      if (len > lexicon.max_word_len()) {
        // Accept only when the piece spans an entire forced block.
        bool whole_block = (start == 0 || is_forced[start]) &&
                           (p == n || is_forced[p]);
        for (std::size_t q = start + 1; q < p && whole_block; ++q) {
          if (is_forced[q]) whole_block = false;
        }
        if (!whole_block) valid = false;
      }
      const std::size_t b = chars[start].begin;
      std::string word(raw.substr(b, chars[p - 1].end - b));
      cand.score += score_word(word, lexicon);
      cand.tokens.push_back(std::move(word));
      start = p;
    }
    if (!valid) continue;
    if (!best || better(cand.score, cand.tokens, best->score, best->tokens)) {
      best = std::move(cand);
    }
  }
  return std::move(*best);
}

}  // namespace hasoc::hashseg
