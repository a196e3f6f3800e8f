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

#include <charconv>
#include <fstream>

#include "hasoc/common.h"
#include "hasoc/hashseg.h"
#include "hasoc/utf8.h"

namespace hasoc::hashseg {

void Lexicon::add(std::string_view token, std::uint64_t count) {
  if (token.empty()) throw Error(Errc::kInvalidArgument, "empty lexicon token");
  if (count == 0) throw Error(Errc::kInvalidArgument, "lexicon count must be >= 1");
  for (const utf8::Char &c : utf8::decode(token)) {
    if (utf8::is_whitespace(c.cp)) {
      throw Error(Errc::kInvalidArgument, "lexicon token contains whitespace");
    }
  }
  counts_[utf8::ascii_fold(token)] += count;
  total_ += count;
}

std::uint64_t Lexicon::count(std::string_view token) const {
  auto it = counts_.find(utf8::ascii_fold(token));
  return it == counts_.end() ? 0 : it->second;
}

void Lexicon::set_max_word_len(std::size_t n) {
  if (n == 0) throw Error(Errc::kInvalidArgument, "max_word_len must be positive");
  max_word_len_ = n;
}

Lexicon read_lexicon(std::istream &in) {
  Lexicon lexicon;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw Error(Errc::kMalformedLexicon, "expected token<TAB>count", lineno);
    }
    const std::string_view token(line.data(), tab);
    const std::string_view count_text(line.data() + tab + 1,
                                      line.size() - tab - 1);
    std::uint64_t count = 0;
    auto [ptr, ec] = std::from_chars(
        count_text.data(), count_text.data() + count_text.size(), count);
    if (ec != std::errc() || ptr != count_text.data() + count_text.size() ||
        count == 0) {
      throw Error(Errc::kMalformedLexicon,
                  "count must be a positive integer", lineno);
    }
    if (!utf8::is_valid(token)) {
      throw Error(Errc::kMalformedLexicon, "token is not valid UTF-8", lineno);
    }
    try {
      lexicon.add(token, count);
    } catch (const Error &e) {
      throw Error(Errc::kMalformedLexicon, e.what(), lineno);
    }
  }
  if (lexicon.empty()) throw Error(Errc::kEmptyLexicon, "no entries");
  return lexicon;
}

Lexicon load_lexicon(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kIo, "cannot open lexicon " + path);
  return read_lexicon(in);
}

}  // namespace hasoc::hashseg
