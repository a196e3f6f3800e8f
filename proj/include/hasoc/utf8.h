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

#ifndef HASOC_UTF8_H_
#define HASOC_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace hasoc::utf8 {

// A decoded codepoint together with its byte range in the source string.
struct Char {
  char32_t cp;
  std::size_t begin;
  std::size_t end;
};

bool is_valid(std::string_view s);

// Decodes s. Throws Error(kEncoding) on malformed input.
std::vector<Char> decode(std::string_view s);

void append(std::string &out, char32_t cp);
std::string encode(char32_t cp);

// Number of codepoints; s must be valid.
std::size_t length(std::string_view s);

bool is_whitespace(char32_t cp);

inline bool is_ascii_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }
inline bool is_ascii_lower(char32_t cp) { return cp >= U'a' && cp <= U'z'; }
inline bool is_ascii_upper(char32_t cp) { return cp >= U'A' && cp <= U'Z'; }

// Lowercases ASCII letters and leaves all other bytes alone.
std::string ascii_fold(std::string_view s);

}  // namespace hasoc::utf8

#endif  // HASOC_UTF8_H_
