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

#ifndef HASOC_TEXTPREP_H_
#define HASOC_TEXTPREP_H_

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hasoc/common.h"

namespace hasoc::textprep {

struct RawPost {
  std::string text;
  Language language = Language::EN;

  // Throws Error(kInvalidPost) when text is blank, not UTF-8, or the
  // language is MULTI.
  void validate() const;
};

struct PostEntities {
  std::vector<std::string> hashtags;  // leading '#' stripped
  std::vector<std::string> mentions;  // leading '@' stripped
  std::vector<std::string> urls;
  std::vector<std::string> emojis;
  std::vector<std::string> smileys;
  std::vector<std::string> reserved;  // "RT", "FAV"; '@' of "@RT" stripped
  std::vector<std::string> numbers;

  bool empty() const;
  friend bool operator==(const PostEntities &, const PostEntities &) = default;
};

enum class EntityKind { kUrl, kMention, kHashtag, kEmoji, kSmiley, kReserved,
                        kNumber };

// One matched entity. [begin, end) is the byte span removed from the text,
// including markers such as '#' or '@'; value is the stored entity string.
struct EntitySpan {
  EntityKind kind;
  std::size_t begin;
  std::size_t end;
  std::string value;
};

struct CleanPost {
  std::vector<std::string> tokens;
  PostEntities entities;
  RawPost source;
};

enum class Script { kLatin, kDevanagari, kArabic, kEmoji, kOther };

std::string_view to_string(Script script);

// [start, end) in codepoint offsets.
struct ScriptSpan {
  std::size_t start;
  std::size_t end;
  Script script;

  friend bool operator==(const ScriptSpan &, const ScriptSpan &) = default;
};

// The fixed ASCII emoticon inventory.
const std::vector<std::string> &smiley_inventory();

// All entity matches sorted by begin offset. Extraction runs in stages
// (URLs, mentions, hashtags, emojis and smileys, reserved words, numbers);
// a later stage never matches inside an earlier stage's span.
std::vector<EntitySpan> extract_entity_spans(std::string_view text);

PostEntities extract_entities(std::string_view text);

// True for the symbols tokenize() splits on besides whitespace.
bool is_split_symbol(char32_t cp);

// Splits on Unicode whitespace and on ':' ',' ';' '-' '_'.
std::vector<std::string> tokenize(std::string_view text);

// Thrown by clean() when every non-whitespace character belonged to an
// entity. post() holds the result with an empty token list so callers may
// keep the row.
class AllContentRemoved : public Error {
 public:
  explicit AllContentRemoved(CleanPost post);
  const CleanPost &post() const { return post_; }

 private:
  CleanPost post_;
};

CleanPost clean(const RawPost &post);

// Same as clean() but returns the empty-token result instead of throwing
// AllContentRemoved.
CleanPost clean_keep_empty(const RawPost &post);

Script classify_codepoint(char32_t cp);

std::vector<ScriptSpan> detect_scripts(std::string_view text);

// Script with the most characters in token; ties resolve to the script
// listed first in the Script enum.
Script dominant_script(std::string_view token);

std::vector<std::string> filter_script(const std::vector<std::string> &tokens,
                                       Script script);

// Token-in/token-out transliteration plug-in. Implementations signal
// failure by throwing; transliterate() converts that into a warning.
class Transliterator {
 public:
  virtual ~Transliterator() = default;
  virtual std::string apply(std::string_view token, Language target) const = 0;
};

class IdentityTransliterator : public Transliterator {
 public:
  std::string apply(std::string_view token, Language) const override {
    return std::string(token);
  }
};

// On failure the original tokens are returned and a TransliteratorFailure
// warning is sent to warn.
std::vector<std::string> transliterate(const std::vector<std::string> &tokens,
                                       Language target,
                                       const Transliterator &transliterator,
                                       const WarningSink &warn =
                                           default_warning_sink());

}  // namespace hasoc::textprep

#endif  // HASOC_TEXTPREP_H_
