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

#include <array>

#include "hasoc/textprep.h"
#include "hasoc/utf8.h"

namespace hasoc::textprep {

namespace {

// Joiners, selectors and combining marks take the script of the character
// they attach to.
bool inherits_script(char32_t cp) {
  return cp == 0x200c || cp == 0x200d || cp == 0xfe0e || cp == 0xfe0f ||
         cp == 0x20e3 || (cp >= 0x0300 && cp <= 0x036f) ||
         (cp >= 0xe0020 && cp <= 0xe007f) || (cp >= 0x1f3fb && cp <= 0x1f3ff);
}

constexpr std::size_t kScriptCount = 5;

}  // namespace

std::string_view to_string(Script script) {
  switch (script) {
    case Script::kLatin: return "LATIN";
    case Script::kDevanagari: return "DEVANAGARI";
    case Script::kArabic: return "ARABIC";
    case Script::kEmoji: return "EMOJI";
    case Script::kOther: return "OTHER";
  }
  return "?";
}

Script classify_codepoint(char32_t cp) {
  if (cp >= 0x0900 && cp <= 0x097f) return Script::kDevanagari;
  if ((cp >= 0x0600 && cp <= 0x06ff) || (cp >= 0x0750 && cp <= 0x077f)) {
    return Script::kArabic;
  }
  if ((cp >= 0x1f300 && cp <= 0x1faff) || (cp >= 0x2600 && cp <= 0x27bf) ||
      (cp >= 0x1f1e6 && cp <= 0x1f1ff)) {
    return Script::kEmoji;
  }
  // Basic Latin through Latin Extended-B, plus Latin Extended Additional.
  if (cp < 0x0250 || (cp >= 0x1e00 && cp <= 0x1eff)) return Script::kLatin;
  return Script::kOther;
}

std::vector<ScriptSpan> detect_scripts(std::string_view text) {
  std::vector<ScriptSpan> spans;
  bool in_run = false;
  std::size_t index = 0;
  for (const utf8::Char &c : utf8::decode(text)) {
    if (utf8::is_whitespace(c.cp)) {
      in_run = false;
    } else if (in_run && inherits_script(c.cp)) {
      spans.back().end = index + 1;
    } else {
      const Script s = inherits_script(c.cp) ? Script::kOther
                                             : classify_codepoint(c.cp);
      if (in_run && spans.back().script == s) {
        spans.back().end = index + 1;
      } else {
        spans.push_back({index, index + 1, s});
        in_run = true;
      }
    }
    ++index;
  }
  return spans;
}

Script dominant_script(std::string_view token) {
  std::array<std::size_t, kScriptCount> counts{};
  for (const ScriptSpan &span : detect_scripts(token)) {
    counts[static_cast<std::size_t>(span.script)] += span.end - span.start;
  }
  std::size_t best = static_cast<std::size_t>(Script::kOther);
  std::size_t best_count = 0;
  for (std::size_t s = 0; s < kScriptCount; ++s) {
    if (counts[s] > best_count) {
      best = s;
      best_count = counts[s];
    }
  }
  return static_cast<Script>(best);
}

std::vector<std::string> filter_script(const std::vector<std::string> &tokens,
                                       Script script) {
  std::vector<std::string> out;
  for (const std::string &t : tokens) {
    if (dominant_script(t) == script) out.push_back(t);
  }
  return out;
}

std::vector<std::string> transliterate(const std::vector<std::string> &tokens,
                                       Language target,
                                       const Transliterator &transliterator,
                                       const WarningSink &warn) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  try {
    for (const std::string &t : tokens) {
      out.push_back(transliterator.apply(t, target));
    }
  } catch (const std::exception &e) {
    if (warn) {
      warn(std::string(to_string(Errc::kTransliteratorFailure)) + ": " +
           e.what() + "; keeping tokens untransliterated");
    }
    return tokens;
  }
  return out;
}

}  // namespace hasoc::textprep
