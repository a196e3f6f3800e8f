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
#include <array>

#include "hasoc/textprep.h"
#include "hasoc/utf8.h"

namespace hasoc::textprep {

namespace {

constexpr std::size_t kMaxMentionLength = 15;

bool is_emoji_base(char32_t cp) {
  return (cp >= 0x1f300 && cp <= 0x1faff) || (cp >= 0x2600 && cp <= 0x27bf) ||
         (cp >= 0x1f1e6 && cp <= 0x1f1ff);
}

bool is_regional_indicator(char32_t cp) {
  return cp >= 0x1f1e6 && cp <= 0x1f1ff;
}

// Codepoints that extend the preceding emoji without starting a new one:
// variation selector-16, skin-tone modifiers, keycap, and tag characters.
bool is_emoji_extender(char32_t cp) {
  return cp == 0xfe0f || (cp >= 0x1f3fb && cp <= 0x1f3ff) || cp == 0x20e3 ||
         (cp >= 0xe0020 && cp <= 0xe007f);
}

bool is_word_char(char32_t cp) {
  return utf8::is_ascii_digit(cp) || utf8::is_ascii_lower(cp) ||
         utf8::is_ascii_upper(cp) || cp == U'_';
}

bool is_ascii_punct(char32_t cp) {
  return (cp >= 0x21 && cp <= 0x2f) || (cp >= 0x3a && cp <= 0x40) ||
         (cp >= 0x5b && cp <= 0x60) || (cp >= 0x7b && cp <= 0x7e);
}

// Scanner state shared by the extraction stages.
class Scanner {
 public:
  explicit Scanner(std::string_view text)
      : text_(text), chars_(utf8::decode(text)), used_(chars_.size(), false) {}

  std::vector<EntitySpan> run() {
    scan_urls();
    scan_mentions();
    scan_hashtags();
    scan_emojis_and_smileys();
    scan_reserved();
    scan_numbers();
    std::sort(spans_.begin(), spans_.end(),
              [](const EntitySpan &a, const EntitySpan &b) {
                return a.begin < b.begin;
              });
    return std::move(spans_);
  }

 private:
  std::size_t size() const { return chars_.size(); }
  char32_t cp(std::size_t i) const { return chars_[i].cp; }
  bool free(std::size_t i) const { return i < size() && !used_[i]; }

  // Standalone-token boundary: text edge, whitespace, a split symbol, or a
  // position already claimed by an earlier entity.
  bool boundary(std::ptrdiff_t i) const {
    if (i < 0 || static_cast<std::size_t>(i) >= size()) return true;
    const auto k = static_cast<std::size_t>(i);
    return used_[k] || utf8::is_whitespace(cp(k)) || is_split_symbol(cp(k));
  }

  bool number_boundary(std::ptrdiff_t i) const {
    if (boundary(i)) return true;
    return is_ascii_punct(cp(static_cast<std::size_t>(i)));
  }

  // True when the ASCII literal matches at i over unclaimed positions.
  bool matches(std::size_t i, std::string_view lit) const {
    if (i + lit.size() > size()) return false;
    for (std::size_t k = 0; k < lit.size(); ++k) {
      if (used_[i + k] || cp(i + k) != static_cast<char32_t>(lit[k])) {
        return false;
      }
    }
    return true;
  }

  void claim(EntityKind kind, std::size_t first, std::size_t last,
             std::size_t value_first, std::size_t value_last) {
    for (std::size_t k = first; k < last; ++k) used_[k] = true;
    const std::size_t vb = chars_[value_first].begin;
    const std::size_t ve = chars_[value_last - 1].end;
    spans_.push_back({kind, chars_[first].begin, chars_[last - 1].end,
                      std::string(text_.substr(vb, ve - vb))});
  }

  void scan_urls() {
    for (std::size_t i = 0; i < size(); ++i) {
      std::size_t body;
      if (matches(i, "https://")) {
        body = i + 8;
      } else if (matches(i, "http://")) {
        body = i + 7;
      } else {
        continue;
      }
      std::size_t j = body;
      while (free(j) && !utf8::is_whitespace(cp(j))) ++j;
      if (j == body) continue;
      claim(EntityKind::kUrl, i, j, i, j);
      i = j - 1;
    }
  }

  bool is_standalone_at_rt(std::size_t i) const {
    return matches(i, "@RT") && boundary(static_cast<std::ptrdiff_t>(i) - 1) &&
           boundary(static_cast<std::ptrdiff_t>(i) + 3);
  }

  void scan_mentions() {
    for (std::size_t i = 0; i < size(); ++i) {
      if (!free(i) || cp(i) != U'@') continue;
      std::size_t j = i + 1;
      while (j - (i + 1) < kMaxMentionLength && free(j) && is_word_char(cp(j))) {
        ++j;
      }
      if (j == i + 1) continue;
      // "@RT" on its own is a reserved word, handled later.
      if (j == i + 3 && is_standalone_at_rt(i)) continue;
      claim(EntityKind::kMention, i, j, i + 1, j);
      i = j - 1;
    }
  }

  void scan_hashtags() {
    for (std::size_t i = 0; i < size(); ++i) {
      if (!free(i) || cp(i) != U'#') continue;
      std::size_t j = i + 1;
      while (free(j) && !utf8::is_whitespace(cp(j)) && cp(j) != U'#') ++j;
      if (j == i + 1) continue;
      // Repeated leading markers ("##tag") belong to the same hashtag.
      std::size_t first = i;
      while (first > 0 && free(first - 1) && cp(first - 1) == U'#') --first;
      claim(EntityKind::kHashtag, first, j, i + 1, j);
      i = j - 1;
    }
  }

  // Returns one past the end of the emoji cluster starting at i, or i when
  // no emoji starts there.
  std::size_t emoji_end(std::size_t i) const {
    if (!free(i)) return i;
    const bool qualified = free(i + 1) && cp(i + 1) == 0xfe0f &&
                           !utf8::is_whitespace(cp(i));
    if (!is_emoji_base(cp(i)) && !qualified) return i;
    std::size_t k = i + 1;
    if (is_regional_indicator(cp(i)) && free(k) &&
        is_regional_indicator(cp(k))) {
      ++k;
    }
    while (free(k)) {
      if (is_emoji_extender(cp(k))) {
        ++k;
      } else if (cp(k) == 0x200d && free(k + 1) &&
                 (is_emoji_base(cp(k + 1)) ||
                  (free(k + 2) && cp(k + 2) == 0xfe0f))) {
        k += 2;
      } else {
        break;
      }
    }
    return k;
  }

  // Emojis go first so that a smiley touching an emoji counts as
  // standalone.
  void scan_emojis_and_smileys() {
    for (std::size_t i = 0; i < size(); ++i) {
      const std::size_t e = emoji_end(i);
      if (e > i) {
        claim(EntityKind::kEmoji, i, e, i, e);
        i = e - 1;
      }
    }
    for (std::size_t i = 0; i < size(); ++i) {
      if (!free(i) || !boundary(static_cast<std::ptrdiff_t>(i) - 1)) continue;
      for (const std::string &s : smiley_inventory()) {
        if (matches(i, s) &&
            boundary(static_cast<std::ptrdiff_t>(i + s.size()))) {
          claim(EntityKind::kSmiley, i, i + s.size(), i, i + s.size());
          i += s.size() - 1;
          break;
        }
      }
    }
  }

  void scan_reserved() {
    static constexpr std::array<std::string_view, 3> kWords = {"@RT", "RT",
                                                               "FAV"};
    for (std::size_t i = 0; i < size(); ++i) {
      if (!free(i) || !boundary(static_cast<std::ptrdiff_t>(i) - 1)) continue;
      for (std::string_view w : kWords) {
        if (matches(i, w) &&
            boundary(static_cast<std::ptrdiff_t>(i + w.size()))) {
          const std::size_t value_first = w.front() == '@' ? i + 1 : i;
          claim(EntityKind::kReserved, i, i + w.size(), value_first,
                i + w.size());
          i += w.size() - 1;
          break;
        }
      }
    }
  }

  void scan_numbers() {
    for (std::size_t i = 0; i < size(); ++i) {
      if (!free(i) || !utf8::is_ascii_digit(cp(i))) continue;
      std::size_t j = i;
      while (free(j) && utf8::is_ascii_digit(cp(j))) ++j;
      if (number_boundary(static_cast<std::ptrdiff_t>(i) - 1) &&
          number_boundary(static_cast<std::ptrdiff_t>(j))) {
        claim(EntityKind::kNumber, i, j, i, j);
      }
      i = j - 1;
    }
  }

  std::string_view text_;
  std::vector<utf8::Char> chars_;
  std::vector<bool> used_;
  std::vector<EntitySpan> spans_;
};

}  // namespace

const std::vector<std::string> &smiley_inventory() {
  // Longer forms first so ":-)" is never read as ":" followed by "-)".
  static const std::vector<std::string> kSmileys = {
      ":-)", ":-(", ":)", ":(", ":D", ":d", ";)", ":P", ":p",
      "xD",  "XD",  "xd", "Xd"};
  return kSmileys;
}

bool PostEntities::empty() const {
  return hashtags.empty() && mentions.empty() && urls.empty() &&
         emojis.empty() && smileys.empty() && reserved.empty() &&
         numbers.empty();
}

bool is_split_symbol(char32_t cp) {
  return cp == U':' || cp == U',' || cp == U';' || cp == U'-' || cp == U'_';
}

std::vector<EntitySpan> extract_entity_spans(std::string_view text) {
  return Scanner(text).run();
}

PostEntities extract_entities(std::string_view text) {
  PostEntities out;
  for (EntitySpan &span : extract_entity_spans(text)) {
    switch (span.kind) {
      case EntityKind::kUrl: out.urls.push_back(std::move(span.value)); break;
      case EntityKind::kMention:
        out.mentions.push_back(std::move(span.value));
        break;
      case EntityKind::kHashtag:
        out.hashtags.push_back(std::move(span.value));
        break;
      case EntityKind::kEmoji:
        out.emojis.push_back(std::move(span.value));
        break;
      case EntityKind::kSmiley:
        out.smileys.push_back(std::move(span.value));
        break;
      case EntityKind::kReserved:
        out.reserved.push_back(std::move(span.value));
        break;
      case EntityKind::kNumber:
        out.numbers.push_back(std::move(span.value));
        break;
    }
  }
  return out;
}

}  // namespace hasoc::textprep
