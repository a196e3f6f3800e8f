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

#include "hasoc/textprep.h"
#include "hasoc/utf8.h"

namespace hasoc::textprep {

void RawPost::validate() const {
  if (!utf8::is_valid(text)) {
    throw Error(Errc::kInvalidPost, "text is not valid UTF-8");
  }
  bool blank = true;
  for (const utf8::Char &c : utf8::decode(text)) {
    if (!utf8::is_whitespace(c.cp)) {
      blank = false;
      break;
    }
  }
  if (blank) throw Error(Errc::kInvalidPost, "text is empty after trimming");
  if (language == Language::MULTI) {
    throw Error(Errc::kInvalidPost, "a post needs a concrete language");
  }
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (const utf8::Char &c : utf8::decode(text)) {
    if (utf8::is_whitespace(c.cp) || is_split_symbol(c.cp)) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      current.append(text.substr(c.begin, c.end - c.begin));
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

AllContentRemoved::AllContentRemoved(CleanPost post)
    : Error(Errc::kAllContentRemoved, "every character belonged to an entity"),
      post_(std::move(post)) {}

namespace {

// Returns the cleaned post and whether only whitespace was left behind.
std::pair<CleanPost, bool> clean_impl(const RawPost &post) {
  post.validate();
  const std::vector<EntitySpan> spans = extract_entity_spans(post.text);

  std::string residual;
  residual.reserve(post.text.size());
  std::size_t pos = 0;
  for (const EntitySpan &span : spans) {
    residual.append(post.text, pos, span.begin - pos);
    residual.push_back(' ');
    pos = span.end;
  }
  residual.append(post.text, pos, std::string::npos);

  bool only_space = true;
  for (const utf8::Char &c : utf8::decode(residual)) {
    if (!utf8::is_whitespace(c.cp)) {
      only_space = false;
      break;
    }
  }

  CleanPost out;
  out.tokens = tokenize(residual);
  out.entities = extract_entities(post.text);
  out.source = post;
  return {std::move(out), only_space};
}

}  // namespace

CleanPost clean(const RawPost &post) {
  auto [out, removed] = clean_impl(post);
  if (removed) throw AllContentRemoved(std::move(out));
  return std::move(out);
}

CleanPost clean_keep_empty(const RawPost &post) {
  return clean_impl(post).first;
}

}  // namespace hasoc::textprep
