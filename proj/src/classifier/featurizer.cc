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

#include "hasoc/featurizer.h"

#include "hasoc/utf8.h"

namespace hasoc::classifier {

FusedVector fuse(const std::vector<double> &text_vec,
                 const emojikit::PooledVector &hashtags,
                 const emojikit::PooledVector &emojis,
                 const emojikit::PooledVector &descriptions) {
  const std::size_t aux = hashtags.values.size();
  if (emojis.values.size() != aux || descriptions.values.size() != aux) {
    throw Error(Errc::kDimensionMismatch,
                "auxiliary segments have dims " + std::to_string(aux) + ", " +
                    std::to_string(emojis.values.size()) + ", " +
                    std::to_string(descriptions.values.size()));
  }
  FusedVector out;
  out.layout = {text_vec.size(), aux};
  out.values.reserve(out.layout.size());
  out.values.insert(out.values.end(), text_vec.begin(), text_vec.end());
  for (const emojikit::PooledVector *seg : {&hashtags, &emojis, &descriptions}) {
    if (seg->present) {
      out.values.insert(out.values.end(), seg->values.begin(), seg->values.end());
    } else {
      out.values.insert(out.values.end(), aux, 0.0);
    }
  }
  out.values.push_back(hashtags.present ? 1.0 : 0.0);
  out.values.push_back(emojis.present ? 1.0 : 0.0);
  out.values.push_back(descriptions.present ? 1.0 : 0.0);
  return out;
}

std::size_t FeatureResources::aux_dim() const {
  if (emoji_table && word_table && emoji_table->dim() != word_table->dim()) {
    throw Error(Errc::kDimensionMismatch,
                "emoji table dim " + std::to_string(emoji_table->dim()) +
                    " differs from word table dim " +
                    std::to_string(word_table->dim()));
  }
  if (emoji_table) return emoji_table->dim();
  if (word_table) return word_table->dim();
  return 0;
}

Featurizer::Featurizer(const embedkit::EmbeddingBackend &backend,
                       const FeatureResources &resources, FeatureOptions options,
                       WarningSink warn)
    : backend_(backend),
      resources_(resources),
      options_(options),
      warn_(std::move(warn)),
      aux_dim_(resources.aux_dim()) {}

FusedLayout Featurizer::layout() const { return {backend_.dim(), aux_dim_}; }

namespace {

bool blank(std::string_view text) {
  if (!utf8::is_valid(text)) return false;
  for (const utf8::Char &c : utf8::decode(text)) {
    if (!utf8::is_whitespace(c.cp)) return false;
  }
  return true;
}

std::string join(const std::vector<std::string> &tokens) {
  std::string out;
  for (const std::string &t : tokens) {
    if (!out.empty()) out.push_back(' ');
    out += t;
  }
  return out;
}

void append_folded_words(std::vector<std::string> &out, std::string_view text) {
  for (const std::string &w : textprep::tokenize(text)) {
    out.push_back(utf8::ascii_fold(w));
  }
}

}  // namespace

PostFeatures Featurizer::prepare(const textprep::RawPost &post) const {
  PostFeatures f;
  if (blank(post.text)) {
    // Kept with an empty token list so row counts are preserved.
    f.clean.source = post;
    return f;
  }
  f.clean = textprep::clean_keep_empty(post);

  std::vector<std::string> tokens = f.clean.tokens;
  if (options_.script_filter &&
      (post.language == Language::HI || post.language == Language::MR)) {
    static const textprep::IdentityTransliterator kIdentity;
    const textprep::Transliterator &tr =
        resources_.transliterator ? *resources_.transliterator : kIdentity;
    tokens = textprep::transliterate(tokens, post.language, tr, warn_);
    tokens = textprep::filter_script(tokens, textprep::Script::kDevanagari);
  }
  f.text = join(tokens);

  for (const std::string &tag : f.clean.entities.hashtags) {
    const std::vector<std::string> words =
        resources_.lexicon ? hashseg::segment(tag, *resources_.lexicon).tokens
                           : hashseg::split_forced(tag);
    for (const std::string &w : words) f.hashtag_words.push_back(utf8::ascii_fold(w));
  }

  if (resources_.registry) {
    for (const std::string &e : f.clean.entities.emojis) {
      if (resources_.registry->contains(e)) {
        append_folded_words(f.description_words, resources_.registry->describe(e));
      }
    }
  }
  for (const std::string &s : f.clean.entities.smileys) {
    if (const std::string *d = emojikit::describe_smiley(s)) {
      append_folded_words(f.description_words, *d);
    }
  }
  return f;
}

std::vector<FusedVector> Featurizer::featurize(
    const std::vector<textprep::RawPost> &posts) const {
  std::vector<PostFeatures> prepared;
  prepared.reserve(posts.size());
  std::vector<std::string> texts;
  texts.reserve(posts.size());
  for (const textprep::RawPost &p : posts) {
    prepared.push_back(prepare(p));
    texts.push_back(prepared.back().text);
  }
  const std::vector<embedkit::TextVector> text_vecs = backend_.embed_batch(texts);
  if (text_vecs.size() != posts.size()) {
    throw Error(Errc::kProtocolError, "backend returned a short batch");
  }

  const emojikit::PooledVector empty{std::vector<double>(aux_dim_, 0.0), false};
  auto pooled = [&](bool enabled, const std::optional<emojikit::EmbeddingTable> &table,
                    const std::vector<std::string> &items) {
    if (!enabled || !table) return empty;
    return emojikit::pool(items, *table);
  };

  std::vector<FusedVector> out;
  out.reserve(posts.size());
  for (std::size_t i = 0; i < posts.size(); ++i) {
    if (text_vecs[i].size() != backend_.dim()) {
      throw Error(Errc::kDimensionMismatch, "text vector has the wrong dim");
    }
    const PostFeatures &f = prepared[i];
    out.push_back(fuse(
        text_vecs[i],
        pooled(options_.use_hashtags, resources_.word_table, f.hashtag_words),
        pooled(options_.use_emoji_vectors, resources_.emoji_table,
               f.clean.entities.emojis),
        pooled(options_.use_emoji_descriptions, resources_.word_table,
               f.description_words)));
  }
  return out;
}

}  // namespace hasoc::classifier
