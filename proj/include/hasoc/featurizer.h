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

#ifndef HASOC_FEATURIZER_H_
#define HASOC_FEATURIZER_H_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hasoc/common.h"
#include "hasoc/embedkit.h"
#include "hasoc/emojikit.h"
#include "hasoc/hashseg.h"
#include "hasoc/textprep.h"

namespace hasoc::classifier {

// Segment offsets of a fused vector. Layout:
//   [text | hashtag | emoji | emoji description | 3 mask bits]
struct FusedLayout {
  std::size_t text_dim = 0;
  std::size_t aux_dim = 0;

  std::size_t hashtag_offset() const { return text_dim; }
  std::size_t emoji_offset() const { return text_dim + aux_dim; }
  std::size_t desc_offset() const { return text_dim + 2 * aux_dim; }
  std::size_t mask_offset() const { return text_dim + 3 * aux_dim; }
  std::size_t size() const { return text_dim + 3 * aux_dim + 3; }

  friend bool operator==(const FusedLayout &, const FusedLayout &) = default;
};

struct FusedVector {
  std::vector<double> values;
  FusedLayout layout;
};

// Concatenates the segments; each mask bit is the matching present flag and
// absent segments are zeroed. Throws DimensionMismatch when the pooled
// vectors disagree on their dimension.
FusedVector fuse(const std::vector<double> &text_vec,
                 const emojikit::PooledVector &hashtags,
                 const emojikit::PooledVector &emojis,
                 const emojikit::PooledVector &descriptions);

// Switches for the auxiliary segments; a disabled segment stays zero with
// its mask bit cleared.
struct FeatureOptions {
  bool use_hashtags = true;
  bool use_emoji_vectors = true;
  bool use_emoji_descriptions = true;
  // Hindi and Marathi posts keep only Devanagari tokens (after
  // transliteration).
  bool script_filter = true;

  friend bool operator==(const FeatureOptions &, const FeatureOptions &) = default;
};

// Optional lookup resources. Missing tables leave their segments empty.
struct FeatureResources {
  std::optional<hashseg::Lexicon> lexicon;
  std::optional<emojikit::EmojiRegistry> registry;
  std::optional<emojikit::EmbeddingTable> emoji_table;  // emoji2vec-style
  std::optional<emojikit::EmbeddingTable> word_table;   // hashtag/description words
  std::shared_ptr<const textprep::Transliterator> transliterator;

  // Shared dimension of the auxiliary tables, 0 without tables. Throws
  // DimensionMismatch when both tables exist with different dims.
  std::size_t aux_dim() const;
};

// Everything extracted from one post before embedding.
struct PostFeatures {
  textprep::CleanPost clean;
  std::string text;  // what gets sent to the sentence encoder
  std::vector<std::string> hashtag_words;
  std::vector<std::string> description_words;
};

// Runs textprep -> hashseg -> emojikit -> embedkit -> fuse. Holds
// references; backend and resources must outlive it.
class Featurizer {
 public:
  Featurizer(const embedkit::EmbeddingBackend &backend,
             const FeatureResources &resources, FeatureOptions options = {},
             WarningSink warn = default_warning_sink());

  PostFeatures prepare(const textprep::RawPost &post) const;

  std::vector<FusedVector> featurize(const std::vector<textprep::RawPost> &posts) const;

  FusedLayout layout() const;
  const FeatureOptions &options() const { return options_; }
  const embedkit::EmbeddingBackend &backend() const { return backend_; }

 private:
  const embedkit::EmbeddingBackend &backend_;
  const FeatureResources &resources_;
  FeatureOptions options_;
  WarningSink warn_;
  std::size_t aux_dim_;
};

}  // namespace hasoc::classifier

#endif  // HASOC_FEATURIZER_H_
