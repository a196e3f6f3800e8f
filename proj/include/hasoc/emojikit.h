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

#ifndef HASOC_EMOJIKIT_H_
#define HASOC_EMOJIKIT_H_

#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hasoc::emojikit {

// Emoji grapheme -> textual description.
class EmojiRegistry {
 public:
  // emoji must be exactly one emoji cluster under the textprep grammar.
  void add(std::string_view emoji, std::string_view description);

  bool contains(std::string_view emoji) const;

  // Throws Error(kNotFound) for unknown emojis.
  const std::string &describe(std::string_view emoji) const;

  std::size_t size() const { return descriptions_.size(); }

 private:
  std::map<std::string, std::string, std::less<>> descriptions_;
};

// Two-column TSV `emoji<TAB>description`; later duplicates overwrite
// earlier ones. Throws MalformedRegistry.
EmojiRegistry read_descriptions(std::istream &in);
EmojiRegistry load_descriptions(const std::string &path);

// Descriptions for the ASCII smileys recognized by textprep.
const std::string *describe_smiley(std::string_view smiley);

class EmbeddingTable {
 public:
  EmbeddingTable(std::string name, std::size_t dim);

  const std::string &name() const { return name_; }
  std::size_t dim() const { return dim_; }
  std::size_t size() const { return index_.size(); }

  // Inserts or replaces. values.size() must equal dim and be finite.
  void set(std::string_view token, std::vector<double> values);

  // nullptr when absent.
  const std::vector<double> *find(std::string_view token) const;

  // Tokens in insertion order.
  const std::vector<std::string> &tokens() const { return tokens_; }

 private:
  std::string name_;
  std::size_t dim_;
  std::vector<std::string> tokens_;
  std::vector<std::vector<double>> vectors_;
  std::unordered_map<std::string, std::size_t> index_;
};

// word2vec text format: header `<count> <dim>`, then `<token> <f_1> ... <f_dim>`.
// Throws MalformedHeader, DimensionMismatch(line) or MalformedRow(line).
EmbeddingTable read_embedding_table(std::istream &in, std::string name);
EmbeddingTable load_embedding_table(const std::string &path);

// Writes in the same format with round-trip precision.
void write_embedding_table(std::ostream &out, const EmbeddingTable &table);
void save_embedding_table(const std::string &path, const EmbeddingTable &table);

struct PooledVector {
  std::vector<double> values;
  bool present = false;
};

// Mean of the vectors of the items found in table; absent items are
// skipped and the mean is taken over the found ones only. The result does
// not depend on item order.
PooledVector pool(const std::vector<std::string> &items,
                  const EmbeddingTable &table);

}  // namespace hasoc::emojikit

#endif  // HASOC_EMOJIKIT_H_
