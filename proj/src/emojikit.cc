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

#include "hasoc/emojikit.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hasoc/common.h"
#include "hasoc/textprep.h"
#include "hasoc/utf8.h"

namespace hasoc::emojikit {

void EmojiRegistry::add(std::string_view emoji, std::string_view description) {
  if (description.empty()) {
    throw Error(Errc::kInvalidArgument, "empty emoji description");
  }
  if (!utf8::is_valid(emoji)) {
    throw Error(Errc::kInvalidArgument, "emoji key is not valid UTF-8");
  }
  const std::vector<textprep::EntitySpan> spans =
      textprep::extract_entity_spans(emoji);
  if (spans.size() != 1 || spans[0].kind != textprep::EntityKind::kEmoji ||
      spans[0].begin != 0 || spans[0].end != emoji.size()) {
    throw Error(Errc::kInvalidArgument,
                "key is not a single emoji: " + std::string(emoji));
  }
  descriptions_.insert_or_assign(std::string(emoji), std::string(description));
}

bool EmojiRegistry::contains(std::string_view emoji) const {
  return descriptions_.find(emoji) != descriptions_.end();
}

const std::string &EmojiRegistry::describe(std::string_view emoji) const {
  auto it = descriptions_.find(emoji);
  if (it == descriptions_.end()) {
    throw Error(Errc::kNotFound, "no description for " + std::string(emoji));
  }
  return it->second;
}

EmojiRegistry read_descriptions(std::istream &in) {
  EmojiRegistry registry;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw Error(Errc::kMalformedRegistry, "expected emoji<TAB>description",
                  lineno);
    }
    try {
      registry.add(std::string_view(line).substr(0, tab),
                   std::string_view(line).substr(tab + 1));
    } catch (const Error &e) {
      throw Error(Errc::kMalformedRegistry, e.what(), lineno);
    }
  }
  if (registry.size() == 0) {
    throw Error(Errc::kMalformedRegistry, "registry has no entries");
  }
  return registry;
}

EmojiRegistry load_descriptions(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kIo, "cannot open emoji registry " + path);
  return read_descriptions(in);
}

const std::string *describe_smiley(std::string_view smiley) {
  static const std::map<std::string, std::string, std::less<>> kSmileys = {
      {":)", "smiling face"},       {":-)", "smiling face"},
      {":(", "frowning face"},      {":-(", "frowning face"},
      {":D", "grinning face"},      {":d", "grinning face"},
      {";)", "winking face"},       {":P", "face with tongue"},
      {":p", "face with tongue"},   {"xD", "laughing face"},
      {"XD", "laughing face"},      {"xd", "laughing face"},
      {"Xd", "laughing face"},
  };
  auto it = kSmileys.find(smiley);
  return it == kSmileys.end() ? nullptr : &it->second;
}

EmbeddingTable::EmbeddingTable(std::string name, std::size_t dim)
    : name_(std::move(name)), dim_(dim) {
  if (dim == 0) throw Error(Errc::kInvalidArgument, "embedding dim must be > 0");
}

void EmbeddingTable::set(std::string_view token, std::vector<double> values) {
  if (values.size() != dim_) {
    throw Error(Errc::kDimensionMismatch,
                "expected " + std::to_string(dim_) + " values, got " +
                    std::to_string(values.size()));
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw Error(Errc::kMalformedRow, "non-finite value");
  }
  auto it = index_.find(std::string(token));
  if (it != index_.end()) {
    vectors_[it->second] = std::move(values);
    return;
  }
  index_.emplace(std::string(token), tokens_.size());
  tokens_.emplace_back(token);
  vectors_.push_back(std::move(values));
}

const std::vector<double> *EmbeddingTable::find(std::string_view token) const {
  auto it = index_.find(std::string(token));
  return it == index_.end() ? nullptr : &vectors_[it->second];
}

namespace {

std::vector<std::string_view> split_spaces(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

bool parse_size(std::string_view s, std::size_t *out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

EmbeddingTable read_embedding_table(std::istream &in, std::string name) {
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(Errc::kMalformedHeader, "missing `<count> <dim>` header", 1);
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const std::vector<std::string_view> header = split_spaces(line);
  std::size_t count = 0;
  std::size_t dim = 0;
  if (header.size() != 2 || !parse_size(header[0], &count) ||
      !parse_size(header[1], &dim) || dim == 0) {
    throw Error(Errc::kMalformedHeader, "expected `<count> <dim>`", 1);
  }

  EmbeddingTable table(std::move(name), dim);
  std::size_t lineno = 1;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string_view> fields = split_spaces(line);
    if (fields.size() != dim + 1) {
      throw Error(Errc::kDimensionMismatch,
                  "expected " + std::to_string(dim) + " values, got " +
                      std::to_string(fields.size() - 1),
                  lineno);
    }
    std::vector<double> values(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      const std::string_view f = fields[k + 1];
      auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), values[k]);
      if (ec != std::errc() || ptr != f.data() + f.size() ||
          !std::isfinite(values[k])) {
        throw Error(Errc::kMalformedRow,
                    "bad value '" + std::string(f) + "'", lineno);
      }
    }
    table.set(fields[0], std::move(values));
    ++rows;
  }
  if (rows != count) {
    throw Error(Errc::kMalformedHeader,
                "header declares " + std::to_string(count) + " rows, found " +
                    std::to_string(rows),
                1);
  }
  return table;
}

EmbeddingTable load_embedding_table(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kIo, "cannot open embedding table " + path);
  std::string name = path;
  const std::size_t slash = name.find_last_of('/');
  if (slash != std::string::npos) name = name.substr(slash + 1);
  return read_embedding_table(in, name);
}

void write_embedding_table(std::ostream &out, const EmbeddingTable &table) {
  out << table.size() << ' ' << table.dim() << '\n';
  char buf[64];
  for (const std::string &token : table.tokens()) {
    out << token;
    for (double v : *table.find(token)) {
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
      out << ' ' << std::string_view(buf, ptr - buf);
    }
    out << '\n';
  }
}

void save_embedding_table(const std::string &path, const EmbeddingTable &table) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::kIo, "cannot write embedding table " + path);
  write_embedding_table(out, table);
  if (!out) throw Error(Errc::kIo, "write failed for " + path);
}

PooledVector pool(const std::vector<std::string> &items,
                  const EmbeddingTable &table) {
  PooledVector out;
  out.values.assign(table.dim(), 0.0);

  std::vector<std::string_view> found;
  for (const std::string &item : items) {
    if (table.find(item) != nullptr) found.push_back(item);
  }
  if (found.empty()) return out;

  // Summing in a canonical order makes the mean exactly order-independent.
  std::sort(found.begin(), found.end());
  std::vector<double> lo = *table.find(found.front());
  std::vector<double> hi = lo;
  for (std::string_view item : found) {
    const std::vector<double> &v = *table.find(item);
    for (std::size_t k = 0; k < v.size(); ++k) {
      out.values[k] += v[k];
      lo[k] = std::min(lo[k], v[k]);
      hi[k] = std::max(hi[k], v[k]);
    }
  }
  const double n = static_cast<double>(found.size());
  for (std::size_t k = 0; k < out.values.size(); ++k) {
    out.values[k] = std::clamp(out.values[k] / n, lo[k], hi[k]);
  }
  out.present = true;
  return out;
}

}  // namespace hasoc::emojikit
