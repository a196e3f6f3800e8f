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

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "hasoc/common.h"
#include "hasoc/embedkit.h"
#include "hasoc/emojikit.h"

namespace hasoc::embedkit {

CachingBackend::CachingBackend(std::unique_ptr<EmbeddingBackend> inner,
                               std::string path)
    : inner_(std::move(inner)), path_(std::move(path)) {
  if (!std::filesystem::exists(path_)) return;
  emojikit::EmbeddingTable table = emojikit::load_embedding_table(path_);
  if (table.dim() != inner_->dim()) {
    throw Error(Errc::kDimensionMismatch,
                "cache " + path_ + " has dim " + std::to_string(table.dim()) +
                    ", backend has " + std::to_string(inner_->dim()));
  }
  for (const std::string &token : table.tokens()) {
    entries_.emplace(token, *table.find(token));
    order_.push_back(token);
  }
}

CachingBackend::~CachingBackend() {
  try {
    flush();
  } catch (const std::exception &e) {
    std::fprintf(stderr, "warning: embedding cache not saved: %s\n", e.what());
  }
}

std::string CachingBackend::key(const std::string &text) const {
  std::string material = inner_->id();
  material.push_back('\0');
  material += text;
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a64(material)));
  return std::string(buf) + "-" + std::to_string(text.size());
}

std::vector<TextVector> CachingBackend::embed_batch(
    const std::vector<std::string> &texts) const {
  std::vector<std::string> keys;
  keys.reserve(texts.size());
  std::vector<std::string> missing;
  std::vector<std::string> missing_keys;
  {
    std::lock_guard<std::mutex> lock(mu_);
    std::unordered_map<std::string, bool> queued;
    for (const std::string &t : texts) {
      keys.push_back(key(t));
      if (entries_.count(keys.back()) > 0) {
        ++hits_;
      } else if (queued.emplace(keys.back(), true).second) {
        missing.push_back(t);
        missing_keys.push_back(keys.back());
        ++misses_;
      }
    }
  }

  if (!missing.empty()) {
    std::vector<TextVector> fresh = inner_->embed_batch(missing);
    std::lock_guard<std::mutex> lock(mu_);
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      if (entries_.emplace(missing_keys[i], std::move(fresh[i])).second) {
        order_.push_back(missing_keys[i]);
        dirty_ = true;
      }
    }
  }

  std::lock_guard<std::mutex> lock(mu_);
  std::vector<TextVector> out;
  out.reserve(texts.size());
  for (const std::string &k : keys) out.push_back(entries_.at(k));
  return out;
}

void CachingBackend::flush() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!dirty_) return;
  emojikit::EmbeddingTable table("cache", inner_->dim());
  for (const std::string &k : order_) table.set(k, entries_.at(k));
  const std::string tmp = path_ + ".tmp";
  emojikit::save_embedding_table(tmp, table);
  std::filesystem::rename(tmp, path_);
  dirty_ = false;
}

}  // namespace hasoc::embedkit
