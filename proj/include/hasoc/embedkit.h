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

#ifndef HASOC_EMBEDKIT_H_
#define HASOC_EMBEDKIT_H_

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hasoc::embedkit {

enum class BackendKind { kHash, kRemote };

struct EmbeddingBackendSpec {
  BackendKind kind = BackendKind::kHash;
  std::size_t dim = 128;
  std::uint64_t seed = 0;   // HASH only
  std::string model_id;     // REMOTE only: xlmr | mbert | distilmbert
  std::string endpoint;     // REMOTE only, e.g. http://127.0.0.1:8080
  int timeout_ms = 30000;
  std::size_t max_batch = 32;
  int max_attempts = 3;
  int backoff_ms = 100;     // doubled after every failed attempt
  std::size_t max_in_flight = 4;

  // Throws Error(kInvalidConfig) when the invariants do not hold.
  void validate() const;
};

using TextVector = std::vector<double>;

// Token-wise hashed random vectors, mean-pooled and L2-normalized. Tokens
// are whitespace-separated. Empty text maps to the zero vector. dim >= 8.
TextVector hash_embed(std::string_view text, std::size_t dim,
                      std::uint64_t seed);

class EmbeddingBackend {
 public:
  virtual ~EmbeddingBackend() = default;

  virtual std::size_t dim() const = 0;

  // Stable identity recorded in trained models, e.g. "hash:128:7" or
  // "remote:xlmr:768".
  virtual std::string id() const = 0;

  // One vector per text, in input order.
  virtual std::vector<TextVector> embed_batch(
      const std::vector<std::string> &texts) const = 0;
};

class HashBackend : public EmbeddingBackend {
 public:
  HashBackend(std::size_t dim, std::uint64_t seed);

  std::size_t dim() const override { return dim_; }
  std::string id() const override;
  std::vector<TextVector> embed_batch(
      const std::vector<std::string> &texts) const override;

 private:
  std::size_t dim_;
  std::uint64_t seed_;
};

// Client for the embedding service:
//   POST /v1/embed {"model": id, "texts": [...]}
//     -> {"model": id, "dim": n, "vectors": [[...], ...]}
//   GET /v1/health -> {"status": "ok", "models": [...]}
// Requests are chunked to max_batch and up to max_in_flight chunks run
// concurrently. Connection failures, 429 and 5xx responses are retried with
// exponential backoff; other errors are not.
class RemoteBackend : public EmbeddingBackend {
 public:
  explicit RemoteBackend(EmbeddingBackendSpec spec);

  std::size_t dim() const override { return spec_.dim; }
  std::string id() const override;
  std::vector<TextVector> embed_batch(
      const std::vector<std::string> &texts) const override;

  // Models advertised by GET /v1/health.
  std::vector<std::string> health() const;

 private:
  std::vector<TextVector> embed_chunk(const std::vector<std::string> &texts) const;

  EmbeddingBackendSpec spec_;
};

std::unique_ptr<EmbeddingBackend> make_backend(const EmbeddingBackendSpec &spec);

// Wraps a backend with an on-disk cache in the embedding-table text format.
// Entries are keyed by (backend id, text); new vectors are written back by
// flush() and on destruction.
class CachingBackend : public EmbeddingBackend {
 public:
  CachingBackend(std::unique_ptr<EmbeddingBackend> inner, std::string path);
  ~CachingBackend() override;

  std::size_t dim() const override { return inner_->dim(); }
  std::string id() const override { return inner_->id(); }
  std::vector<TextVector> embed_batch(
      const std::vector<std::string> &texts) const override;

  void flush() const;

  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }

 private:
  std::string key(const std::string &text) const;

  std::unique_ptr<EmbeddingBackend> inner_;
  std::string path_;
  mutable std::mutex mu_;
  mutable std::unordered_map<std::string, TextVector> entries_;
  mutable std::vector<std::string> order_;
  mutable bool dirty_ = false;
  mutable std::size_t hits_ = 0;
  mutable std::size_t misses_ = 0;
};

}  // namespace hasoc::embedkit

#endif  // HASOC_EMBEDKIT_H_
