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

#include <cmath>

#include "hasoc/common.h"
#include "hasoc/embedkit.h"
#include "hasoc/utf8.h"

namespace hasoc::embedkit {

void EmbeddingBackendSpec::validate() const {
  if (dim == 0) throw Error(Errc::kInvalidConfig, "backend dim must be > 0");
  if (kind == BackendKind::kHash && dim < 8) {
    throw Error(Errc::kInvalidConfig, "hash backend needs dim >= 8");
  }
  if (kind == BackendKind::kRemote) {
    if (endpoint.empty()) {
      throw Error(Errc::kInvalidConfig, "remote backend needs an endpoint");
    }
    if (model_id.empty()) {
      throw Error(Errc::kInvalidConfig, "remote backend needs a model id");
    }
  }
  if (timeout_ms <= 0 || max_batch == 0 || max_attempts <= 0 ||
      max_in_flight == 0 || backoff_ms < 0) {
    throw Error(Errc::kInvalidConfig,
                "timeout, batch size, attempts and in-flight limit must be positive");
  }
}

TextVector hash_embed(std::string_view text, std::size_t dim,
                      std::uint64_t seed) {
  if (dim < 8) throw Error(Errc::kInvalidArgument, "hash_embed needs dim >= 8");
  TextVector sum(dim, 0.0);
  std::size_t count = 0;

  auto add_token = [&](std::string_view token) {
    SplitMix64 rng(derive_key(seed, fnv1a64(token)));
    for (double &v : sum) v += 2.0 * rng.uniform() - 1.0;
    ++count;
  };

  std::size_t start = std::string_view::npos;
  for (const utf8::Char &c : utf8::decode(text)) {
    if (utf8::is_whitespace(c.cp)) {
      if (start != std::string_view::npos) {
        add_token(text.substr(start, c.begin - start));
        start = std::string_view::npos;
      }
    } else if (start == std::string_view::npos) {
      start = c.begin;
    }
  }
  if (start != std::string_view::npos) add_token(text.substr(start));
  if (count == 0) return sum;

  double norm = 0.0;
  for (double &v : sum) {
    v /= static_cast<double>(count);
    norm += v * v;
  }
  norm = std::sqrt(norm);
  if (norm > 0.0) {
    for (double &v : sum) v /= norm;
  }
  return sum;
}

HashBackend::HashBackend(std::size_t dim, std::uint64_t seed)
    : dim_(dim), seed_(seed) {
  if (dim < 8) throw Error(Errc::kInvalidConfig, "hash backend needs dim >= 8");
}

std::string HashBackend::id() const {
  return "hash:" + std::to_string(dim_) + ":" + std::to_string(seed_);
}

std::vector<TextVector> HashBackend::embed_batch(
    const std::vector<std::string> &texts) const {
  std::vector<TextVector> out;
  out.reserve(texts.size());
  for (const std::string &t : texts) out.push_back(hash_embed(t, dim_, seed_));
  return out;
}

std::unique_ptr<EmbeddingBackend> make_backend(const EmbeddingBackendSpec &spec) {
  spec.validate();
  if (spec.kind == BackendKind::kHash) {
    return std::make_unique<HashBackend>(spec.dim, spec.seed);
  }
  return std::make_unique<RemoteBackend>(spec);
}

}  // namespace hasoc::embedkit
