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
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <thread>

#include "hasoc/common.h"
#include "hasoc/embedkit.h"
#include "httplib.h"
#include "json.hpp"

namespace hasoc::embedkit {

using nlohmann::json;

namespace {

std::unique_ptr<httplib::Client> make_client(const EmbeddingBackendSpec &spec) {
  auto client = std::make_unique<httplib::Client>(spec.endpoint);
  if (!client->is_valid()) {
    throw Error(Errc::kInvalidConfig, "bad endpoint " + spec.endpoint);
  }
  const auto timeout = std::chrono::milliseconds(spec.timeout_ms);
  client->set_connection_timeout(timeout);
  client->set_read_timeout(timeout);
  client->set_write_timeout(timeout);
  return client;
}

std::string error_message(const httplib::Response &res) {
  try {
    json body = json::parse(res.body);
    if (body.is_object() && body.contains("error") && body["error"].is_string()) {
      return body["error"].get<std::string>();
    }
  } catch (const json::exception &) {
  }
  return res.body;
}

bool retryable(int status) { return status == 429 || status >= 500; }

}  // namespace

RemoteBackend::RemoteBackend(EmbeddingBackendSpec spec) : spec_(std::move(spec)) {
  spec_.kind = BackendKind::kRemote;
  spec_.validate();
}

std::string RemoteBackend::id() const {
  return "remote:" + spec_.model_id + ":" + std::to_string(spec_.dim);
}

std::vector<TextVector> RemoteBackend::embed_chunk(
    const std::vector<std::string> &texts) const {
  const std::string body =
      json{{"model", spec_.model_id}, {"texts", texts}}.dump();
  auto client = make_client(spec_);

  std::string last_failure;
  for (int attempt = 0; attempt < spec_.max_attempts; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(
          std::chrono::milliseconds(spec_.backoff_ms * (1 << (attempt - 1))));
    }
    auto res = client->Post("/v1/embed", body, "application/json");
    if (!res) {
      last_failure = "request failed: " + httplib::to_string(res.error());
      continue;
    }
    if (retryable(res->status)) {
      last_failure = "HTTP " + std::to_string(res->status) + ": " +
                     error_message(*res);
      continue;
    }
    if (res->status != 200) {
      throw Error(Errc::kProtocolError, "HTTP " + std::to_string(res->status) +
                                            ": " + error_message(*res));
    }

    json reply;
    try {
      reply = json::parse(res->body);
    } catch (const json::exception &e) {
      throw Error(Errc::kProtocolError, std::string("malformed JSON: ") + e.what());
    }
    if (!reply.is_object() || !reply.contains("dim") ||
        !reply["dim"].is_number_integer() || !reply.contains("vectors") ||
        !reply["vectors"].is_array()) {
      throw Error(Errc::kProtocolError, "response lacks dim or vectors");
    }
    if (reply.contains("model") && reply["model"] != spec_.model_id) {
      throw Error(Errc::kProtocolError, "response is for another model");
    }
    const auto dim = reply["dim"].get<std::int64_t>();
    if (dim != static_cast<std::int64_t>(spec_.dim)) {
      throw Error(Errc::kDimensionMismatch,
                  "service returned dim " + std::to_string(dim) + ", expected " +
                      std::to_string(spec_.dim));
    }
    const json &vectors = reply["vectors"];
    if (vectors.size() != texts.size()) {
      throw Error(Errc::kProtocolError,
                  "service returned " + std::to_string(vectors.size()) +
                      " vectors for " + std::to_string(texts.size()) + " texts");
    }
    std::vector<TextVector> out;
    out.reserve(texts.size());
    for (const json &v : vectors) {
      if (!v.is_array()) throw Error(Errc::kProtocolError, "vector is not an array");
      if (v.size() != spec_.dim) {
        throw Error(Errc::kDimensionMismatch,
                    "vector of length " + std::to_string(v.size()) +
                        ", expected " + std::to_string(spec_.dim));
      }
      TextVector values;
      values.reserve(spec_.dim);
      for (const json &x : v) {
        if (!x.is_number()) throw Error(Errc::kProtocolError, "non-numeric entry");
        const double d = x.get<double>();
        if (!std::isfinite(d)) throw Error(Errc::kProtocolError, "non-finite entry");
        values.push_back(d);
      }
      out.push_back(std::move(values));
    }
    return out;
  }
  throw Error(Errc::kServiceUnavailable,
              "gave up after " + std::to_string(spec_.max_attempts) +
                  " attempts; last failure: " + last_failure);
}

std::vector<TextVector> RemoteBackend::embed_batch(
    const std::vector<std::string> &texts) const {
  const std::size_t n_chunks = (texts.size() + spec_.max_batch - 1) / spec_.max_batch;
  std::vector<std::vector<TextVector>> results(n_chunks);
  std::vector<std::exception_ptr> errors(n_chunks);

  auto run_chunk = [&](std::size_t c) {
    const std::size_t begin = c * spec_.max_batch;
    const std::size_t end = std::min(texts.size(), begin + spec_.max_batch);
    std::vector<std::string> chunk(texts.begin() + begin, texts.begin() + end);
    try {
      results[c] = embed_chunk(chunk);
    } catch (...) {
      errors[c] = std::current_exception();
    }
  };

  const std::size_t workers = std::min(spec_.max_in_flight, n_chunks);
  if (workers <= 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t c = next++; c < n_chunks; c = next++) run_chunk(c);
      });
    }
    for (std::thread &t : pool) t.join();
  }

  // A failed chunk fails the whole batch; results are never truncated.
  for (const std::exception_ptr &e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<TextVector> out;
  out.reserve(texts.size());
  for (std::vector<TextVector> &chunk : results) {
    for (TextVector &v : chunk) out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::string> RemoteBackend::health() const {
  auto client = make_client(spec_);
  auto res = client->Get("/v1/health");
  if (!res) {
    throw Error(Errc::kServiceUnavailable,
                "health check failed: " + httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw Error(Errc::kServiceUnavailable,
                "health returned HTTP " + std::to_string(res->status));
  }
  try {
    json body = json::parse(res->body);
    return body.at("models").get<std::vector<std::string>>();
  } catch (const json::exception &e) {
    throw Error(Errc::kProtocolError, std::string("malformed health reply: ") + e.what());
  }
}

}  // namespace hasoc::embedkit
