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

#include "mock_embed_server.h"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "hasoc/embedkit.h"
#include "httplib.h"
#include "json.hpp"

namespace hasoc::tools {

using nlohmann::json;

MockEmbedServer::MockEmbedServer(Options options)
    : options_(std::move(options)), server_(std::make_unique<httplib::Server>()) {
  install_routes();
}

MockEmbedServer::~MockEmbedServer() { stop(); }

void MockEmbedServer::install_routes() {
  server_->Get("/v1/health", [this](const httplib::Request &, httplib::Response &res) {
    res.set_content(json{{"status", "ok"}, {"models", options_.models}}.dump(),
                    "application/json");
  });

  server_->Post("/v1/embed", [this](const httplib::Request &req, httplib::Response &res) {
    const int n = ++embed_requests_;
    const int now = ++in_flight_;
    for (int seen = max_concurrent_.load(); now > seen;) {
      if (max_concurrent_.compare_exchange_weak(seen, now)) break;
    }
    struct Leave {
      std::atomic<int> &c;
      ~Leave() { --c; }
    } leave{in_flight_};

    if (n <= options_.fail_first) {
      res.status = options_.fail_status;
      res.set_content(json{{"error", "injected failure"}}.dump(), "application/json");
      return;
    }
    json body;
    try {
      body = json::parse(req.body);
    } catch (const json::exception &) {
      res.status = 400;
      res.set_content(json{{"error", "bad json"}}.dump(), "application/json");
      return;
    }
    if (!body.contains("texts") || !body["texts"].is_array() || !body.contains("model")) {
      res.status = 400;
      res.set_content(json{{"error", "missing fields"}}.dump(), "application/json");
      return;
    }
    const std::string model = body["model"].get<std::string>();
    if (std::find(options_.models.begin(), options_.models.end(), model) ==
        options_.models.end()) {
      res.status = 404;
      res.set_content(json{{"error", "unknown model"}}.dump(), "application/json");
      return;
    }
    const auto texts = body["texts"].get<std::vector<std::string>>();
    if (options_.max_batch > 0 && texts.size() > options_.max_batch) {
      res.status = 413;
      res.set_content(json{{"error", "batch too large"}}.dump(), "application/json");
      return;
    }
    if (options_.delay_ms > 0) {
      const int ms = options_.delay_ms / static_cast<int>(1 + texts.size());
      std::this_thread::sleep_for(std::chrono::milliseconds(ms + 1));
    }
    const std::size_t dim = options_.reply_dim ? options_.reply_dim : options_.dim;
    json vectors = json::array();
    for (const std::string &t : texts) {
      std::vector<double> v = embedkit::hash_embed(t, options_.dim, options_.seed);
      v.resize(dim, 0.0);
      vectors.push_back(v);
    }
    res.set_content(json{{"model", model}, {"dim", dim}, {"vectors", vectors}}.dump(),
                    "application/json");
  });
}

void MockEmbedServer::start(int port) {
  if (port == 0) {
    port_ = server_->bind_to_any_port("127.0.0.1");
  } else {
    if (!server_->bind_to_port("127.0.0.1", port)) {
      throw std::runtime_error("cannot bind port " + std::to_string(port));
    }
    port_ = port;
  }
  thread_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
}

void MockEmbedServer::stop() {
  if (server_) server_->stop();
  if (thread_.joinable()) thread_.join();
}

void MockEmbedServer::listen(const std::string &host, int port) {
  port_ = port;
  server_->listen(host, port);
}

std::string MockEmbedServer::url() const {
  return "http://127.0.0.1:" + std::to_string(port_);
}

}  // namespace hasoc::tools
