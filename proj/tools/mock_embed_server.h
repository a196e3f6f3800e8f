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

#ifndef HASOC_TOOLS_MOCK_EMBED_SERVER_H_
#define HASOC_TOOLS_MOCK_EMBED_SERVER_H_

#include <atomic>
#include <cstdint>
#include <memory>
#include <string>
#include <thread>
#include <vector>

namespace httplib {
class Server;
}

namespace hasoc::tools {

// In-process stand-in for the embedding service. Vectors come from the hash
// encoder so replies are deterministic; faults can be injected per request.
class MockEmbedServer {
 public:
  struct Options {
    std::size_t dim = 16;
    std::uint64_t seed = 0;
    std::vector<std::string> models = {"xlmr", "mbert", "distilmbert"};
    // The first `fail_first` embed requests get `fail_status`.
    int fail_first = 0;
    int fail_status = 503;
    // Larger batches are refused with 413; 0 means no limit.
    std::size_t max_batch = 0;
    // Reply with this dim instead of the real one when non-zero.
    std::size_t reply_dim = 0;
    // Each embed request sleeps this long; larger batches sleep less so
    // replies complete out of order under concurrency.
    int delay_ms = 0;
  };

  explicit MockEmbedServer(Options options);
  ~MockEmbedServer();

  // Binds to 127.0.0.1 on `port` (0 picks a free port) and serves in a
  // background thread.
  void start(int port = 0);
  void stop();

  // Blocks serving on the calling thread.
  void listen(const std::string &host, int port);

  int port() const { return port_; }
  std::string url() const;

  int embed_requests() const { return embed_requests_.load(); }
  int max_concurrent() const { return max_concurrent_.load(); }

 private:
  void install_routes();

  Options options_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
  int port_ = 0;
  std::atomic<int> embed_requests_{0};
  std::atomic<int> in_flight_{0};
  std::atomic<int> max_concurrent_{0};
};

}  // namespace hasoc::tools

#endif  // HASOC_TOOLS_MOCK_EMBED_SERVER_H_
