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

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "mock_embed_server.h"

// Serves the embedding wire protocol with hashed vectors, for local runs of
// the remote backend without the real service.
int main(int argc, char **argv) {
  CLI::App app{"Mock embedding service", "mock_embed_server"};
  std::string host = "127.0.0.1";
  int port = 8080;
  hasoc::tools::MockEmbedServer::Options options;
  options.dim = 768;
  app.add_option("--host", host, "Bind address");
  app.add_option("--port", port, "Port");
  app.add_option("--dim", options.dim, "Vector dimension");
  app.add_option("--seed", options.seed, "Hash seed");
  CLI11_PARSE(app, argc, argv);

  hasoc::tools::MockEmbedServer server(options);
  std::cerr << "listening on " << host << ":" << port << "\n";
  server.listen(host, port);
  return EXIT_SUCCESS;
}
