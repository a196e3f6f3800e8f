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

#ifndef HASOC_CLI_H_
#define HASOC_CLI_H_

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace hasoc::cli {

inline constexpr std::string_view kVersion = "0.1.0";

// Runs the command line (without the program name). Returns the process
// exit code: 0 on success, 2 for usage, configuration or input-data errors,
// 1 for failures while running.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace hasoc::cli

#endif  // HASOC_CLI_H_
