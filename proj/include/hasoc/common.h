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

#ifndef HASOC_COMMON_H_
#define HASOC_COMMON_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hasoc {

enum class Language { EN, HI, MR, MULTI };

std::string_view to_string(Language lang);

// Accepts "en", "hi", "mr", "multi" in any case.
std::optional<Language> parse_language(std::string_view s);

// Error codes shared by every module. Each maps onto one of the failure
// conditions a module contract names.
enum class Errc {
  kInvalidArgument,
  kIo,
  kEncoding,
  kInvalidPost,
  kAllContentRemoved,
  kTransliteratorFailure,
  kMalformedLexicon,
  kEmptyLexicon,
  kInputTooLong,
  kMalformedRegistry,
  kNotFound,
  kMalformedHeader,
  kDimensionMismatch,
  kMalformedRow,
  kServiceUnavailable,
  kProtocolError,
  kNonFiniteActivation,
  kNonFiniteGradient,
  kEmptyDataset,
  kLabelOutsideVocabulary,
  kMissingColumn,
  kBadLabel,
  kDegenerateClass,
  kLengthMismatch,
  kUnknownLabel,
  kBackendMismatch,
  kInvalidConfig,
  kMalformedModel,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string &message,
        std::optional<std::size_t> line = std::nullopt);

  Errc code() const { return code_; }

  // 1-based line or row number when the error points into a file.
  std::optional<std::size_t> line() const { return line_; }

  // True for errors caused by bad input files or configuration rather than
  // by a failure while running.
  bool is_input_error() const;

 private:
  Errc code_;
  std::optional<std::size_t> line_;
};

// Receives non-fatal diagnostics. The default sink writes to stderr.
using WarningSink = std::function<void(std::string_view)>;

WarningSink default_warning_sink();

// SplitMix64: a tiny counter-friendly generator whose output is fully
// specified, so shuffles and initializations are reproducible everywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 bits of precision.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound). bound must be > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

// Stateless 64-bit mixer used to derive independent stream keys.
std::uint64_t mix64(std::uint64_t x);

// Combines several values into one key; order matters.
std::uint64_t derive_key(std::uint64_t seed, std::uint64_t a,
                         std::uint64_t b = 0, std::uint64_t c = 0);

// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace hasoc

#endif  // HASOC_COMMON_H_
