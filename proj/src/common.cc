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

#include "hasoc/common.h"

#include <algorithm>
#include <cctype>
#include <iostream>

namespace hasoc {

std::string_view to_string(Language lang) {
  switch (lang) {
    case Language::EN: return "en";
    case Language::HI: return "hi";
    case Language::MR: return "mr";
    case Language::MULTI: return "multi";
  }
  return "?";
}

std::optional<Language> parse_language(std::string_view s) {
  std::string lower(s);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "en") return Language::EN;
  if (lower == "hi") return Language::HI;
  if (lower == "mr") return Language::MR;
  if (lower == "multi") return Language::MULTI;
  return std::nullopt;
}

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kIo: return "IoError";
    case Errc::kEncoding: return "EncodingError";
    case Errc::kInvalidPost: return "InvalidPost";
    case Errc::kAllContentRemoved: return "AllContentRemoved";
    case Errc::kTransliteratorFailure: return "TransliteratorFailure";
    case Errc::kMalformedLexicon: return "MalformedLexicon";
    case Errc::kEmptyLexicon: return "EmptyLexicon";
    case Errc::kInputTooLong: return "InputTooLong";
    case Errc::kMalformedRegistry: return "MalformedRegistry";
    case Errc::kNotFound: return "NotFound";
    case Errc::kMalformedHeader: return "MalformedHeader";
    case Errc::kDimensionMismatch: return "DimensionMismatch";
    case Errc::kMalformedRow: return "MalformedRow";
    case Errc::kServiceUnavailable: return "ServiceUnavailable";
    case Errc::kProtocolError: return "ProtocolError";
    case Errc::kNonFiniteActivation: return "NonFiniteActivation";
    case Errc::kNonFiniteGradient: return "NonFiniteGradient";
    case Errc::kEmptyDataset: return "EmptyDataset";
    case Errc::kLabelOutsideVocabulary: return "LabelOutsideVocabulary";
    case Errc::kMissingColumn: return "MissingColumn";
    case Errc::kBadLabel: return "BadLabel";
    case Errc::kDegenerateClass: return "DegenerateClass";
    case Errc::kLengthMismatch: return "LengthMismatch";
    case Errc::kUnknownLabel: return "UnknownLabel";
    case Errc::kBackendMismatch: return "BackendMismatch";
    case Errc::kInvalidConfig: return "InvalidConfig";
    case Errc::kMalformedModel: return "MalformedModel";
  }
  return "Unknown";
}

namespace {

std::string format_message(Errc code, const std::string &message,
                           std::optional<std::size_t> line) {
  std::string out(to_string(code));
  if (line) out += " (line " + std::to_string(*line) + ")";
  if (!message.empty()) out += ": " + message;
  return out;
}

}  // namespace

Error::Error(Errc code, const std::string &message,
             std::optional<std::size_t> line)
    : std::runtime_error(format_message(code, message, line)),
      code_(code),
      line_(line) {}

bool Error::is_input_error() const {
  switch (code_) {
    case Errc::kInvalidArgument:
    case Errc::kIo:
    case Errc::kEncoding:
    case Errc::kMalformedLexicon:
    case Errc::kEmptyLexicon:
    case Errc::kMalformedRegistry:
    case Errc::kMalformedHeader:
    case Errc::kDimensionMismatch:
    case Errc::kMalformedRow:
    case Errc::kMissingColumn:
    case Errc::kBadLabel:
    case Errc::kInvalidConfig:
    case Errc::kMalformedModel:
    case Errc::kInvalidPost:
    case Errc::kInputTooLong:
    case Errc::kEmptyDataset:
    case Errc::kLabelOutsideVocabulary:
    case Errc::kDegenerateClass:
    case Errc::kBackendMismatch:
      return true;
    default:
      return false;
  }
}

WarningSink default_warning_sink() {
  return [](std::string_view msg) { std::cerr << "warning: " << msg << "\n"; };
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

std::uint64_t derive_key(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                         std::uint64_t c) {
  std::uint64_t k = mix64(seed ^ 0x6a09e667f3bcc909ULL);
  k = mix64(k ^ (a + 0x9e3779b97f4a7c15ULL));
  k = mix64(k ^ (b + 0xbb67ae8584caa73bULL));
  k = mix64(k ^ (c + 0x3c6ef372fe94f82bULL));
  return k;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace hasoc
