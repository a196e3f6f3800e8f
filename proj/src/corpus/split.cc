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
#include <cmath>
#include <map>
#include <numeric>

#include "hasoc/corpus.h"

namespace hasoc::corpus {

namespace {

void shuffle(std::vector<std::size_t> &v, std::uint64_t key) {
  SplitMix64 rng(key);
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[rng.below(i)]);
  }
}

constexpr std::size_t kAbsentKey = 1000;

}  // namespace

std::pair<LabeledDataset, LabeledDataset> split(const LabeledDataset &dataset,
                                                double val_fraction,
                                                std::uint64_t seed, Task task,
                                                const WarningSink &warn) {
  if (!(val_fraction > 0.0 && val_fraction < 1.0)) {
    throw Error(Errc::kInvalidArgument, "val_fraction must lie in (0, 1)");
  }
  const std::size_t n = dataset.rows.size();
  const auto n_val = static_cast<std::size_t>(
      std::llround(val_fraction * static_cast<double>(n)));

  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) {
    groups[label_index(dataset.rows[i], task).value_or(kAbsentKey)].push_back(i);
  }

  std::vector<bool> in_val(n, false);
  const bool stratify = std::all_of(groups.begin(), groups.end(),
                                    [](const auto &g) { return g.second.size() >= 2; });
  if (!stratify) {
    if (warn) warn("ClassTooSmall: a label has fewer than 2 rows; splitting unstratified");
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    shuffle(all, derive_key(seed, 0x5eed));
    for (std::size_t k = 0; k < n_val; ++k) in_val[all[k]] = true;
  } else {
    // Largest-remainder apportionment of the validation rows.
    struct Quota {
      std::size_t key;
      std::size_t count;
      double remainder;
    };
    std::vector<Quota> quotas;
    std::size_t assigned = 0;
    for (const auto &[key, members] : groups) {
      const double exact = val_fraction * static_cast<double>(members.size());
      const auto base = static_cast<std::size_t>(std::floor(exact));
      quotas.push_back({key, base, exact - static_cast<double>(base)});
      assigned += base;
    }
    std::vector<std::size_t> order(quotas.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return quotas[a].remainder > quotas[b].remainder;
    });
    for (std::size_t k = 0; assigned < n_val && k < order.size(); ++k) {
      ++quotas[order[k]].count;
      ++assigned;
    }
    for (const Quota &q : quotas) {
      std::vector<std::size_t> members = groups[q.key];
      shuffle(members, derive_key(seed, q.key));
      for (std::size_t k = 0; k < q.count && k < members.size(); ++k) {
        in_val[members[k]] = true;
      }
    }
  }

  LabeledDataset train;
  LabeledDataset val;
  train.language = val.language = dataset.language;
  train.provenance = val.provenance = dataset.provenance;
  for (std::size_t i = 0; i < n; ++i) {
    (in_val[i] ? val : train).rows.push_back(dataset.rows[i]);
  }
  return {std::move(train), std::move(val)};
}

}  // namespace hasoc::corpus
