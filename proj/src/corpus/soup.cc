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
#include <numeric>

#include "hasoc/corpus.h"

namespace hasoc::corpus {

namespace {

double dot(const std::vector<double> &a, const std::vector<double> &b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

void normalize(std::vector<double> &v) {
  const double norm = std::sqrt(dot(v, v));
  if (norm > 0.0) {
    for (double &x : v) x /= norm;
  }
}

// A within-class pair ordered by (similarity desc, lower rank asc, higher
// rank asc); rank is a seed-dependent permutation used for tie-breaks.
struct Pair {
  double sim = -2.0;
  std::size_t lo = SIZE_MAX;
  std::size_t hi = SIZE_MAX;
  std::size_t partner = SIZE_MAX;

  bool valid() const { return partner != SIZE_MAX; }
  bool better_than(const Pair &o) const {
    if (!o.valid()) return valid();
    if (sim != o.sim) return sim > o.sim;
    if (lo != o.lo) return lo < o.lo;
    return hi < o.hi;
  }
};

}  // namespace

std::vector<std::size_t> soup_resample_indices(
    const LabeledDataset &dataset, Task task,
    std::vector<std::vector<double>> vecs, std::uint64_t seed) {
  const std::size_t n_labels = label_names(task).size();
  std::vector<std::vector<std::size_t>> classes(n_labels);
  for (std::size_t i = 0; i < dataset.rows.size(); ++i) {
    auto idx = label_index(dataset.rows[i], task);
    if (!idx) {
      throw Error(Errc::kLabelOutsideVocabulary,
                  "row " + std::to_string(i + 1) + " has no label for task " +
                      std::string(to_string(task)));
    }
    classes[*idx].push_back(i);
  }
  for (std::size_t c = 0; c < n_labels; ++c) {
    if (classes[c].empty()) {
      throw Error(Errc::kDegenerateClass,
                  "class " + label_names(task)[c] + " has no rows");
    }
  }

  if (vecs.size() != dataset.rows.size()) {
    throw Error(Errc::kLengthMismatch, "embedder returned wrong number of vectors");
  }
  for (auto &v : vecs) normalize(v);

  std::vector<std::size_t> rank(dataset.rows.size());
  {
    std::vector<std::size_t> perm(rank.size());
    std::iota(perm.begin(), perm.end(), 0);
    SplitMix64 rng(derive_key(seed, 0x50c9));
    for (std::size_t i = perm.size(); i > 1; --i) {
      std::swap(perm[i - 1], perm[rng.below(i)]);
    }
    for (std::size_t r = 0; r < perm.size(); ++r) rank[perm[r]] = r;
  }

  const double mean = static_cast<double>(dataset.rows.size()) /
                      static_cast<double>(n_labels);
  const auto target = static_cast<std::size_t>(std::llround(mean));

  std::vector<bool> keep(dataset.rows.size(), true);
  std::vector<std::size_t> extra;

  for (const std::vector<std::size_t> &members : classes) {
    if (members.size() < target) {
      std::vector<double> centroid(vecs[members[0]].size(), 0.0);
      for (std::size_t i : members) {
        for (std::size_t k = 0; k < centroid.size(); ++k) centroid[k] += vecs[i][k];
      }
      normalize(centroid);
      std::vector<std::pair<double, std::size_t>> order;
      for (std::size_t i : members) order.emplace_back(dot(vecs[i], centroid), i);
      std::sort(order.begin(), order.end(), [&](const auto &a, const auto &b) {
        if (a.first != b.first) return a.first > b.first;
        return rank[a.second] < rank[b.second];
      });
      for (std::size_t k = 0; k < target - members.size(); ++k) {
        extra.push_back(order[k % order.size()].second);
      }
    } else if (members.size() > target) {
      std::vector<bool> alive(members.size(), true);
      auto pair_of = [&](std::size_t a, std::size_t b) {
        const std::size_t ra = rank[members[a]];
        const std::size_t rb = rank[members[b]];
        return Pair{dot(vecs[members[a]], vecs[members[b]]), std::min(ra, rb),
                    std::max(ra, rb), b};
      };
      auto best_for = [&](std::size_t a) {
        Pair best;
        for (std::size_t b = 0; b < members.size(); ++b) {
          if (b == a || !alive[b]) continue;
          const Pair p = pair_of(a, b);
          if (p.better_than(best)) best = p;
        }
        return best;
      };
      std::vector<Pair> best(members.size());
      for (std::size_t a = 0; a < members.size(); ++a) best[a] = best_for(a);

      for (std::size_t remaining = members.size(); remaining > target; --remaining) {
        std::size_t pick = SIZE_MAX;
        for (std::size_t a = 0; a < members.size(); ++a) {
          if (!alive[a]) continue;
          if (pick == SIZE_MAX || best[a].better_than(best[pick])) pick = a;
        }
        const std::size_t other = best[pick].partner;
        // Drop the pair member that comes later in the tie-break order.
        const std::size_t victim =
            rank[members[pick]] > rank[members[other]] ? pick : other;
        alive[victim] = false;
        keep[members[victim]] = false;
        for (std::size_t a = 0; a < members.size(); ++a) {
          if (alive[a] && best[a].partner == victim) best[a] = best_for(a);
        }
      }
    }
  }

  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dataset.rows.size(); ++i) {
    if (keep[i]) out.push_back(i);
  }
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

LabeledDataset soup_resample(const LabeledDataset &dataset, Task task,
                             const RowEmbedder &embed, std::uint64_t seed) {
  for (const Row &r : dataset.rows) {
    if (!label_index(r, task)) {
      throw Error(Errc::kLabelOutsideVocabulary,
                  "row without a label for task " + std::string(to_string(task)));
    }
  }
  const std::vector<std::size_t> picked =
      soup_resample_indices(dataset, task, embed(dataset.rows), seed);
  LabeledDataset out;
  out.language = dataset.language;
  out.provenance = dataset.provenance;
  for (std::size_t i : picked) out.rows.push_back(dataset.rows[i]);
  return out;
}

}  // namespace hasoc::corpus
