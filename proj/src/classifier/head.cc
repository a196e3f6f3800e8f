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

#include "hasoc/classifier.h"

namespace hasoc::classifier {

std::string_view to_string(Mode mode) {
  return mode == Mode::kMono ? "mono" : "multi";
}

std::optional<Mode> parse_mode(std::string_view s) {
  if (s == "mono") return Mode::kMono;
  if (s == "multi") return Mode::kMulti;
  return std::nullopt;
}

void HeadConfig::validate() const {
  auto fail = [](const std::string &what) {
    throw Error(Errc::kInvalidConfig, what);
  };
  if (hidden_dim == 0) fail("hidden_dim must be positive");
  if (!(dropout >= 0.0 && dropout < 1.0)) fail("dropout must be in [0, 1)");
  if (!(lr > 0.0) || !std::isfinite(lr)) fail("lr must be positive");
  if (batch_size == 0) fail("batch_size must be positive");
  if (max_epochs == 0) fail("max_epochs must be positive");
  if (patience == 0) fail("patience must be positive");
  if (!(beta1 >= 0.0 && beta1 < 1.0)) fail("beta1 must be in [0, 1)");
  if (!(beta2 >= 0.0 && beta2 < 1.0)) fail("beta2 must be in [0, 1)");
  if (!(epsilon > 0.0)) fail("epsilon must be positive");
  if (!(val_fraction >= 0.0 && val_fraction < 1.0)) {
    fail("val_fraction must be in [0, 1)");
  }
}

namespace {

std::vector<Tensor> zero_like(const HeadParams &p) {
  std::vector<Tensor> out;
  for (const Tensor *t : p.tensors()) out.emplace_back(t->rows, t->cols);
  return out;
}

}  // namespace

HeadParams zero_params(std::size_t input_dim, std::size_t hidden_dim,
                       std::size_t num_classes) {
  HeadParams p;
  p.w1 = Tensor(hidden_dim, input_dim);
  p.b1 = Tensor(hidden_dim, 1);
  p.w2 = Tensor(num_classes, hidden_dim);
  p.b2 = Tensor(num_classes, 1);
  return p;
}

HeadParams init_params(std::size_t input_dim, std::size_t hidden_dim,
                       std::size_t num_classes, std::uint64_t seed) {
  if (input_dim == 0 || hidden_dim == 0 || num_classes < 2) {
    throw Error(Errc::kInvalidArgument, "head dimensions must be positive");
  }
  HeadParams p = zero_params(input_dim, hidden_dim, num_classes);
  SplitMix64 rng(derive_key(seed, 0x1417));
  for (Tensor *w : {&p.w1, &p.w2}) {
    const double limit = std::sqrt(6.0 / static_cast<double>(w->rows + w->cols));
    for (double &x : w->data) x = (2.0 * rng.uniform() - 1.0) * limit;
  }
  p.m = zero_like(p);
  p.v = zero_like(p);
  return p;
}

bool DropoutMasks::keep(std::size_t sample, std::size_t layer,
                        std::size_t unit) const {
  if (rate_ <= 0.0) return true;
  const std::uint64_t bits = derive_key(key_, sample, layer, unit);
  return static_cast<double>(bits >> 11) * 0x1.0p-53 >= rate_;
}

namespace {

// Everything the backward pass needs from one forward pass.
struct Trace {
  std::vector<double> x;       // input after dropout
  std::vector<double> z1;      // hidden pre-activation
  std::vector<double> h;       // hidden after ReLU and dropout
  std::vector<double> scale1;  // dropout factor per hidden unit
  std::vector<double> probs;
};

Trace run(const HeadParams &p, const std::vector<double> &input,
          const DropoutMasks *masks, std::size_t sample) {
  if (input.size() != p.input_dim()) {
    throw Error(Errc::kDimensionMismatch,
                "input has dim " + std::to_string(input.size()) + ", head expects " +
                    std::to_string(p.input_dim()));
  }
  Trace t;
  const double inv_keep = masks ? 1.0 / (1.0 - masks->rate()) : 1.0;
  t.x = input;
  if (masks) {
    for (std::size_t i = 0; i < t.x.size(); ++i) {
      t.x[i] = masks->keep(sample, 0, i) ? t.x[i] * inv_keep : 0.0;
    }
  }
  const std::size_t H = p.hidden_dim();
  const std::size_t D = p.input_dim();
  t.z1.assign(H, 0.0);
  t.h.assign(H, 0.0);
  t.scale1.assign(H, 1.0);
  for (std::size_t j = 0; j < H; ++j) {
    double s = p.b1.data[j];
    const double *row = &p.w1.data[j * D];
    for (std::size_t i = 0; i < D; ++i) s += row[i] * t.x[i];
    t.z1[j] = s;
    if (masks) t.scale1[j] = masks->keep(sample, 1, j) ? inv_keep : 0.0;
    t.h[j] = (s > 0.0 ? s : 0.0) * t.scale1[j];
  }
  const std::size_t C = p.num_classes();
  std::vector<double> z2(C, 0.0);
  for (std::size_t c = 0; c < C; ++c) {
    double s = p.b2.data[c];
    const double *row = &p.w2.data[c * H];
    for (std::size_t j = 0; j < H; ++j) s += row[j] * t.h[j];
    z2[c] = s;
  }
  const double zmax = *std::max_element(z2.begin(), z2.end());
  if (!std::isfinite(zmax)) {
    throw Error(Errc::kNonFiniteActivation, "non-finite logits");
  }
  double total = 0.0;
  t.probs.resize(C);
  for (std::size_t c = 0; c < C; ++c) {
    t.probs[c] = std::exp(z2[c] - zmax);
    total += t.probs[c];
  }
  for (double &q : t.probs) q /= total;
  return t;
}

}  // namespace

std::vector<double> forward(const HeadParams &params,
                            const std::vector<double> &input,
                            const DropoutMasks *masks, std::size_t sample) {
  return run(params, input, masks, sample).probs;
}

double loss(const std::vector<double> &probs, std::size_t gold) {
  return -std::log(std::max(probs.at(gold), 1e-12));
}

Gradients compute_gradients(const HeadParams &params,
                            const std::vector<const Example *> &batch,
                            const DropoutMasks *masks) {
  Gradients g;
  g.grads = zero_like(params);
  if (batch.empty()) return g;
  Tensor &gw1 = g.grads[0];
  Tensor &gb1 = g.grads[1];
  Tensor &gw2 = g.grads[2];
  Tensor &gb2 = g.grads[3];
  const std::size_t D = params.input_dim();
  const std::size_t H = params.hidden_dim();
  const std::size_t C = params.num_classes();

  std::vector<double> dz2(C);
  std::vector<double> dz1(H);
  for (std::size_t s = 0; s < batch.size(); ++s) {
    const Example &ex = *batch[s];
    if (ex.gold >= C) throw Error(Errc::kLabelOutsideVocabulary, "gold index out of range");
    const Trace t = run(params, ex.input, masks, s);
    g.loss += loss(t.probs, ex.gold);
    for (std::size_t c = 0; c < C; ++c) {
      dz2[c] = t.probs[c] - (c == ex.gold ? 1.0 : 0.0);
      gb2.data[c] += dz2[c];
      double *row = &gw2.data[c * H];
      for (std::size_t j = 0; j < H; ++j) row[j] += dz2[c] * t.h[j];
    }
    for (std::size_t j = 0; j < H; ++j) {
      if (t.z1[j] <= 0.0 || t.scale1[j] == 0.0) {
        dz1[j] = 0.0;
        continue;
      }
      double dh = 0.0;
      for (std::size_t c = 0; c < C; ++c) dh += params.w2.data[c * H + j] * dz2[c];
      dz1[j] = dh * t.scale1[j];
    }
    for (std::size_t j = 0; j < H; ++j) {
      if (dz1[j] == 0.0) continue;
      gb1.data[j] += dz1[j];
      double *row = &gw1.data[j * D];
      for (std::size_t i = 0; i < D; ++i) row[i] += dz1[j] * t.x[i];
    }
  }
  const double inv_n = 1.0 / static_cast<double>(batch.size());
  for (Tensor &t : g.grads) {
    for (double &x : t.data) x *= inv_n;
  }
  g.loss *= inv_n;
  return g;
}

void adam_update(HeadParams &params, const std::vector<Tensor> &grads,
                 const HeadConfig &config) {
  std::vector<Tensor *> ts = params.tensors();
  if (grads.size() != ts.size()) {
    throw Error(Errc::kDimensionMismatch, "gradient count does not match params");
  }
  if (params.m.empty()) params.m = zero_like(params);
  if (params.v.empty()) params.v = zero_like(params);
  for (const Tensor &g : grads) {
    for (double x : g.data) {
      if (!std::isfinite(x)) throw Error(Errc::kNonFiniteGradient, "non-finite gradient");
    }
  }
  ++params.step;
  const double t = static_cast<double>(params.step);
  const double bc1 = 1.0 - std::pow(config.beta1, t);
  const double bc2 = 1.0 - std::pow(config.beta2, t);
  for (std::size_t k = 0; k < ts.size(); ++k) {
    std::vector<double> &w = ts[k]->data;
    std::vector<double> &m = params.m[k].data;
    std::vector<double> &v = params.v[k].data;
    const std::vector<double> &g = grads[k].data;
    for (std::size_t i = 0; i < w.size(); ++i) {
      m[i] = config.beta1 * m[i] + (1.0 - config.beta1) * g[i];
      v[i] = config.beta2 * v[i] + (1.0 - config.beta2) * g[i] * g[i];
      const double mhat = m[i] / bc1;
      const double vhat = v[i] / bc2;
      w[i] -= config.lr * mhat / (std::sqrt(vhat) + config.epsilon);
    }
  }
}

double train_step(HeadParams &params, const std::vector<const Example *> &batch,
                  const HeadConfig &config, std::uint64_t batch_key) {
  const DropoutMasks masks(batch_key, config.dropout);
  Gradients g = compute_gradients(params, batch, &masks);
  if (!std::isfinite(g.loss)) throw Error(Errc::kNonFiniteGradient, "non-finite loss");
  adam_update(params, g.grads, config);
  return g.loss;
}

std::size_t argmax(const std::vector<double> &probs) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < probs.size(); ++i) {
    if (probs[i] > probs[best]) best = i;
  }
  return best;
}

}  // namespace hasoc::classifier
