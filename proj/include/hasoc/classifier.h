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

#ifndef HASOC_CLASSIFIER_H_
#define HASOC_CLASSIFIER_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hasoc/corpus.h"
#include "hasoc/emojikit.h"
#include "hasoc/featurizer.h"
#include "hasoc/metrics.h"

namespace hasoc::classifier {

enum class Mode { kMono, kMulti };

std::string_view to_string(Mode mode);
std::optional<Mode> parse_mode(std::string_view s);  // "mono" / "multi"

struct HeadConfig {
  std::size_t hidden_dim = 256;
  double dropout = 0.2;
  double lr = 2e-4;
  std::size_t batch_size = 64;
  std::size_t max_epochs = 50;
  std::size_t patience = 5;
  std::uint64_t seed = 0;
  corpus::Task task = corpus::Task::k1A;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  double val_fraction = 0.1;
  bool soup = false;

  // Throws Error(kInvalidConfig).
  void validate() const;
};

// Row-major dense tensor.
struct Tensor {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Tensor() = default;
  Tensor(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double &at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  friend bool operator==(const Tensor &, const Tensor &) = default;
};

// Two-layer head: input -> dropout -> W1 x + b1 -> ReLU -> dropout ->
// W2 h + b2 -> softmax.
struct HeadParams {
  Tensor w1;  // hidden x input
  Tensor b1;  // hidden x 1
  Tensor w2;  // classes x hidden
  Tensor b2;  // classes x 1

  // Adam first/second moments, same order as tensors().
  std::vector<Tensor> m;
  std::vector<Tensor> v;
  std::uint64_t step = 0;

  std::size_t input_dim() const { return w1.cols; }
  std::size_t hidden_dim() const { return w1.rows; }
  std::size_t num_classes() const { return w2.rows; }

  std::vector<Tensor *> tensors() { return {&w1, &b1, &w2, &b2}; }
  std::vector<const Tensor *> tensors() const { return {&w1, &b1, &w2, &b2}; }

  friend bool operator==(const HeadParams &, const HeadParams &) = default;
};

// Glorot-uniform weights, zero biases, zero Adam state.
HeadParams init_params(std::size_t input_dim, std::size_t hidden_dim,
                       std::size_t num_classes, std::uint64_t seed);

// All-zero parameters with empty Adam state.
HeadParams zero_params(std::size_t input_dim, std::size_t hidden_dim,
                       std::size_t num_classes);

// Counter-based dropout masks. Whether unit u of layer l is kept for sample
// s is a pure function of (key, s, l, u), so re-running a batch reproduces
// its masks exactly.
class DropoutMasks {
 public:
  DropoutMasks(std::uint64_t key, double rate) : key_(key), rate_(rate) {}

  bool keep(std::size_t sample, std::size_t layer, std::size_t unit) const;
  double rate() const { return rate_; }

 private:
  std::uint64_t key_;
  double rate_;
};

// Class probabilities. masks == nullptr means evaluation mode (no dropout).
// Throws NonFiniteActivation.
std::vector<double> forward(const HeadParams &params,
                            const std::vector<double> &input,
                            const DropoutMasks *masks = nullptr,
                            std::size_t sample = 0);

// -log(max(probs[gold], 1e-12)).
double loss(const std::vector<double> &probs, std::size_t gold);

struct Example {
  std::vector<double> input;
  std::size_t gold = 0;
};

struct Gradients {
  std::vector<Tensor> grads;  // same order as HeadParams::tensors()
  double loss = 0.0;          // mean loss over the batch
};

// Mean cross-entropy gradients over the batch.
Gradients compute_gradients(const HeadParams &params,
                            const std::vector<const Example *> &batch,
                            const DropoutMasks *masks);

// One Adam step on the batch; returns the mean batch loss. Throws
// NonFiniteGradient.
double train_step(HeadParams &params, const std::vector<const Example *> &batch,
                  const HeadConfig &config, std::uint64_t batch_key);

// Applies one Adam update with the given gradients.
void adam_update(HeadParams &params, const std::vector<Tensor> &grads,
                 const HeadConfig &config);

struct EpochRecord {
  std::size_t epoch = 0;
  double train_loss = 0.0;
  double val_macro_f1 = 0.0;
  std::uint64_t steps = 0;  // optimizer steps taken so far

  friend bool operator==(const EpochRecord &, const EpochRecord &) = default;
};

struct TrainedModel {
  HeadParams params;
  HeadConfig config;
  std::vector<std::string> labels;
  Mode mode = Mode::kMono;
  Language language = Language::EN;
  std::string backend_id;
  FeatureOptions features;
  FusedLayout layout;
  std::vector<EpochRecord> history;
  std::size_t best_epoch = 0;
  // Free-form provenance written by the caller (resource paths and such).
  std::map<std::string, std::string> metadata;
};

// Trains a head. MONO needs exactly one dataset; MULTI pools every dataset.
// Each dataset is split stratified into train/validation with
// config.val_fraction, and early stopping tracks validation macro-F1.
// Throws EmptyDataset, LabelOutsideVocabulary or InvalidArgument.
TrainedModel train(const std::vector<corpus::LabeledDataset> &datasets,
                   Mode mode, const HeadConfig &config,
                   const Featurizer &featurizer,
                   const WarningSink &warn = default_warning_sink());

// Training on already featurized examples.
TrainedModel train_examples(const std::vector<Example> &train_set,
                            const std::vector<Example> &val_set,
                            const HeadConfig &config,
                            std::size_t num_classes);

struct Prediction {
  std::size_t index = 0;
  std::string label;
  std::vector<double> probabilities;
};

// Argmax with ties to the lowest label index.
std::size_t argmax(const std::vector<double> &probs);

Prediction predict(const TrainedModel &model, const textprep::RawPost &post,
                   const Featurizer &featurizer);

std::vector<Prediction> predict_batch(const TrainedModel &model,
                                      const std::vector<textprep::RawPost> &posts,
                                      const Featurizer &featurizer);

metrics::EvalReport evaluate(const TrainedModel &model,
                             const corpus::LabeledDataset &dataset,
                             const Featurizer &featurizer);

// Self-describing JSON with a mandatory "format_version".
std::string serialize_model(const TrainedModel &model);
TrainedModel deserialize_model(std::string_view text);
void save_model(const std::string &path, const TrainedModel &model);
TrainedModel load_model(const std::string &path);

}  // namespace hasoc::classifier

#endif  // HASOC_CLASSIFIER_H_
