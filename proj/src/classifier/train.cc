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

#include <numeric>

#include "hasoc/classifier.h"

namespace hasoc::classifier {

namespace {

std::vector<textprep::RawPost> posts_of(const corpus::LabeledDataset &ds) {
  std::vector<textprep::RawPost> posts;
  posts.reserve(ds.rows.size());
  for (const corpus::Row &r : ds.rows) posts.push_back({r.text, r.language});
  return posts;
}

std::vector<std::size_t> golds_of(const corpus::LabeledDataset &ds, corpus::Task task) {
  std::vector<std::size_t> golds;
  golds.reserve(ds.rows.size());
  for (std::size_t i = 0; i < ds.rows.size(); ++i) {
    auto idx = corpus::label_index(ds.rows[i], task);
    if (!idx) {
      throw Error(Errc::kLabelOutsideVocabulary,
                  "row " + ds.rows[i].hasoc_id + " has no label for task " +
                      std::string(corpus::to_string(task)));
    }
    golds.push_back(*idx);
  }
  return golds;
}

std::vector<Example> make_examples(const std::vector<FusedVector> &features,
                                   const std::vector<std::size_t> &golds) {
  std::vector<Example> out;
  out.reserve(features.size());
  for (std::size_t i = 0; i < features.size(); ++i) {
    out.push_back({features[i].values, golds[i]});
  }
  return out;
}

double score(const HeadParams &params, const std::vector<Example> &set,
             std::size_t num_classes) {
  std::vector<std::size_t> golds;
  std::vector<std::size_t> preds;
  for (const Example &ex : set) {
    golds.push_back(ex.gold);
    preds.push_back(argmax(forward(params, ex.input)));
  }
  std::vector<std::string> names(num_classes);
  for (std::size_t c = 0; c < num_classes; ++c) names[c] = std::to_string(c);
  return metrics::macro_f1(metrics::confusion(golds, preds, names));
}

}  // namespace

TrainedModel train_examples(const std::vector<Example> &train_set,
                            const std::vector<Example> &val_set,
                            const HeadConfig &config, std::size_t num_classes) {
  config.validate();
  if (train_set.empty()) throw Error(Errc::kEmptyDataset, "no training examples");
  const std::size_t input_dim = train_set.front().input.size();

  TrainedModel model;
  model.config = config;
  model.params = init_params(input_dim, config.hidden_dim, num_classes, config.seed);

  const std::vector<Example> &monitor = val_set.empty() ? train_set : val_set;
  HeadParams params = model.params;
  double best_f1 = -1.0;
  std::size_t stale = 0;

  std::vector<std::size_t> order(train_set.size());
  std::vector<const Example *> batch;
  for (std::size_t epoch = 1; epoch <= config.max_epochs; ++epoch) {
    std::iota(order.begin(), order.end(), 0);
    SplitMix64 rng(derive_key(config.seed, 0x5eed, epoch));
    for (std::size_t i = order.size(); i > 1; --i) {
      std::swap(order[i - 1], order[rng.below(i)]);
    }
    double loss_sum = 0.0;
    std::size_t b = 0;
    for (std::size_t start = 0; start < order.size(); start += config.batch_size, ++b) {
      const std::size_t end = std::min(order.size(), start + config.batch_size);
      batch.clear();
      for (std::size_t k = start; k < end; ++k) batch.push_back(&train_set[order[k]]);
      const double l =
          train_step(params, batch, config, derive_key(config.seed, 0xd409, epoch, b));
      loss_sum += l * static_cast<double>(batch.size());
    }

    EpochRecord rec;
    rec.epoch = epoch;
    rec.train_loss = loss_sum / static_cast<double>(train_set.size());
    rec.val_macro_f1 = score(params, monitor, num_classes);
    rec.steps = params.step;
    model.history.push_back(rec);

    if (rec.val_macro_f1 > best_f1) {
      best_f1 = rec.val_macro_f1;
      model.params = params;
      model.best_epoch = epoch;
      stale = 0;
    } else if (++stale >= config.patience) {
      break;
    }
  }
  return model;
}

TrainedModel train(const std::vector<corpus::LabeledDataset> &datasets, Mode mode,
                   const HeadConfig &config, const Featurizer &featurizer,
                   const WarningSink &warn) {
  config.validate();
  if (datasets.empty()) throw Error(Errc::kInvalidArgument, "no datasets given");
  if (mode == Mode::kMono && datasets.size() != 1) {
    throw Error(Errc::kInvalidArgument,
                "mono mode trains on exactly one dataset, got " +
                    std::to_string(datasets.size()));
  }
  std::size_t total = 0;
  for (const corpus::LabeledDataset &ds : datasets) {
    golds_of(ds, config.task);
    total += ds.size();
  }
  if (total == 0) throw Error(Errc::kEmptyDataset, "all datasets are empty");

  std::vector<corpus::LabeledDataset> train_parts;
  std::vector<corpus::LabeledDataset> val_parts;
  for (const corpus::LabeledDataset &ds : datasets) {
    if (ds.rows.empty()) continue;
    auto [tr, va] = corpus::split(ds, config.val_fraction, config.seed, config.task, warn);
    train_parts.push_back(std::move(tr));
    val_parts.push_back(std::move(va));
  }
  corpus::LabeledDataset train_ds = corpus::combine(train_parts);
  corpus::LabeledDataset val_ds = corpus::combine(val_parts);
  if (mode == Mode::kMulti) {
    train_ds.language = Language::MULTI;
    val_ds.language = Language::MULTI;
  }

  const std::vector<FusedVector> train_feats = featurizer.featurize(posts_of(train_ds));
  std::vector<Example> train_set =
      make_examples(train_feats, golds_of(train_ds, config.task));
  if (config.soup) {
    std::vector<std::vector<double>> vecs;
    vecs.reserve(train_feats.size());
    for (const FusedVector &f : train_feats) vecs.push_back(f.values);
    const std::vector<std::size_t> picked =
        corpus::soup_resample_indices(train_ds, config.task, std::move(vecs), config.seed);
    std::vector<Example> resampled;
    resampled.reserve(picked.size());
    for (std::size_t i : picked) resampled.push_back(train_set[i]);
    train_set = std::move(resampled);
  }
  const std::vector<Example> val_set = make_examples(
      featurizer.featurize(posts_of(val_ds)), golds_of(val_ds, config.task));

  const std::vector<std::string> &labels = corpus::label_names(config.task);
  TrainedModel model = train_examples(train_set, val_set, config, labels.size());
  model.labels = labels;
  model.mode = mode;
  model.language = mode == Mode::kMulti ? Language::MULTI : datasets.front().language;
  model.backend_id = featurizer.backend().id();
  model.features = featurizer.options();
  model.layout = featurizer.layout();
  return model;
}

namespace {

void check_compatible(const TrainedModel &model, const Featurizer &featurizer) {
  if (featurizer.backend().id() != model.backend_id) {
    throw Error(Errc::kBackendMismatch,
                "model was trained with backend '" + model.backend_id +
                    "', got '" + featurizer.backend().id() + "'");
  }
  if (!(featurizer.layout() == model.layout)) {
    throw Error(Errc::kDimensionMismatch,
                "feature layout differs from the one the model was trained with");
  }
}

}  // namespace

std::vector<Prediction> predict_batch(const TrainedModel &model,
                                      const std::vector<textprep::RawPost> &posts,
                                      const Featurizer &featurizer) {
  check_compatible(model, featurizer);
  std::vector<Prediction> out;
  out.reserve(posts.size());
  for (const FusedVector &f : featurizer.featurize(posts)) {
    Prediction p;
    p.probabilities = forward(model.params, f.values);
    p.index = argmax(p.probabilities);
    p.label = model.labels.at(p.index);
    out.push_back(std::move(p));
  }
  return out;
}

Prediction predict(const TrainedModel &model, const textprep::RawPost &post,
                   const Featurizer &featurizer) {
  return predict_batch(model, {post}, featurizer).front();
}

metrics::EvalReport evaluate(const TrainedModel &model,
                             const corpus::LabeledDataset &dataset,
                             const Featurizer &featurizer) {
  const std::vector<std::size_t> golds = golds_of(dataset, model.config.task);
  std::vector<std::size_t> preds;
  for (const Prediction &p : predict_batch(model, posts_of(dataset), featurizer)) {
    preds.push_back(p.index);
  }
  metrics::EvalReport r =
      metrics::make_report(metrics::confusion(golds, preds, model.labels));
  r.mode = std::string(to_string(model.mode));
  r.backend = model.backend_id;
  r.task = std::string(corpus::to_string(model.config.task));
  r.language = std::string(to_string(dataset.language));
  return r;
}

}  // namespace hasoc::classifier
