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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hasoc/classifier.h"
#include "json.hpp"

namespace hasoc::classifier {

namespace {

using nlohmann::json;

constexpr int kFormatVersion = 1;

json tensor_json(const Tensor &t) {
  return {{"rows", t.rows}, {"cols", t.cols}, {"data", t.data}};
}

Tensor tensor_from(const json &j) {
  Tensor t(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  t.data = j.at("data").get<std::vector<double>>();
  if (t.data.size() != t.rows * t.cols) {
    throw Error(Errc::kMalformedModel, "tensor data does not match its shape");
  }
  return t;
}

json tensors_json(const std::vector<Tensor> &ts) {
  json arr = json::array();
  for (const Tensor &t : ts) arr.push_back(tensor_json(t));
  return arr;
}

std::vector<Tensor> tensors_from(const json &j) {
  std::vector<Tensor> out;
  for (const json &t : j) out.push_back(tensor_from(t));
  return out;
}

}  // namespace

std::string serialize_model(const TrainedModel &m) {
  const HeadConfig &c = m.config;
  json j;
  j["format_version"] = kFormatVersion;
  j["config"] = {{"hidden_dim", c.hidden_dim},     {"dropout", c.dropout},
                 {"lr", c.lr},                     {"batch_size", c.batch_size},
                 {"max_epochs", c.max_epochs},     {"patience", c.patience},
                 {"seed", c.seed},                 {"task", corpus::to_string(c.task)},
                 {"beta1", c.beta1},               {"beta2", c.beta2},
                 {"epsilon", c.epsilon},           {"val_fraction", c.val_fraction},
                 {"soup", c.soup}};
  j["labels"] = m.labels;
  j["mode"] = to_string(m.mode);
  j["language"] = to_string(m.language);
  j["backend_id"] = m.backend_id;
  j["features"] = {{"use_hashtags", m.features.use_hashtags},
                   {"use_emoji_vectors", m.features.use_emoji_vectors},
                   {"use_emoji_descriptions", m.features.use_emoji_descriptions},
                   {"script_filter", m.features.script_filter}};
  j["layout"] = {{"text_dim", m.layout.text_dim}, {"aux_dim", m.layout.aux_dim}};
  j["params"] = {{"w1", tensor_json(m.params.w1)},
                 {"b1", tensor_json(m.params.b1)},
                 {"w2", tensor_json(m.params.w2)},
                 {"b2", tensor_json(m.params.b2)}};
  j["adam"] = {{"step", m.params.step},
               {"m", tensors_json(m.params.m)},
               {"v", tensors_json(m.params.v)}};
  json hist = json::array();
  for (const EpochRecord &r : m.history) {
    hist.push_back({{"epoch", r.epoch},
                    {"train_loss", r.train_loss},
                    {"val_macro_f1", r.val_macro_f1},
                    {"steps", r.steps}});
  }
  j["history"] = hist;
  j["best_epoch"] = m.best_epoch;
  j["metadata"] = m.metadata;
  return j.dump(1) + "\n";
}

TrainedModel deserialize_model(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception &e) {
    throw Error(Errc::kMalformedModel, std::string("not valid JSON: ") + e.what());
  }
  try {
    if (!j.is_object() || !j.contains("format_version")) {
      throw Error(Errc::kMalformedModel, "missing format_version");
    }
    const int version = j.at("format_version").get<int>();
    if (version != kFormatVersion) {
      throw Error(Errc::kMalformedModel,
                  "unsupported format_version " + std::to_string(version));
    }
    TrainedModel m;
    const json &c = j.at("config");
    m.config.hidden_dim = c.at("hidden_dim").get<std::size_t>();
    m.config.dropout = c.at("dropout").get<double>();
    m.config.lr = c.at("lr").get<double>();
    m.config.batch_size = c.at("batch_size").get<std::size_t>();
    m.config.max_epochs = c.at("max_epochs").get<std::size_t>();
    m.config.patience = c.at("patience").get<std::size_t>();
    m.config.seed = c.at("seed").get<std::uint64_t>();
    auto task = corpus::parse_task(c.at("task").get<std::string>());
    if (!task) throw Error(Errc::kMalformedModel, "unknown task");
    m.config.task = *task;
    m.config.beta1 = c.at("beta1").get<double>();
    m.config.beta2 = c.at("beta2").get<double>();
    m.config.epsilon = c.at("epsilon").get<double>();
    m.config.val_fraction = c.at("val_fraction").get<double>();
    m.config.soup = c.at("soup").get<bool>();

    m.labels = j.at("labels").get<std::vector<std::string>>();
    auto mode = parse_mode(j.at("mode").get<std::string>());
    if (!mode) throw Error(Errc::kMalformedModel, "unknown mode");
    m.mode = *mode;
    auto lang = parse_language(j.at("language").get<std::string>());
    if (!lang) throw Error(Errc::kMalformedModel, "unknown language");
    m.language = *lang;
    m.backend_id = j.at("backend_id").get<std::string>();

    const json &f = j.at("features");
    m.features.use_hashtags = f.at("use_hashtags").get<bool>();
    m.features.use_emoji_vectors = f.at("use_emoji_vectors").get<bool>();
    m.features.use_emoji_descriptions = f.at("use_emoji_descriptions").get<bool>();
    m.features.script_filter = f.at("script_filter").get<bool>();
    m.layout.text_dim = j.at("layout").at("text_dim").get<std::size_t>();
    m.layout.aux_dim = j.at("layout").at("aux_dim").get<std::size_t>();

    const json &p = j.at("params");
    m.params.w1 = tensor_from(p.at("w1"));
    m.params.b1 = tensor_from(p.at("b1"));
    m.params.w2 = tensor_from(p.at("w2"));
    m.params.b2 = tensor_from(p.at("b2"));
    const json &adam = j.at("adam");
    m.params.step = adam.at("step").get<std::uint64_t>();
    m.params.m = tensors_from(adam.at("m"));
    m.params.v = tensors_from(adam.at("v"));

    const HeadParams &hp = m.params;
    const bool shapes_ok =
        hp.w1.rows == hp.b1.rows && hp.b1.cols == 1 && hp.w2.cols == hp.w1.rows &&
        hp.w2.rows == hp.b2.rows && hp.b2.cols == 1 &&
        hp.w2.rows == m.labels.size() && hp.w1.cols == m.layout.size();
    if (!shapes_ok) throw Error(Errc::kMalformedModel, "inconsistent parameter shapes");
    for (auto *moments : {&hp.m, &hp.v}) {
      if (moments->empty()) continue;
      if (moments->size() != 4) throw Error(Errc::kMalformedModel, "bad Adam state");
      const auto ts = hp.tensors();
      for (std::size_t k = 0; k < 4; ++k) {
        if ((*moments)[k].rows != ts[k]->rows || (*moments)[k].cols != ts[k]->cols) {
          throw Error(Errc::kMalformedModel, "Adam state shape mismatch");
        }
      }
    }

    for (const json &r : j.at("history")) {
      m.history.push_back({r.at("epoch").get<std::size_t>(),
                           r.at("train_loss").get<double>(),
                           r.at("val_macro_f1").get<double>(),
                           r.at("steps").get<std::uint64_t>()});
    }
    m.best_epoch = j.at("best_epoch").get<std::size_t>();
    if (j.contains("metadata")) {
      m.metadata = j.at("metadata").get<std::map<std::string, std::string>>();
    }
    return m;
  } catch (const json::exception &e) {
    throw Error(Errc::kMalformedModel, e.what());
  }
}

void save_model(const std::string &path, const TrainedModel &model) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Error(Errc::kIo, "cannot write " + tmp);
    out << serialize_model(model);
    if (!out) throw Error(Errc::kIo, "write failed for " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(Errc::kIo, "cannot rename " + tmp + ": " + ec.message());
}

TrainedModel load_model(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kIo, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return deserialize_model(ss.str());
}

}  // namespace hasoc::classifier
