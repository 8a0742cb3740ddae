/*
 * Copyright 2026 The Glassbox Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "glassbox/model_io.h"

#include <fstream>
#include <sstream>

#include "glassbox/error.h"
#include "json_io.h"

namespace glassbox {
namespace {

using nlohmann::json;

json EbmToJson(const EbmModel& m) {
  json j;
  j["model"] = "ebm";
  j["task"] = ToString(m.task);
  j["intercept"] = m.intercept;
  j["schema"] = SchemaToJson(m.schema);
  j["hyper"] = EbmHyperToJson(m.hyper);
  j["best_epoch"] = m.best_epoch;
  json bins = json::array();
  for (const auto& b : m.bins) {
    bins.push_back({{"feature", b.feature},
                    {"kind", ToString(b.kind)},
                    {"cuts", b.cuts},
                    {"categories", b.categories}});
  }
  j["bins"] = std::move(bins);
  json shapes = json::array();
  for (const auto& s : m.shapes) shapes.push_back({{"feature", s.feature}, {"scores", s.scores}});
  j["shapes"] = std::move(shapes);
  json log = json::array();
  for (const auto& e : m.log) log.push_back({e.epoch, e.train_loss, e.validation_loss});
  j["training_log"] = std::move(log);
  return j;
}

EbmModel EbmFromJson(const json& j) {
  EbmModel m;
  m.task = ParseTask(j.at("task").get<std::string>());
  m.intercept = j.at("intercept").get<double>();
  m.schema = SchemaFromJson(j.at("schema"));
  m.hyper = EbmHyperFromJson(j.at("hyper"));
  m.best_epoch = j.at("best_epoch").get<int>();
  for (const auto& b : j.at("bins")) {
    BinMap map;
    map.feature = b.at("feature").get<std::size_t>();
    map.kind = ParseFeatureKind(b.at("kind").get<std::string>());
    map.cuts = b.at("cuts").get<std::vector<double>>();
    map.categories = b.at("categories").get<std::vector<double>>();
    m.bins.push_back(std::move(map));
  }
  for (const auto& s : j.at("shapes")) {
    m.shapes.push_back({s.at("feature").get<std::size_t>(),
                        s.at("scores").get<std::vector<double>>()});
  }
  for (const auto& e : j.at("training_log")) {
    m.log.push_back({e.at(0).get<int>(), e.at(1).get<double>(), e.at(2).get<double>()});
  }
  if (m.bins.size() != m.schema.size() || m.shapes.size() != m.schema.size()) {
    throw Error(ErrorCode::kCorruptFile, "EBM needs one bin map and one shape per feature");
  }
  for (std::size_t f = 0; f < m.shapes.size(); ++f) {
    if (m.shapes[f].scores.size() != m.bins[f].num_bins()) {
      throw Error(ErrorCode::kCorruptFile, "shape and bin counts disagree");
    }
  }
  return m;
}

json TreeToJson(const DecisionTree& t) {
  json j;
  j["model"] = "dt";
  j["task"] = ToString(t.task);
  j["max_depth"] = t.max_depth;
  j["schema"] = SchemaToJson(t.schema);
  json nodes = json::array();
  for (const auto& n : t.nodes) {
    nodes.push_back({{"feature", n.feature},
                     {"threshold", n.threshold},
                     {"left", n.left},
                     {"right", n.right},
                     {"depth", n.depth},
                     {"samples", n.samples},
                     {"impurity", n.impurity},
                     {"class_counts", n.class_counts},
                     {"entropy", n.entropy},
                     {"information_gain", n.information_gain},
                     {"impurity_decrease", n.impurity_decrease},
                     {"probabilities", n.probabilities},
                     {"value", n.value}});
  }
  j["nodes"] = std::move(nodes);
  return j;
}

DecisionTree TreeFromJson(const json& j) {
  DecisionTree t;
  t.task = ParseTask(j.at("task").get<std::string>());
  t.max_depth = j.at("max_depth").get<int>();
  t.schema = SchemaFromJson(j.at("schema"));
  for (const auto& n : j.at("nodes")) {
    TreeNode node;
    node.feature = n.at("feature").get<int>();
    node.threshold = n.at("threshold").get<double>();
    node.left = n.at("left").get<int>();
    node.right = n.at("right").get<int>();
    node.depth = n.at("depth").get<int>();
    node.samples = n.at("samples").get<std::int64_t>();
    node.impurity = n.at("impurity").get<double>();
    node.class_counts = n.at("class_counts").get<std::vector<std::int64_t>>();
    node.entropy = n.at("entropy").get<double>();
    node.information_gain = n.at("information_gain").get<double>();
    node.impurity_decrease = n.at("impurity_decrease").get<double>();
    node.probabilities = n.at("probabilities").get<std::vector<double>>();
    node.value = n.at("value").get<double>();
    t.nodes.push_back(std::move(node));
  }
  const int count = static_cast<int>(t.nodes.size());
  if (count == 0) throw Error(ErrorCode::kCorruptFile, "tree has no nodes");
  for (const auto& node : t.nodes) {
    const bool internal = node.left >= 0;
    if (internal && (node.right < 0 || node.left >= count || node.right >= count ||
                     node.feature < 0 ||
                     node.feature >= static_cast<int>(t.schema.size()))) {
      throw Error(ErrorCode::kCorruptFile, "tree node references are out of range");
    }
  }
  return t;
}

json LinearToJson(const LinearModel& m) {
  json j;
  j["model"] = m.task == LinearTask::kLogistic ? "lr" : "lir";
  j["schema"] = SchemaToJson(m.schema);
  j["weights"] = m.weights;
  j["bias"] = m.bias;
  j["standardized_weights"] = m.standardized_weights;
  j["l2"] = m.l2;
  j["standardizer"] = {{"means", m.standardizer.means},
                       {"scales", m.standardizer.scales},
                       {"active", m.standardizer.active}};
  j["loss_history"] = m.loss_history;
  j["iterations"] = m.iterations;
  return j;
}

LinearModel LinearFromJson(const json& j, LinearTask task) {
  LinearModel m;
  m.task = task;
  m.schema = SchemaFromJson(j.at("schema"));
  m.weights = j.at("weights").get<std::vector<double>>();
  m.bias = j.at("bias").get<double>();
  m.standardized_weights = j.at("standardized_weights").get<std::vector<double>>();
  m.l2 = j.at("l2").get<double>();
  const auto& s = j.at("standardizer");
  m.standardizer.means = s.at("means").get<std::vector<double>>();
  m.standardizer.scales = s.at("scales").get<std::vector<double>>();
  m.standardizer.active = s.at("active").get<std::vector<bool>>();
  m.loss_history = j.at("loss_history").get<std::vector<double>>();
  m.iterations = j.at("iterations").get<int>();
  const std::size_t d = m.schema.size();
  if (m.weights.size() != d || m.standardized_weights.size() != d ||
      m.standardizer.means.size() != d || m.standardizer.scales.size() != d ||
      m.standardizer.active.size() != d) {
    throw Error(ErrorCode::kCorruptFile, "linear model arrays disagree with the schema");
  }
  return m;
}

}  // namespace

std::string SerializeModel(const AnyModel& model) {
  json j = std::visit(
      [](const auto& m) -> json {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, EbmModel>) return EbmToJson(m);
        else if constexpr (std::is_same_v<T, DecisionTree>) return TreeToJson(m);
        else return LinearToJson(m);
      },
      model);
  j["format"] = "glassbox-model";
  j["format_version"] = kModelFormatVersion;
  return j.dump(1) + "\n";
}

AnyModel ParseModel(std::string_view text) {
  try {
    const json j = json::parse(text);
    if (j.value("format", "") != "glassbox-model") {
      throw Error(ErrorCode::kCorruptFile, "not a glassbox model file");
    }
    if (j.at("format_version").get<int>() != kModelFormatVersion) {
      throw Error(ErrorCode::kCorruptFile,
                  "unsupported model format version " + j.at("format_version").dump());
    }
    const std::string kind = j.at("model").get<std::string>();
    if (kind == "ebm") return EbmFromJson(j);
    if (kind == "dt") return TreeFromJson(j);
    if (kind == "lr") return LinearFromJson(j, LinearTask::kLogistic);
    if (kind == "lir") return LinearFromJson(j, LinearTask::kLinear);
    throw Error(ErrorCode::kCorruptFile, "unknown model kind '" + kind + "'");
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kCorruptFile, e.what());
  }
}

void SaveModel(const std::string& path, const AnyModel& model) {
  WriteTextFile(path, SerializeModel(model));
}

AnyModel LoadModel(const std::string& path) {
  try {
    return ParseModel(ReadTextFile(path));
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.detail());
  }
}

}  // namespace glassbox
