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

#include "json_io.h"

#include <fstream>
#include <sstream>

#include "glassbox/error.h"

namespace glassbox {

using nlohmann::json;

json SchemaToJson(const std::vector<FeatureSpec>& schema) {
  json out = json::array();
  for (const auto& f : schema) {
    json item = {{"name", f.name}, {"kind", ToString(f.kind)}};
    if (!f.unit_note.empty()) item["unit"] = f.unit_note;
    if (f.kind == FeatureKind::kCategorical) item["categories"] = f.categories;
    out.push_back(std::move(item));
  }
  return out;
}

std::vector<FeatureSpec> SchemaFromJson(const json& j) {
  std::vector<FeatureSpec> schema;
  for (const auto& item : j) {
    FeatureSpec f;
    f.name = item.at("name").get<std::string>();
    f.kind = ParseFeatureKind(item.at("kind").get<std::string>());
    f.unit_note = item.value("unit", "");
    if (item.contains("categories")) {
      f.categories = item.at("categories").get<std::vector<std::string>>();
    }
    schema.push_back(std::move(f));
  }
  return schema;
}

json EbmHyperToJson(const EbmHyper& h) {
  return {{"learning_rate", h.learning_rate},
          {"max_rounds", h.max_rounds},
          {"patience", h.patience},
          {"validation_fraction", h.validation_fraction},
          {"max_bins", h.max_bins},
          {"max_leaves", h.max_leaves},
          {"min_samples_leaf", h.min_samples_leaf},
          {"interactions", h.interactions},
          {"seed", h.seed}};
}

EbmHyper EbmHyperFromJson(const json& j) {
  EbmHyper h;
  h.learning_rate = j.at("learning_rate").get<double>();
  h.max_rounds = j.at("max_rounds").get<int>();
  h.patience = j.at("patience").get<int>();
  h.validation_fraction = j.at("validation_fraction").get<double>();
  h.max_bins = j.at("max_bins").get<int>();
  h.max_leaves = j.at("max_leaves").get<int>();
  h.min_samples_leaf = j.at("min_samples_leaf").get<int>();
  h.interactions = j.at("interactions").get<int>();
  h.seed = j.at("seed").get<std::uint64_t>();
  return h;
}

json ToJson(const GlobalExplanation& g) {
  json out;
  out["model"] = ToString(g.kind);
  out["task"] = ToString(g.task);
  json importances = json::array();
  for (const auto& fi : g.importances) {
    importances.push_back({{"feature", fi.feature}, {"index", fi.index}, {"score", fi.score}});
  }
  out["importance"] = std::move(importances);
  out["importance_measure"] = g.kind == ModelKind::kEbm    ? "mean_absolute_score"
                              : g.kind == ModelKind::kTree ? "impurity_decrease_share"
                                                           : "abs_standardized_coefficient";
  if (!g.shapes.empty()) {
    json shapes = json::array();
    for (const auto& s : g.shapes) {
      json item = {{"feature", s.feature},
                   {"index", s.index},
                   {"kind", ToString(s.kind)},
                   {"cuts", s.cuts},
                   {"scores", s.scores},
                   {"density", s.density}};
      if (!s.bin_labels.empty()) item["bin_labels"] = s.bin_labels;
      shapes.push_back(std::move(item));
    }
    out["shapes"] = std::move(shapes);
  }
  if (!g.coefficients.empty()) out["standardized_coefficients"] = g.coefficients;
  if (!g.splits.empty()) {
    json splits = json::array();
    for (const auto& s : g.splits) {
      splits.push_back({{"feature", s.feature},
                        {"index", s.index},
                        {"splits", s.splits},
                        {"impurity_decrease", s.impurity_decrease}});
    }
    out["split_usage"] = std::move(splits);
  }
  return out;
}

json ToJson(const LocalExplanation& l) {
  json contributions = json::array();
  for (std::size_t k : l.display_order) {
    const auto& c = l.contributions[k];
    contributions.push_back(
        {{"feature", c.feature}, {"index", c.index}, {"value", c.value}, {"logit", c.logit}});
  }
  return {{"sample_index", l.sample_index},
          {"status", ToString(l.status)},
          {"predicted", l.predicted},
          {"actual", l.actual},
          {"intercept", l.intercept},
          {"summed_logits", l.summed_logits},
          {"class_probability",
           {{"cybersickness", l.probability}, {"no_cybersickness", l.probability_negative}}},
          {"contributions", std::move(contributions)},
          {"all_logits", [&] {
             std::vector<double> v;
             for (const auto& c : l.contributions) v.push_back(c.logit);
             return v;
           }()}};
}

json ToJson(const TreeTrace& t, const DecisionTree& tree) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    if (s.feature < 0) {
      steps.push_back({{"node", s.node}, {"leaf", true}});
    } else {
      steps.push_back({{"node", s.node},
                       {"feature", tree.schema[static_cast<std::size_t>(s.feature)].name},
                       {"threshold", s.threshold},
                       {"value", s.value},
                       {"branch", s.went_left ? "<=" : ">"}});
    }
  }
  json out = {{"sample_index", t.sample_index}, {"path", std::move(steps)},
              {"prediction", t.prediction}};
  if (tree.task == Task::kClassification) {
    out["status"] = ToString(t.status);
    out["predicted"] = t.predicted;
    out["actual"] = t.actual;
  }
  return out;
}

json ToJson(const ClassificationMetrics& m, const ConfusionCounts& c) {
  return {{"accuracy", m.accuracy},
          {"precision", m.precision},
          {"recall", m.recall},
          {"f1", m.f1},
          {"degenerate",
           {{"precision", m.precision_degenerate},
            {"recall", m.recall_degenerate},
            {"f1", m.f1_degenerate}}},
          {"confusion", {{"tp", c.tp}, {"fp", c.fp}, {"tn", c.tn}, {"fn", c.fn}}}};
}

json ToJson(const RegressionMetrics& m) {
  json out = {{"mse", m.mse}, {"rmse", m.rmse}, {"mae", m.mae}, {"r2_undefined", m.r2_undefined}};
  out["r2"] = m.r2_undefined ? json(nullptr) : json(m.r2);
  return out;
}

std::string Dump(const json& j) { return j.dump(2) + "\n"; }

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "failed writing '" + path + "'");
}

}  // namespace glassbox
