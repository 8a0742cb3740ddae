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

#include "glassbox/explain.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "glassbox/error.h"
#include "glassbox/numeric.h"

namespace glassbox {
namespace {

void SortImportances(std::vector<FeatureImportance>& items) {
  std::stable_sort(items.begin(), items.end(),
                   [](const FeatureImportance& a, const FeatureImportance& b) {
                     return a.score > b.score;
                   });
}

std::vector<std::size_t> RankByMagnitude(const std::vector<Contribution>& items,
                                         std::size_t top_k) {
  std::vector<std::size_t> order(items.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::abs(items[a].logit) > std::abs(items[b].logit);
  });
  if (order.size() > top_k) order.resize(top_k);
  return order;
}

int CheckedLabel(int label) {
  if (label != 0 && label != 1) {
    throw Error(ErrorCode::kInvalidLabel, "true label must be 0 or 1");
  }
  return label;
}

}  // namespace

double LogisticLink(double summed_logits) {
  if (!std::isfinite(summed_logits)) {
    throw Error(ErrorCode::kNonFinite, "summed logits are not finite");
  }
  return Logistic(summed_logits);
}

std::string_view ToString(ModelKind kind) {
  switch (kind) {
    case ModelKind::kEbm: return "ebm";
    case ModelKind::kTree: return "dt";
    case ModelKind::kLogistic: return "lr";
    case ModelKind::kLinear: return "lir";
  }
  return "ebm";
}

std::string_view ToString(Outcome outcome) {
  switch (outcome) {
    case Outcome::kTruePositive: return "TP";
    case Outcome::kTrueNegative: return "TN";
    case Outcome::kFalsePositive: return "FP";
    case Outcome::kFalseNegative: return "FN";
  }
  return "TN";
}

Outcome ClassifyOutcome(int predicted, int actual) {
  if (predicted == 1) return actual == 1 ? Outcome::kTruePositive : Outcome::kFalsePositive;
  return actual == 1 ? Outcome::kFalseNegative : Outcome::kTrueNegative;
}

std::vector<std::size_t> DensityCurve(const Dataset& train, std::size_t feature,
                                      const BinMap& bins) {
  if (feature >= train.num_features() || bins.feature != feature) {
    throw Error(ErrorCode::kSchemaMismatch,
                "feature " + std::to_string(feature) + " does not match the bin map");
  }
  return BinCounts(bins, train.Column(feature));
}

GlobalExplanation GlobalExplain(const EbmModel& model, const Dataset& train) {
  RequireSameSchema(model.schema, train.schema());
  if (train.empty()) throw Error(ErrorCode::kEmptyDataset, "no rows to explain");
  GlobalExplanation out;
  out.kind = ModelKind::kEbm;
  out.task = model.task;
  const double n = static_cast<double>(train.num_rows());
  for (std::size_t j = 0; j < model.shapes.size(); ++j) {
    const auto& scores = model.shapes[j].scores;
    double total = 0;
    for (std::size_t i = 0; i < train.num_rows(); ++i) {
      total += std::abs(scores[model.bins[j].BinOf(train.value(i, j))]);
    }
    out.importances.push_back({j, model.schema[j].name, total / n});

    ShapeCurve curve;
    curve.index = j;
    curve.feature = model.schema[j].name;
    curve.kind = model.schema[j].kind;
    curve.cuts = model.bins[j].cuts;
    curve.scores = scores;
    curve.density = DensityCurve(train, j, model.bins[j]);
    if (curve.kind == FeatureKind::kCategorical) {
      const auto& names = model.schema[j].categories;
      for (double code : model.bins[j].categories) {
        const auto c = static_cast<std::size_t>(code);
        curve.bin_labels.push_back(c < names.size() ? names[c] : FormatDouble(code));
      }
    }
    out.shapes.push_back(std::move(curve));
  }
  SortImportances(out.importances);
  return out;
}

GlobalExplanation GlobalExplain(const LinearModel& model, const Dataset& train) {
  RequireSameSchema(model.schema, train.schema());
  GlobalExplanation out;
  out.kind = model.task == LinearTask::kLogistic ? ModelKind::kLogistic : ModelKind::kLinear;
  out.task = model.task == LinearTask::kLogistic ? Task::kClassification : Task::kRegression;
  out.coefficients = model.standardized_weights;
  for (std::size_t j = 0; j < model.schema.size(); ++j) {
    out.importances.push_back({j, model.schema[j].name, std::abs(model.standardized_weights[j])});
  }
  SortImportances(out.importances);
  return out;
}

GlobalExplanation GlobalExplain(const DecisionTree& tree, const Dataset& train) {
  RequireSameSchema(tree.schema, train.schema());
  GlobalExplanation out;
  out.kind = ModelKind::kTree;
  out.task = tree.task;
  const std::size_t d = tree.schema.size();
  for (std::size_t j = 0; j < d; ++j) out.splits.push_back({j, tree.schema[j].name, 0, 0.0});
  double total = 0;
  for (const auto& node : tree.nodes) {
    if (node.is_leaf()) continue;
    auto& usage = out.splits[static_cast<std::size_t>(node.feature)];
    ++usage.splits;
    usage.impurity_decrease += node.impurity_decrease;
    total += node.impurity_decrease;
  }
  for (std::size_t j = 0; j < d; ++j) {
    const double share = total > 0 ? out.splits[j].impurity_decrease / total : 0.0;
    out.importances.push_back({j, tree.schema[j].name, share});
  }
  SortImportances(out.importances);
  return out;
}

LocalExplanation LocalExplain(const EbmModel& model, std::span<const double> sample,
                              int true_label, std::int64_t sample_index, std::size_t top_k) {
  if (model.task != Task::kClassification) {
    throw Error(ErrorCode::kInvalidArgument, "local explanations need a classifier");
  }
  const std::vector<double> terms = model.Terms(sample);
  LocalExplanation out;
  out.sample_index = sample_index;
  out.intercept = model.intercept;
  for (std::size_t j = 0; j < terms.size(); ++j) {
    out.contributions.push_back({j, model.schema[j].name, sample[j], terms[j]});
  }
  out.summed_logits = model.Score(terms);
  out.probability = LogisticLink(out.summed_logits);
  out.probability_negative = 1.0 - out.probability;
  out.predicted = out.probability >= 0.5 ? 1 : 0;
  out.actual = CheckedLabel(true_label);
  out.status = ClassifyOutcome(out.predicted, out.actual);
  out.display_order = RankByMagnitude(out.contributions, top_k);
  return out;
}

LocalExplanation LocalExplain(const LinearModel& model, std::span<const double> sample,
                              int true_label, std::int64_t sample_index, std::size_t top_k) {
  if (model.task != LinearTask::kLogistic) {
    throw Error(ErrorCode::kInvalidArgument, "local explanations need a classifier");
  }
  if (sample.size() != model.weights.size()) {
    throw Error(ErrorCode::kArityMismatch, "sample arity does not match the model");
  }
  const auto x = model.standardizer.Apply(sample);
  LocalExplanation out;
  out.sample_index = sample_index;
  out.intercept = model.bias;
  double z = model.bias;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double term = model.weights[j] * x[j];
    out.contributions.push_back({j, model.schema[j].name, sample[j], term});
    z += term;
  }
  out.summed_logits = z;
  out.probability = LogisticLink(z);
  out.probability_negative = 1.0 - out.probability;
  out.predicted = out.probability >= 0.5 ? 1 : 0;
  out.actual = CheckedLabel(true_label);
  out.status = ClassifyOutcome(out.predicted, out.actual);
  out.display_order = RankByMagnitude(out.contributions, top_k);
  return out;
}

TreeTrace TraceDecision(const DecisionTree& tree, std::span<const double> sample,
                        int true_label, std::int64_t sample_index) {
  TreeTrace trace;
  trace.sample_index = sample_index;
  const auto path = tree.DecisionPath(sample);
  for (std::size_t k = 0; k < path.size(); ++k) {
    const TreeNode& node = tree.nodes[static_cast<std::size_t>(path[k])];
    PathStep step;
    step.node = path[k];
    if (!node.is_leaf()) {
      step.feature = node.feature;
      step.threshold = node.threshold;
      step.value = sample[static_cast<std::size_t>(node.feature)];
      step.went_left = path[k + 1] == node.left;
    }
    trace.steps.push_back(step);
  }
  trace.prediction = tree.nodes[static_cast<std::size_t>(path.back())].value;
  if (tree.task == Task::kClassification) {
    trace.predicted = tree.PredictClass(sample);
    trace.actual = CheckedLabel(true_label);
    trace.status = ClassifyOutcome(trace.predicted, trace.actual);
  }
  return trace;
}

std::array<std::optional<std::size_t>, 4> FirstOfEachOutcome(
    std::span<const double> probabilities, std::span<const double> labels) {
  if (probabilities.size() != labels.size()) {
    throw Error(ErrorCode::kLengthMismatch, "probabilities and labels differ in length");
  }
  std::array<std::optional<std::size_t>, 4> first;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    const Outcome o = ClassifyOutcome(probabilities[i] >= 0.5 ? 1 : 0, labels[i] != 0.0 ? 1 : 0);
    auto& slot = first[static_cast<std::size_t>(o)];
    if (!slot) slot = i;
  }
  return first;
}

}  // namespace glassbox
