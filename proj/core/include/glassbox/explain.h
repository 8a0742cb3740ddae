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

#ifndef GLASSBOX_EXPLAIN_H_
#define GLASSBOX_EXPLAIN_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "glassbox/binning.h"
#include "glassbox/cart.h"
#include "glassbox/dataset.h"
#include "glassbox/ebm.h"
#include "glassbox/linear.h"

namespace glassbox {

// 1 / (1 + exp(-sum of logits)). NonFinite for NaN or infinite input.
double LogisticLink(double summed_logits);

enum class ModelKind { kEbm, kTree, kLogistic, kLinear };
std::string_view ToString(ModelKind kind);

struct FeatureImportance {
  std::size_t index = 0;
  std::string feature;
  double score = 0;
};

// One EBM shape function with its training density, aligned bin by bin.
struct ShapeCurve {
  std::size_t index = 0;
  std::string feature;
  FeatureKind kind = FeatureKind::kContinuous;
  std::vector<double> cuts;
  // Categorical features: the category string of each bin.
  std::vector<std::string> bin_labels;
  std::vector<double> scores;
  std::vector<std::size_t> density;
};

struct SplitUsage {
  std::size_t index = 0;
  std::string feature;
  int splits = 0;
  double impurity_decrease = 0;
};

struct GlobalExplanation {
  ModelKind kind = ModelKind::kEbm;
  Task task = Task::kClassification;
  // Every schema feature once, highest score first (ties by feature index).
  // EBM: mean absolute score. Linear models: |standardized coefficient|.
  // Trees: share of the total impurity decrease.
  std::vector<FeatureImportance> importances;
  std::vector<ShapeCurve> shapes;            // EBM
  std::vector<double> coefficients;          // linear models, standardized
  std::vector<SplitUsage> splits;            // trees
};

GlobalExplanation GlobalExplain(const EbmModel& model, const Dataset& train);
GlobalExplanation GlobalExplain(const LinearModel& model, const Dataset& train);
GlobalExplanation GlobalExplain(const DecisionTree& tree, const Dataset& train);

// Per-bin training counts for one feature's bins.
std::vector<std::size_t> DensityCurve(const Dataset& train, std::size_t feature,
                                      const BinMap& bins);

enum class Outcome { kTruePositive, kTrueNegative, kFalsePositive, kFalseNegative };
std::string_view ToString(Outcome outcome);
Outcome ClassifyOutcome(int predicted, int actual);

struct Contribution {
  std::size_t index = 0;
  std::string feature;
  double value = 0;  // the sample's raw feature value
  double logit = 0;
};

struct LocalExplanation {
  std::int64_t sample_index = -1;
  // Schema order; display_order ranks them by |logit|.
  std::vector<Contribution> contributions;
  std::vector<std::size_t> display_order;
  double intercept = 0;
  double summed_logits = 0;
  // Class-1 probability; the class-0 probability is 1 - probability.
  double probability = 0;
  double probability_negative = 0;
  int predicted = 0;
  int actual = 0;
  Outcome status = Outcome::kTrueNegative;
};

LocalExplanation LocalExplain(const EbmModel& model, std::span<const double> sample,
                              int true_label, std::int64_t sample_index = -1,
                              std::size_t top_k = 15);

// Linear-model analogue: contributions are w_j * standardized x_j.
LocalExplanation LocalExplain(const LinearModel& model, std::span<const double> sample,
                              int true_label, std::int64_t sample_index = -1,
                              std::size_t top_k = 15);

struct PathStep {
  int node = 0;
  int feature = -1;  // -1 at the leaf
  double threshold = 0;
  double value = 0;
  bool went_left = false;
};

struct TreeTrace {
  std::int64_t sample_index = -1;
  std::vector<PathStep> steps;
  double prediction = 0;
  int predicted = 0;
  int actual = 0;
  Outcome status = Outcome::kTrueNegative;
};

TreeTrace TraceDecision(const DecisionTree& tree, std::span<const double> sample,
                        int true_label, std::int64_t sample_index = -1);

// Index of the first sample in each outcome class, in the order
// TP, TN, FP, FN. Absent outcomes stay empty.
std::array<std::optional<std::size_t>, 4> FirstOfEachOutcome(
    std::span<const double> probabilities, std::span<const double> labels);

}  // namespace glassbox

#endif  // GLASSBOX_EXPLAIN_H_
