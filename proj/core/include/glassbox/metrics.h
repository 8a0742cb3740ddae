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

#ifndef GLASSBOX_METRICS_H_
#define GLASSBOX_METRICS_H_

#include <cstdint>
#include <span>
#include <vector>

namespace glassbox {

struct ConfusionCounts {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t tn = 0;
  std::int64_t fn = 0;

  std::int64_t total() const { return tp + fp + tn + fn; }
  friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

// Positive class is label 1; a prediction is positive when score >= threshold.
ConfusionCounts CountOutcomes(std::span<const double> scores, std::span<const double> labels,
                              double threshold = 0.5);

struct ClassificationMetrics {
  double accuracy = 0;
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  // Set when the corresponding denominator was zero and 0 was reported.
  bool precision_degenerate = false;
  bool recall_degenerate = false;
  bool f1_degenerate = false;
};

ClassificationMetrics ComputeClassificationMetrics(const ConfusionCounts& counts);

struct RocPoint {
  double fpr = 0;
  double tpr = 0;
  double threshold = 0;
};

struct RocCurve {
  // From (0, 0) at threshold +inf to (1, 1) at the lowest score.
  std::vector<RocPoint> points;
  double auc = 0;
};

// Sweeps every distinct score as a threshold; tied scores move together.
// AUC is the trapezoidal area under the swept points.
RocCurve ComputeRoc(std::span<const double> scores, std::span<const double> labels);

struct RegressionMetrics {
  double mse = 0;
  double rmse = 0;
  double mae = 0;
  double r2 = 0;
  // Targets are constant, so R^2 is undefined; r2 is reported as 0.
  bool r2_undefined = false;
};

RegressionMetrics ComputeRegressionMetrics(std::span<const double> predictions,
                                           std::span<const double> targets);

}  // namespace glassbox

#endif  // GLASSBOX_METRICS_H_
