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

#include "glassbox/metrics.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "glassbox/error.h"

namespace glassbox {

ConfusionCounts CountOutcomes(std::span<const double> scores, std::span<const double> labels,
                              double threshold) {
  if (scores.size() != labels.size()) {
    throw Error(ErrorCode::kLengthMismatch, "scores and labels differ in length");
  }
  ConfusionCounts c;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    const bool predicted = scores[i] >= threshold;
    const bool actual = labels[i] != 0.0;
    if (predicted && actual) ++c.tp;
    else if (predicted) ++c.fp;
    else if (actual) ++c.fn;
    else ++c.tn;
  }
  return c;
}

ClassificationMetrics ComputeClassificationMetrics(const ConfusionCounts& c) {
  if (c.tp < 0 || c.fp < 0 || c.tn < 0 || c.fn < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative confusion count");
  }
  if (c.total() == 0) throw Error(ErrorCode::kEmptyCounts, "no outcomes counted");
  ClassificationMetrics m;
  m.accuracy = static_cast<double>(c.tp + c.tn) / static_cast<double>(c.total());
  if (c.tp + c.fp > 0) {
    m.precision = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fp);
  } else {
    m.precision_degenerate = true;
  }
  if (c.tp + c.fn > 0) {
    m.recall = static_cast<double>(c.tp) / static_cast<double>(c.tp + c.fn);
  } else {
    m.recall_degenerate = true;
  }
  // 2PR/(P+R) written in counts, so scaled counts give identical results.
  if (2 * c.tp + c.fp + c.fn > 0) {
    m.f1 = static_cast<double>(2 * c.tp) / static_cast<double>(2 * c.tp + c.fp + c.fn);
  } else {
    m.f1_degenerate = true;
  }
  return m;
}

RocCurve ComputeRoc(std::span<const double> scores, std::span<const double> labels) {
  if (scores.size() != labels.size()) {
    throw Error(ErrorCode::kLengthMismatch, "scores and labels differ in length");
  }
  std::int64_t positives = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (!std::isfinite(scores[i])) throw Error(ErrorCode::kNonFinite, "score is not finite");
    if (labels[i] != 0.0) ++positives;
  }
  const std::int64_t negatives = static_cast<std::int64_t>(scores.size()) - positives;
  if (positives == 0 || negatives == 0) {
    throw Error(ErrorCode::kSingleClassLabels, "ROC needs both classes");
  }

  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

  RocCurve roc;
  roc.points.push_back({0.0, 0.0, std::numeric_limits<double>::infinity()});
  const double p = static_cast<double>(positives);
  const double q = static_cast<double>(negatives);
  std::int64_t tp = 0, fp = 0;
  double area2 = 0;  // twice the area, in units of positives * negatives
  std::size_t k = 0;
  while (k < order.size()) {
    const double s = scores[order[k]];
    const std::int64_t tp0 = tp, fp0 = fp;
    while (k < order.size() && scores[order[k]] == s) {
      if (labels[order[k]] != 0.0) ++tp;
      else ++fp;
      ++k;
    }
    area2 += static_cast<double>(fp - fp0) * static_cast<double>(tp + tp0);
    roc.points.push_back({static_cast<double>(fp) / q, static_cast<double>(tp) / p, s});
  }
  roc.auc = area2 / (2.0 * p * q);
  return roc;
}

RegressionMetrics ComputeRegressionMetrics(std::span<const double> predictions,
                                           std::span<const double> targets) {
  if (predictions.size() != targets.size()) {
    throw Error(ErrorCode::kLengthMismatch, "predictions and targets differ in length");
  }
  if (targets.empty()) throw Error(ErrorCode::kEmptyInput, "no predictions");
  const double n = static_cast<double>(targets.size());
  double mean = 0;
  for (double t : targets) mean += t;
  mean /= n;
  double sse = 0, sae = 0, sst = 0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const double r = targets[i] - predictions[i];
    sse += r * r;
    sae += std::abs(r);
    sst += (targets[i] - mean) * (targets[i] - mean);
  }
  RegressionMetrics m;
  m.mse = sse / n;
  m.rmse = std::sqrt(m.mse);
  m.mae = sae / n;
  if (sst > 0) {
    m.r2 = 1.0 - sse / sst;
  } else {
    m.r2_undefined = true;
  }
  return m;
}

}  // namespace glassbox
