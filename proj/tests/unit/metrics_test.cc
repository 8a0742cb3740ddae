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

#include <cmath>

#include <gtest/gtest.h>

#include "glassbox/numeric.h"
#include "support/expect_error.h"
#include "support/oracles.h"

namespace glassbox {
namespace {

TEST(ClassificationMetricsTest, BalancedExample) {
  const ConfusionCounts c{9, 1, 9, 1};
  const auto m = ComputeClassificationMetrics(c);
  EXPECT_DOUBLE_EQ(m.accuracy, 0.9);
  EXPECT_DOUBLE_EQ(m.precision, 0.9);
  EXPECT_DOUBLE_EQ(m.recall, 0.9);
  EXPECT_DOUBLE_EQ(m.f1, 0.9);
  EXPECT_FALSE(m.precision_degenerate || m.recall_degenerate || m.f1_degenerate);
}

TEST(ClassificationMetricsTest, FlagsZeroDenominators) {
  const auto no_positive_calls = ComputeClassificationMetrics({0, 0, 5, 3});
  EXPECT_TRUE(no_positive_calls.precision_degenerate);
  EXPECT_EQ(no_positive_calls.precision, 0.0);
  EXPECT_FALSE(no_positive_calls.recall_degenerate);
  EXPECT_EQ(no_positive_calls.f1, 0.0);

  const auto no_positives = ComputeClassificationMetrics({0, 0, 5, 0});
  EXPECT_TRUE(no_positives.precision_degenerate);
  EXPECT_TRUE(no_positives.recall_degenerate);
  EXPECT_TRUE(no_positives.f1_degenerate);
  EXPECT_DOUBLE_EQ(no_positives.accuracy, 1.0);

  EXPECT_GLASSBOX_ERROR(ComputeClassificationMetrics({0, 0, 0, 0}), ErrorCode::kEmptyCounts);
}

TEST(ClassificationMetricsTest, ScalingCountsChangesNothing) {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const ConfusionCounts c{static_cast<std::int64_t>(rng.UniformIndex(50)),
                            static_cast<std::int64_t>(rng.UniformIndex(50)),
                            static_cast<std::int64_t>(rng.UniformIndex(50)),
                            static_cast<std::int64_t>(1 + rng.UniformIndex(50))};
    const auto k = static_cast<std::int64_t>(2 + rng.UniformIndex(9));
    const auto a = ComputeClassificationMetrics(c);
    const auto b = ComputeClassificationMetrics({c.tp * k, c.fp * k, c.tn * k, c.fn * k});
    ASSERT_DOUBLE_EQ(a.accuracy, b.accuracy);
    ASSERT_DOUBLE_EQ(a.precision, b.precision);
    ASSERT_DOUBLE_EQ(a.recall, b.recall);
    ASSERT_DOUBLE_EQ(a.f1, b.f1);
    // F1 equals the harmonic mean of precision and recall when both exist.
    if (a.precision + a.recall > 0) {
      ASSERT_NEAR(a.f1, 2 * a.precision * a.recall / (a.precision + a.recall), 1e-12);
    }
  }
}

TEST(ClassificationMetricsTest, CountsUseTheThreshold) {
  const std::vector<double> s = {0.2, 0.5, 0.7, 0.4};
  const std::vector<double> y = {0, 1, 0, 1};
  EXPECT_EQ(CountOutcomes(s, y), (ConfusionCounts{1, 1, 1, 1}));
  EXPECT_EQ(CountOutcomes(s, y, 0.3), (ConfusionCounts{2, 1, 1, 0}));
}

TEST(RocTest, PerfectRankingHasUnitArea) {
  const std::vector<double> s = {0.1, 0.2, 0.8, 0.9};
  const std::vector<double> y = {0, 0, 1, 1};
  const RocCurve roc = ComputeRoc(s, y);
  EXPECT_DOUBLE_EQ(roc.auc, 1.0);
  EXPECT_EQ(roc.points.front().fpr, 0.0);
  EXPECT_EQ(roc.points.front().tpr, 0.0);
  EXPECT_TRUE(std::isinf(roc.points.front().threshold));
  EXPECT_EQ(roc.points.back().fpr, 1.0);
  EXPECT_EQ(roc.points.back().tpr, 1.0);
}

TEST(RocTest, TiedScoresCountHalf) {
  const std::vector<double> s = {0.5, 0.5, 0.5, 0.5};
  const std::vector<double> y = {0, 1, 0, 1};
  const RocCurve roc = ComputeRoc(s, y);
  EXPECT_DOUBLE_EQ(roc.auc, 0.5);
  EXPECT_EQ(roc.points.size(), 2u);
}

TEST(RocTest, RejectsBadInput) {
  const std::vector<double> s = {0.1, 0.2};
  EXPECT_GLASSBOX_ERROR(ComputeRoc(s, std::vector<double>{1, 1}), ErrorCode::kSingleClassLabels);
  EXPECT_GLASSBOX_ERROR(ComputeRoc(s, std::vector<double>{1}), ErrorCode::kLengthMismatch);
  EXPECT_GLASSBOX_ERROR(ComputeRoc(std::vector<double>{NAN, 0.2}, std::vector<double>{0, 1}),
                        ErrorCode::kNonFinite);
}

TEST(RocTest, AreaMatchesPairwiseCounting) {
  Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 2 + rng.UniformIndex(150);
    const std::size_t levels = 1 + rng.UniformIndex(20);
    std::vector<double> s(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = static_cast<double>(rng.UniformIndex(2));
      s[i] = static_cast<double>(rng.UniformIndex(levels)) / 7.0 + 0.3 * y[i];
    }
    y[0] = 0;
    y[1] = 1;
    const RocCurve roc = ComputeRoc(s, y);
    ASSERT_NEAR(roc.auc, static_cast<double>(oracle::PairwiseAuc(s, y)), 1e-12);
    for (std::size_t k = 1; k < roc.points.size(); ++k) {
      ASSERT_GE(roc.points[k].fpr, roc.points[k - 1].fpr);
      ASSERT_GE(roc.points[k].tpr, roc.points[k - 1].tpr);
      ASSERT_LT(roc.points[k].threshold, roc.points[k - 1].threshold);
    }
    // A strictly increasing transform of the scores keeps the area.
    std::vector<double> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = std::exp(3.0 * s[i]) - 4.0;
    ASSERT_DOUBLE_EQ(ComputeRoc(t, y).auc, roc.auc);
  }
}

TEST(RegressionMetricsTest, KnownValues) {
  const std::vector<double> p = {1, 2, 3, 6};
  const std::vector<double> t = {2, 2, 5, 6};
  const auto m = ComputeRegressionMetrics(p, t);
  EXPECT_DOUBLE_EQ(m.mse, 5.0 / 4.0);
  EXPECT_DOUBLE_EQ(m.rmse, std::sqrt(1.25));
  EXPECT_DOUBLE_EQ(m.mae, 0.75);
  // SST = (2-3.75)^2*2 + (5-3.75)^2 + (6-3.75)^2 = 12.75
  EXPECT_DOUBLE_EQ(m.r2, 1.0 - 5.0 / 12.75);
}

TEST(RegressionMetricsTest, PerfectAndMeanPredictors) {
  const std::vector<double> t = {1, 4, 2, 8};
  const auto perfect = ComputeRegressionMetrics(t, t);
  EXPECT_EQ(perfect.mse, 0.0);
  EXPECT_EQ(perfect.r2, 1.0);
  const std::vector<double> mean(4, 3.75);
  EXPECT_NEAR(ComputeRegressionMetrics(mean, t).r2, 0.0, 1e-15);
  const std::vector<double> worse(4, 20.0);
  EXPECT_LT(ComputeRegressionMetrics(worse, t).r2, 0.0);
}

TEST(RegressionMetricsTest, ConstantTargetsLeaveR2Undefined) {
  const std::vector<double> t = {3, 3, 3};
  const std::vector<double> p = {3, 2, 4};
  const auto m = ComputeRegressionMetrics(p, t);
  EXPECT_TRUE(m.r2_undefined);
  EXPECT_EQ(m.r2, 0.0);
  EXPECT_GLASSBOX_ERROR(ComputeRegressionMetrics({}, {}), ErrorCode::kEmptyInput);
  EXPECT_GLASSBOX_ERROR(ComputeRegressionMetrics(p, std::vector<double>{1}),
                        ErrorCode::kLengthMismatch);
}

TEST(RegressionMetricsTest, ErrorIdentitiesHold) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.UniformIndex(60);
    std::vector<double> p(n), t(n);
    for (std::size_t i = 0; i < n; ++i) {
      t[i] = rng.UniformReal() * 10;
      p[i] = t[i] + rng.Normal();
    }
    const auto m = ComputeRegressionMetrics(p, t);
    ASSERT_DOUBLE_EQ(m.rmse * m.rmse, m.mse);
    ASSERT_LE(m.mae, m.rmse + 1e-12);
  }
}

}  // namespace
}  // namespace glassbox
