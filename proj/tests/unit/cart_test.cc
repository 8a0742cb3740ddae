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

#include "glassbox/cart.h"

#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "glassbox/numeric.h"
#include "support/expect_error.h"
#include "support/fixtures.h"
#include "support/oracles.h"

namespace glassbox {
namespace {

using Counts = std::vector<std::int64_t>;

TEST(ImpurityTest, EntropyOfAThreeToOneSplit) {
  // -0.75 log2 0.75 - 0.25 log2 0.25, evaluated to 20 digits elsewhere.
  EXPECT_NEAR(Entropy(std::vector<double>{0.75, 0.25}), 0.8112781244591328639, 1e-15);
  EXPECT_NEAR(EntropyOfCounts(Counts{3, 1}), 0.8112781244591328639, 1e-15);
  EXPECT_DOUBLE_EQ(Entropy(std::vector<double>{1.0, 0.0}), 0.0);
  EXPECT_DOUBLE_EQ(Entropy(std::vector<double>{0.5, 0.5}), 1.0);
}

TEST(ImpurityTest, EntropyRejectsInvalidDistributions) {
  EXPECT_GLASSBOX_ERROR(Entropy(std::vector<double>{0.5, 0.6}), ErrorCode::kInvalidDistribution);
  EXPECT_GLASSBOX_ERROR(Entropy(std::vector<double>{1.5, -0.5}),
                        ErrorCode::kInvalidDistribution);
  EXPECT_GLASSBOX_ERROR(Entropy(std::vector<double>{}), ErrorCode::kInvalidDistribution);
}

TEST(ImpurityTest, InformationGainExample) {
  const std::vector<Counts> children = {{6, 1}, {2, 3}};
  EXPECT_NEAR(InformationGain(Counts{8, 4}, children), 0.16859063219201994, 1e-15);
}

TEST(ImpurityTest, InformationGainRejectsNonPartitions) {
  const std::vector<Counts> short_children = {{6, 1}, {1, 3}};
  EXPECT_GLASSBOX_ERROR(InformationGain(Counts{8, 4}, short_children),
                        ErrorCode::kPartitionMismatch);
  const std::vector<Counts> ragged = {{6, 1, 0}, {2, 3}};
  EXPECT_GLASSBOX_ERROR(InformationGain(Counts{8, 4}, ragged), ErrorCode::kPartitionMismatch);
}

TEST(ImpurityTest, GiniOfTheFigureRoot) {
  EXPECT_NEAR(Gini(Counts{107, 96}), 0.49853187410517120, 1e-15);
  EXPECT_DOUBLE_EQ(Gini(Counts{5, 0}), 0.0);
  EXPECT_GLASSBOX_ERROR(Gini(Counts{0, 0}), ErrorCode::kEmptyNode);
  EXPECT_GLASSBOX_ERROR(Gini(Counts{-1, 2}), ErrorCode::kInvalidDistribution);
}

TEST(ImpurityTest, AgreesWithHighPrecisionOracle) {
  Rng rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t classes = 2 + rng.UniformIndex(3);
    Counts parent(classes, 0), left(classes, 0), right(classes, 0);
    for (std::size_t c = 0; c < classes; ++c) {
      left[c] = static_cast<std::int64_t>(rng.UniformIndex(500));
      right[c] = static_cast<std::int64_t>(rng.UniformIndex(500));
      parent[c] = left[c] + right[c];
    }
    if (std::accumulate(left.begin(), left.end(), std::int64_t{0}) == 0 ||
        std::accumulate(right.begin(), right.end(), std::int64_t{0}) == 0) {
      continue;
    }
    const std::vector<Counts> children = {left, right};
    ASSERT_NEAR(EntropyOfCounts(parent), static_cast<double>(oracle::Entropy(parent)), 1e-12);
    ASSERT_NEAR(Gini(parent), static_cast<double>(oracle::Gini(parent)), 1e-12);
    const double gain = InformationGain(parent, children);
    ASSERT_NEAR(gain, static_cast<double>(oracle::InformationGain(parent, children)), 1e-12);
    ASSERT_GE(gain, -1e-12);
  }
}

TEST(TreeTest, SeparatesAThreshold) {
  std::vector<std::vector<double>> rows;
  std::vector<double> labels;
  for (int x = 1; x <= 10; ++x) {
    rows.push_back({static_cast<double>(x)});
    labels.push_back(x > 5 ? 1 : 0);
  }
  const DecisionTree tree = TrainTree(fixtures::MakeDataset(rows, labels), 3, Task::kClassification);
  ASSERT_EQ(tree.nodes.size(), 3u);
  EXPECT_EQ(tree.nodes[0].feature, 0);
  EXPECT_DOUBLE_EQ(tree.nodes[0].threshold, 5.5);
  EXPECT_DOUBLE_EQ(tree.nodes[0].information_gain, 1.0);
  for (int x = 1; x <= 10; ++x) {
    const std::vector<double> s = {static_cast<double>(x)};
    EXPECT_EQ(tree.PredictClass(s), x > 5 ? 1 : 0);
  }
  EXPECT_EQ(tree.Depth(), 1);
}

TEST(TreeTest, ConstantLabelsGiveOneLeaf) {
  const auto ds = fixtures::MakeDataset({{1, 4}, {2, 3}, {3, 9}}, {1, 1, 1});
  const DecisionTree tree = TrainTree(ds, 3, Task::kClassification);
  ASSERT_EQ(tree.nodes.size(), 1u);
  EXPECT_TRUE(tree.nodes[0].is_leaf());
  EXPECT_DOUBLE_EQ(tree.Predict(std::vector<double>{0, 0}), 1.0);
}

TEST(TreeTest, DepthZeroIsASingleLeaf) {
  const auto ds = fixtures::MakeDataset({{1}, {2}, {3}, {4}}, {0, 1, 0, 1});
  const DecisionTree tree = TrainTree(ds, 0, Task::kClassification);
  ASSERT_EQ(tree.nodes.size(), 1u);
  EXPECT_DOUBLE_EQ(tree.Predict(std::vector<double>{2}), 0.5);
  EXPECT_EQ(tree.PredictClass(std::vector<double>{2}), 1);
}

TEST(TreeTest, RejectsBadInput) {
  const auto ds = fixtures::MakeDataset({{1}, {2}}, {0, 1});
  EXPECT_GLASSBOX_ERROR(TrainTree(ds, -1, Task::kClassification), ErrorCode::kInvalidArgument);
  const auto test = fixtures::MakeDataset({{1}, {2}}, {0, 1}, LabelKind::kBinary, Partition::kTest);
  EXPECT_GLASSBOX_ERROR(TrainTree(test, 2, Task::kClassification), ErrorCode::kLeakage);
  const DecisionTree tree = TrainTree(ds, 2, Task::kClassification);
  EXPECT_GLASSBOX_ERROR(tree.Predict(std::vector<double>{1, 2}), ErrorCode::kArityMismatch);
}

// Small integer-valued features produce many tied candidates.
Dataset RandomDataset(Rng& rng, LabelKind kind) {
  const std::size_t n = 2 + rng.UniformIndex(199);
  const std::size_t f = 1 + rng.UniformIndex(4);
  const std::size_t levels = 2 + rng.UniformIndex(12);
  std::vector<std::vector<double>> rows(n, std::vector<double>(f));
  std::vector<double> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& v : rows[i]) v = static_cast<double>(rng.UniformIndex(levels));
    labels[i] = kind == LabelKind::kBinary
                    ? static_cast<double>(rng.UniformReal() < Logistic(rows[i][0] - levels / 2.0))
                    : static_cast<double>(rng.UniformIndex(11));
  }
  return fixtures::MakeDataset(rows, labels, kind);
}

TEST(TreeTest, ClassificationMatchesExhaustiveOracle) {
  Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const Dataset ds = RandomDataset(rng, LabelKind::kBinary);
    const int depth = 1 + static_cast<int>(rng.UniformIndex(4));
    const DecisionTree tree = TrainTree(ds, depth, Task::kClassification);
    const auto problem = oracle::CheckTree(tree, ds);
    ASSERT_FALSE(problem.has_value()) << "trial " << trial << ": " << *problem;
  }
}

TEST(TreeTest, RegressionMatchesExhaustiveOracle) {
  Rng rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const Dataset ds = RandomDataset(rng, LabelKind::kFms);
    const int depth = 1 + static_cast<int>(rng.UniformIndex(3));
    const DecisionTree tree = TrainTree(ds, depth, Task::kRegression);
    const auto problem = oracle::CheckTree(tree, ds);
    ASSERT_FALSE(problem.has_value()) << "trial " << trial << ": " << *problem;
  }
}

TEST(TreeTest, PredictionFollowsTheDecisionPath) {
  Rng rng(33);
  const Dataset ds = RandomDataset(rng, LabelKind::kBinary);
  const DecisionTree tree = TrainTree(ds, 4, Task::kClassification);
  for (std::size_t i = 0; i < ds.num_rows(); ++i) {
    const auto path = tree.DecisionPath(ds.row(i));
    ASSERT_EQ(path.front(), 0);
    ASSERT_EQ(path.back(), tree.LeafIndex(ds.row(i)));
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      const TreeNode& node = tree.nodes[path[k]];
      const bool left = ds.value(i, node.feature) <= node.threshold;
      ASSERT_EQ(path[k + 1], left ? node.left : node.right);
    }
    const TreeNode& leaf = tree.nodes[path.back()];
    ASSERT_DOUBLE_EQ(tree.Predict(ds.row(i)),
                     static_cast<double>(leaf.class_counts[1]) / leaf.samples);
  }
}

TEST(TreeTest, NodesRecordImpurityAndEntropy) {
  Rng rng(34);
  const Dataset ds = RandomDataset(rng, LabelKind::kBinary);
  const DecisionTree tree = TrainTree(ds, 3, Task::kClassification);
  for (const TreeNode& node : tree.nodes) {
    ASSERT_NEAR(node.impurity, static_cast<double>(oracle::Gini(node.class_counts)), 1e-12);
    ASSERT_NEAR(node.entropy, static_cast<double>(oracle::Entropy(node.class_counts)), 1e-12);
    if (!node.is_leaf()) {
      const std::vector<Counts> children = {tree.nodes[node.left].class_counts,
                                            tree.nodes[node.right].class_counts};
      ASSERT_NEAR(node.information_gain,
                  static_cast<double>(oracle::InformationGain(node.class_counts, children)),
                  1e-12);
    }
  }
}

TEST(TreeTest, RenderShowsCountsPerNode) {
  std::vector<std::vector<double>> rows;
  std::vector<double> labels;
  for (int x = 1; x <= 10; ++x) {
    rows.push_back({static_cast<double>(x)});
    labels.push_back(x > 5 ? 1 : 0);
  }
  const std::string text =
      RenderTree(TrainTree(fixtures::MakeDataset(rows, labels), 3, Task::kClassification));
  EXPECT_NE(text.find("x0 <= 5.5"), std::string::npos) << text;
  EXPECT_NE(text.find("#Obs=10 (5, 5)"), std::string::npos) << text;
  EXPECT_NE(text.find("  leaf class=0"), std::string::npos) << text;
}

}  // namespace
}  // namespace glassbox
