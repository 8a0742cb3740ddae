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

#ifndef GLASSBOX_CART_H_
#define GLASSBOX_CART_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "glassbox/dataset.h"

namespace glassbox {

// Shannon entropy in bits, with 0 * log2(0) = 0. Probabilities must be
// non-negative and sum to 1 within 1e-9 (InvalidDistribution otherwise).
double Entropy(std::span<const double> probabilities);
double EntropyOfCounts(std::span<const std::int64_t> counts);

// Parent entropy minus the observation-weighted child entropies. Children
// must partition the parent class by class (PartitionMismatch otherwise).
double InformationGain(std::span<const std::int64_t> parent,
                       std::span<const std::vector<std::int64_t>> children);

// 1 - sum_i (count_i / total)^2. EmptyNode when the counts sum to zero.
double Gini(std::span<const std::int64_t> counts);

struct TreeNode {
  // Internal nodes only.
  int feature = -1;
  double threshold = 0;
  int left = -1;
  int right = -1;

  int depth = 0;
  std::int64_t samples = 0;
  // Gini (classification) or variance of the target (regression).
  double impurity = 0;
  // Classification only.
  std::vector<std::int64_t> class_counts;
  double entropy = 0;
  // Gain of this node's split (0 at leaves).
  double information_gain = 0;
  // samples * impurity minus the children's, for split importances.
  double impurity_decrease = 0;
  // Leaf payload: class frequencies, or the mean target.
  std::vector<double> probabilities;
  double value = 0;

  bool is_leaf() const { return left < 0; }

  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

class DecisionTree {
 public:
  Task task = Task::kClassification;
  int max_depth = 3;
  std::vector<FeatureSpec> schema;
  // nodes[0] is the root; children always follow their parent.
  std::vector<TreeNode> nodes;

  // Index of the leaf reached by `sample` (value <= threshold goes left).
  int LeafIndex(std::span<const double> sample) const;
  // Node indices from the root to the leaf.
  std::vector<int> DecisionPath(std::span<const double> sample) const;
  // P(class 1) for classification, the leaf mean for regression.
  double Predict(std::span<const double> sample) const;
  // Majority class of the leaf; ties go to class 1.
  int PredictClass(std::span<const double> sample) const;
  int Depth() const;

  friend bool operator==(const DecisionTree&, const DecisionTree&) = default;
};

// Greedy CART. Each node scores every (feature, midpoint between consecutive
// distinct values) candidate and keeps the one with the lowest weighted
// child Gini (classification) or variance (regression); equal scores go to
// the lowest feature index, then the lowest threshold. Nodes become leaves
// at max_depth, when pure, with fewer than 2 samples, or when no candidate
// lowers the impurity.
DecisionTree TrainTree(const Dataset& train, int max_depth, Task task);

double PredictTree(const DecisionTree& tree, std::span<const double> sample);

// Indented text rendering, one node per line.
std::string RenderTree(const DecisionTree& tree);

}  // namespace glassbox

#endif  // GLASSBOX_CART_H_
