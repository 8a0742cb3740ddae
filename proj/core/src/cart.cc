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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "glassbox/error.h"
#include "glassbox/numeric.h"

namespace glassbox {
namespace {

__extension__ typedef unsigned __int128 u128;

constexpr std::size_t kClasses = 2;

// Weighted child Gini is minimized exactly when A/n_L + B/n_R is maximized,
// with A and B the sums of squared class counts of the two children. The
// fraction is kept as integers so that equal candidates compare equal.
struct GiniScore {
  std::uint64_t numerator = 0;    // A * n_R + B * n_L
  std::uint64_t denominator = 1;  // n_L * n_R

  bool BetterThan(const GiniScore& other) const {
    return u128(numerator) * other.denominator > u128(other.numerator) * denominator;
  }
};

struct Candidate {
  bool found = false;
  int feature = -1;
  double threshold = 0;
  GiniScore gini;
  double proxy = 0;  // regression: S_L^2/n_L + S_R^2/n_R
};

std::int64_t SumSquares(std::span<const std::int64_t> counts) {
  std::int64_t s = 0;
  for (auto c : counts) s += c * c;
  return s;
}

double Variance(std::span<const std::size_t> rows, const Dataset& data, double* mean_out) {
  double mean = 0;
  for (std::size_t i : rows) mean += data.label(i);
  mean /= static_cast<double>(rows.size());
  double ss = 0;
  for (std::size_t i : rows) {
    const double d = data.label(i) - mean;
    ss += d * d;
  }
  if (mean_out) *mean_out = mean;
  return ss / static_cast<double>(rows.size());
}

constexpr double kTieTolerance = 1e-12;

class Builder {
 public:
  Builder(const Dataset& data, int max_depth, Task task, DecisionTree& tree)
      : data_(data), max_depth_(max_depth), task_(task), tree_(tree) {}

  int Build(std::vector<std::size_t> rows, int depth) {
    const int index = static_cast<int>(tree_.nodes.size());
    tree_.nodes.emplace_back();
    FillStats(rows, depth, tree_.nodes.back());

    if (depth >= max_depth_ || rows.size() < 2 || tree_.nodes[index].impurity == 0.0) {
      return index;
    }
    const Candidate best =
        task_ == Task::kClassification ? BestGiniSplit(rows) : BestVarianceSplit(rows);
    if (!best.found) return index;

    std::vector<std::size_t> left, right;
    for (std::size_t i : rows) {
      (data_.value(i, best.feature) <= best.threshold ? left : right).push_back(i);
    }

    if (task_ == Task::kClassification) {
      const auto& counts = tree_.nodes[index].class_counts;
      // Zero-gain splits leave the node a leaf.
      const std::uint64_t parent = static_cast<std::uint64_t>(SumSquares(counts));
      if (!(u128(best.gini.numerator) * rows.size() > u128(parent) * best.gini.denominator)) {
        return index;
      }
    } else {
      const double parent = tree_.nodes[index].impurity * static_cast<double>(rows.size());
      const double children = Variance(left, data_, nullptr) * static_cast<double>(left.size()) +
                              Variance(right, data_, nullptr) * static_cast<double>(right.size());
      if (!(children < parent)) return index;
    }

    const double parent_weighted =
        tree_.nodes[index].impurity * static_cast<double>(rows.size());
    const int l = Build(std::move(left), depth + 1);
    const int r = Build(std::move(right), depth + 1);
    TreeNode& node = tree_.nodes[index];
    const TreeNode& ln = tree_.nodes[l];
    const TreeNode& rn = tree_.nodes[r];
    node.feature = best.feature;
    node.threshold = best.threshold;
    node.left = l;
    node.right = r;
    node.impurity_decrease = parent_weighted -
                             ln.impurity * static_cast<double>(ln.samples) -
                             rn.impurity * static_cast<double>(rn.samples);
    if (task_ == Task::kClassification) {
      const std::vector<std::vector<std::int64_t>> parts = {ln.class_counts, rn.class_counts};
      node.information_gain = InformationGain(node.class_counts, parts);
    }
    return index;
  }

 private:
  void FillStats(std::span<const std::size_t> rows, int depth, TreeNode& node) {
    node.depth = depth;
    node.samples = static_cast<std::int64_t>(rows.size());
    if (task_ == Task::kClassification) {
      node.class_counts.assign(kClasses, 0);
      for (std::size_t i : rows) ++node.class_counts[data_.label(i) != 0.0 ? 1 : 0];
      node.impurity = Gini(node.class_counts);
      node.entropy = EntropyOfCounts(node.class_counts);
      node.probabilities.resize(kClasses);
      for (std::size_t c = 0; c < kClasses; ++c) {
        node.probabilities[c] =
            static_cast<double>(node.class_counts[c]) / static_cast<double>(rows.size());
      }
      node.value = node.probabilities[1];
    } else {
      node.impurity = Variance(rows, data_, &node.value);
    }
  }

  std::vector<std::size_t> SortedBy(std::span<const std::size_t> rows, int feature) const {
    std::vector<std::size_t> sorted(rows.begin(), rows.end());
    std::stable_sort(sorted.begin(), sorted.end(), [&](std::size_t a, std::size_t b) {
      return data_.value(a, feature) < data_.value(b, feature);
    });
    return sorted;
  }

  Candidate BestGiniSplit(std::span<const std::size_t> rows) const {
    Candidate best;
    const std::uint64_t n = rows.size();
    std::int64_t total[kClasses] = {0, 0};
    for (std::size_t i : rows) ++total[data_.label(i) != 0.0 ? 1 : 0];
    for (int j = 0; j < static_cast<int>(data_.num_features()); ++j) {
      const auto sorted = SortedBy(rows, j);
      std::int64_t left[kClasses] = {0, 0};
      for (std::size_t k = 1; k < sorted.size(); ++k) {
        ++left[data_.label(sorted[k - 1]) != 0.0 ? 1 : 0];
        const double lo = data_.value(sorted[k - 1], j);
        const double hi = data_.value(sorted[k], j);
        if (!(lo < hi)) continue;
        const std::uint64_t nl = k;
        const std::uint64_t nr = n - k;
        std::uint64_t a = 0, b = 0;
        for (std::size_t c = 0; c < kClasses; ++c) {
          const auto lc = static_cast<std::uint64_t>(left[c]);
          const auto rc = static_cast<std::uint64_t>(total[c] - left[c]);
          a += lc * lc;
          b += rc * rc;
        }
        const GiniScore score{a * nr + b * nl, nl * nr};
        if (!best.found || score.BetterThan(best.gini)) {
          best.found = true;
          best.feature = j;
          best.threshold = SplitPoint(lo, hi);
          best.gini = score;
        }
      }
    }
    return best;
  }

  Candidate BestVarianceSplit(std::span<const std::size_t> rows) const {
    Candidate best;
    const double n = static_cast<double>(rows.size());
    double total = 0;
    for (std::size_t i : rows) total += data_.label(i);
    for (int j = 0; j < static_cast<int>(data_.num_features()); ++j) {
      const auto sorted = SortedBy(rows, j);
      double left = 0;
      for (std::size_t k = 1; k < sorted.size(); ++k) {
        left += data_.label(sorted[k - 1]);
        const double lo = data_.value(sorted[k - 1], j);
        const double hi = data_.value(sorted[k], j);
        if (!(lo < hi)) continue;
        const double nl = static_cast<double>(k);
        const double right = total - left;
        const double proxy = left * left / nl + right * right / (n - nl);
        // Scores within rounding of each other count as tied.
        if (!best.found || proxy > best.proxy * (1 + kTieTolerance)) {
          best.found = true;
          best.feature = j;
          best.threshold = SplitPoint(lo, hi);
          best.proxy = proxy;
        }
      }
    }
    return best;
  }

  const Dataset& data_;
  int max_depth_;
  Task task_;
  DecisionTree& tree_;
};

}  // namespace

double Entropy(std::span<const double> probabilities) {
  if (probabilities.empty()) {
    throw Error(ErrorCode::kInvalidDistribution, "empty probability vector");
  }
  double sum = 0;
  for (double p : probabilities) {
    if (!(p >= 0) || !std::isfinite(p)) {
      throw Error(ErrorCode::kInvalidDistribution, "negative or non-finite probability");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw Error(ErrorCode::kInvalidDistribution, "probabilities sum to " + FormatDouble(sum));
  }
  double h = 0;
  for (double p : probabilities) {
    if (p > 0) h -= p * std::log2(p);
  }
  return h;
}

double EntropyOfCounts(std::span<const std::int64_t> counts) {
  std::int64_t total = 0;
  for (auto c : counts) {
    if (c < 0) throw Error(ErrorCode::kInvalidDistribution, "negative class count");
    total += c;
  }
  if (total == 0) throw Error(ErrorCode::kEmptyNode, "no observations in node");
  double h = 0;
  for (auto c : counts) {
    if (c > 0) {
      const double p = static_cast<double>(c) / static_cast<double>(total);
      h -= p * std::log2(p);
    }
  }
  return h;
}

double InformationGain(std::span<const std::int64_t> parent,
                       std::span<const std::vector<std::int64_t>> children) {
  std::vector<std::int64_t> summed(parent.size(), 0);
  for (const auto& child : children) {
    if (child.size() != parent.size()) {
      throw Error(ErrorCode::kPartitionMismatch, "child has a different class count");
    }
    for (std::size_t c = 0; c < parent.size(); ++c) summed[c] += child[c];
  }
  if (!std::equal(summed.begin(), summed.end(), parent.begin())) {
    throw Error(ErrorCode::kPartitionMismatch, "children do not partition the parent");
  }
  const double n = static_cast<double>(std::accumulate(parent.begin(), parent.end(), std::int64_t{0}));
  double remainder = 0;
  for (const auto& child : children) {
    const auto m = std::accumulate(child.begin(), child.end(), std::int64_t{0});
    if (m == 0) continue;
    remainder += static_cast<double>(m) / n * EntropyOfCounts(child);
  }
  // Clamp rounding noise on uninformative splits.
  return std::max(0.0, EntropyOfCounts(parent) - remainder);
}

double Gini(std::span<const std::int64_t> counts) {
  std::int64_t total = 0;
  for (auto c : counts) {
    if (c < 0) throw Error(ErrorCode::kInvalidDistribution, "negative class count");
    total += c;
  }
  if (total == 0) throw Error(ErrorCode::kEmptyNode, "no observations in node");
  double sum = 0;
  for (auto c : counts) {
    const double p = static_cast<double>(c) / static_cast<double>(total);
    sum += p * p;
  }
  return 1.0 - sum;
}

int DecisionTree::LeafIndex(std::span<const double> sample) const {
  if (sample.size() != schema.size()) {
    throw Error(ErrorCode::kArityMismatch,
                "sample has " + std::to_string(sample.size()) + " values, tree expects " +
                    std::to_string(schema.size()));
  }
  int index = 0;
  while (!nodes[index].is_leaf()) {
    const TreeNode& node = nodes[index];
    index = sample[node.feature] <= node.threshold ? node.left : node.right;
  }
  return index;
}

std::vector<int> DecisionTree::DecisionPath(std::span<const double> sample) const {
  const int leaf = LeafIndex(sample);
  std::vector<int> path = {0};
  while (path.back() != leaf) {
    const TreeNode& node = nodes[path.back()];
    path.push_back(sample[node.feature] <= node.threshold ? node.left : node.right);
  }
  return path;
}

double DecisionTree::Predict(std::span<const double> sample) const {
  return nodes[LeafIndex(sample)].value;
}

int DecisionTree::PredictClass(std::span<const double> sample) const {
  const TreeNode& leaf = nodes[LeafIndex(sample)];
  return leaf.class_counts[1] >= leaf.class_counts[0] ? 1 : 0;
}

int DecisionTree::Depth() const {
  int depth = 0;
  for (const auto& node : nodes) depth = std::max(depth, node.depth);
  return depth;
}

DecisionTree TrainTree(const Dataset& train, int max_depth, Task task) {
  if (train.empty()) throw Error(ErrorCode::kEmptyDataset, "no training rows");
  if (max_depth < 0) throw Error(ErrorCode::kInvalidArgument, "max_depth must be >= 0");
  if (task == Task::kClassification && train.label_kind() != LabelKind::kBinary) {
    throw Error(ErrorCode::kInvalidArgument, "classification needs binary labels");
  }
  train.RequireTrainingRows("tree trainer");
  DecisionTree tree;
  tree.task = task;
  tree.max_depth = max_depth;
  tree.schema = train.schema();
  std::vector<std::size_t> rows(train.num_rows());
  std::iota(rows.begin(), rows.end(), 0);
  Builder(train, max_depth, task, tree).Build(std::move(rows), 0);
  return tree;
}

double PredictTree(const DecisionTree& tree, std::span<const double> sample) {
  return tree.Predict(sample);
}

std::string RenderTree(const DecisionTree& tree) {
  std::string out;
  char buf[256];
  const bool classify = tree.task == Task::kClassification;
  std::vector<std::pair<int, int>> stack = {{0, 0}};
  while (!stack.empty()) {
    const auto [index, indent] = stack.back();
    stack.pop_back();
    const TreeNode& node = tree.nodes[index];
    out.append(static_cast<std::size_t>(indent) * 2, ' ');
    if (node.is_leaf()) {
      if (classify) {
        std::snprintf(buf, sizeof(buf), "leaf class=%d p1=%.4f", node.class_counts[1] >= node.class_counts[0] ? 1 : 0,
                      node.value);
      } else {
        std::snprintf(buf, sizeof(buf), "leaf value=%.4f", node.value);
      }
      out += buf;
    } else {
      out += tree.schema[node.feature].name + " <= " + FormatDouble(node.threshold);
    }
    if (classify) {
      std::snprintf(buf, sizeof(buf), "  gini=%.4f entropy=%.4f gain=%.4f #Obs=%lld (%lld, %lld)",
                    node.impurity, node.entropy, node.information_gain,
                    static_cast<long long>(node.samples),
                    static_cast<long long>(node.class_counts[0]),
                    static_cast<long long>(node.class_counts[1]));
    } else {
      std::snprintf(buf, sizeof(buf), "  variance=%.4f #Obs=%lld", node.impurity,
                    static_cast<long long>(node.samples));
    }
    out += buf;
    out += '\n';
    if (!node.is_leaf()) {
      stack.push_back({node.right, indent + 1});
      stack.push_back({node.left, indent + 1});
    }
  }
  return out;
}

}  // namespace glassbox
