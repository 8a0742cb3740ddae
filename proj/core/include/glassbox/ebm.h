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

#ifndef GLASSBOX_EBM_H_
#define GLASSBOX_EBM_H_

#include <cstdint>
#include <span>
#include <vector>

#include "glassbox/binning.h"
#include "glassbox/dataset.h"

namespace glassbox {

struct EbmHyper {
  double learning_rate = 0.01;
  int max_rounds = 5000;
  int patience = 30;
  double validation_fraction = 0.15;
  int max_bins = 256;
  // Leaves of the per-feature tree fitted in each boosting step.
  int max_leaves = 3;
  int min_samples_leaf = 2;
  // Pairwise interaction terms. Reserved; any value above 0 is rejected.
  int interactions = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const EbmHyper&, const EbmHyper&) = default;
};

// Throws InvalidArgument for out-of-range values and NotImplemented when
// interaction terms are requested.
void ValidateEbmHyper(const EbmHyper& hyper);

// Additive per-bin scores for one feature: logits for classification, target
// units for regression.
struct ShapeFunction {
  std::size_t feature = 0;
  std::vector<double> scores;

  friend bool operator==(const ShapeFunction&, const ShapeFunction&) = default;
};

struct EpochLog {
  int epoch = 0;
  double train_loss = 0;
  double validation_loss = 0;

  friend bool operator==(const EpochLog&, const EpochLog&) = default;
};

class EbmModel {
 public:
  Task task = Task::kClassification;
  double intercept = 0;
  std::vector<FeatureSpec> schema;
  std::vector<BinMap> bins;
  std::vector<ShapeFunction> shapes;
  EbmHyper hyper;
  // Epoch 0 is the intercept-only model.
  std::vector<EpochLog> log;
  int best_epoch = 0;

  // g_n(x_n) for every feature, in schema order.
  std::vector<double> Terms(std::span<const double> sample) const;
  // intercept + sum of terms, accumulated left to right.
  double Score(std::span<const double> terms) const;
  // Probability of class 1 (classification) or the predicted value.
  double Predict(std::span<const double> sample) const;

  friend bool operator==(const EbmModel&, const EbmModel&) = default;
};

// A run of contiguous bins [begin, end) sharing one leaf value.
struct BinSegment {
  std::size_t begin = 0;
  std::size_t end = 0;
  double value = 0;
};

// The per-round learner: greedily splits the bin range into at most
// `max_leaves` contiguous segments, each split maximizing
// G_L^2/H_L + G_R^2/H_R - G^2/H over per-bin gradient and weight sums.
// Equal gains go to the lowest boundary index. Leaf value is G/H.
std::vector<BinSegment> FitBinSegments(std::span<const double> gradients,
                                       std::span<const double> weights,
                                       std::span<const std::size_t> counts,
                                       int max_leaves, int min_samples_leaf);

// Cyclic gradient boosting of one shape function per feature. Each epoch
// visits the features in schema order and fits a tree with at most
// max_leaves leaves on that feature's bins against the current gradients
// (y - p for cross-entropy, y - yhat for squared error). Each leaf moves by
// the mean residual of its rows, scaled by the learning rate. Training stops after `patience` epochs
// without validation improvement and keeps the best epoch's shapes. Final
// shapes are centered on the training set, their means moved into the
// intercept.
EbmModel TrainEbm(const Dataset& train, const EbmHyper& hyper, Task task);

double PredictEbm(const EbmModel& model, std::span<const double> sample);

}  // namespace glassbox

#endif  // GLASSBOX_EBM_H_
