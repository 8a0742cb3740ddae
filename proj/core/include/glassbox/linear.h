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

#ifndef GLASSBOX_LINEAR_H_
#define GLASSBOX_LINEAR_H_

#include <span>
#include <vector>

#include "glassbox/dataset.h"

namespace glassbox {

enum class LinearTask { kLogistic, kLinear };

// Per-feature centering and scaling captured from training data. Constant
// features are marked inactive, keep scale 1 and always get weight 0.
struct Standardizer {
  std::vector<double> means;
  std::vector<double> scales;
  std::vector<bool> active;

  static Standardizer Fit(const Dataset& train);
  std::vector<double> Apply(std::span<const double> sample) const;

  friend bool operator==(const Standardizer&, const Standardizer&) = default;
};

struct LinearModel {
  LinearTask task = LinearTask::kLogistic;
  std::vector<FeatureSpec> schema;
  // Logistic: weights act on standardized inputs. Linear: weights and bias are
  // in original feature units.
  std::vector<double> weights;
  double bias = 0;
  // Coefficients on standardized inputs, used for global importance.
  std::vector<double> standardized_weights;
  double l2 = 0;
  Standardizer standardizer;
  // Training objective after each accepted step (logistic only).
  std::vector<double> loss_history;
  int iterations = 0;

  // w . x~ + b for logistic, w . x + b for linear.
  double Decision(std::span<const double> sample) const;
  // Logistic probability of class 1, or the regression value.
  double Predict(std::span<const double> sample) const;

  friend bool operator==(const LinearModel&, const LinearModel&) = default;
};

// Mean cross-entropy plus l2/2 * |w|^2 (bias unpenalized) over standardized
// rows. Parameters are laid out as [w_0 .. w_{d-1}, bias].
class LogisticObjective {
 public:
  LogisticObjective(const Dataset& train, const Standardizer& standardizer, double l2);

  std::size_t dimension() const { return features_ + 1; }
  // Returns the loss; fills `gradient` when non-empty.
  double Evaluate(std::span<const double> params, std::span<double> gradient) const;

 private:
  std::size_t features_;
  std::size_t rows_;
  std::vector<double> x_;  // standardized, row-major
  std::vector<double> y_;
  std::vector<bool> active_;
  double l2_;
};

struct LogisticOptions {
  double l2 = 1.0;
  int max_iters = 1000;
  double tolerance = 1e-6;
  // Optional starting point [w..., bias]; zeros when empty.
  std::vector<double> initial;
};

// Full-batch gradient descent with Armijo backtracking on standardized
// features. Stops when the gradient's max-norm drops below tolerance or
// after max_iters iterations.
LinearModel TrainLogistic(const Dataset& train, const LogisticOptions& options);

// Least squares through the normal equations on standardized features with
// `ridge` added to the diagonal. Coefficients are mapped back to original
// units.
LinearModel TrainLinear(const Dataset& train, double ridge = 1e-8);

double PredictLinear(const LinearModel& model, std::span<const double> sample);

}  // namespace glassbox

#endif  // GLASSBOX_LINEAR_H_
