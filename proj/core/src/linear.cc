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

#include "glassbox/linear.h"

#include <algorithm>
#include <cmath>

#include "glassbox/error.h"
#include "glassbox/numeric.h"

namespace glassbox {
namespace {

void RequireArity(const LinearModel& model, std::span<const double> sample) {
  if (sample.size() != model.weights.size()) {
    throw Error(ErrorCode::kArityMismatch,
                "sample has " + std::to_string(sample.size()) + " values, model expects " +
                    std::to_string(model.weights.size()));
  }
}

double MaxAbs(std::span<const double> v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// In-place Cholesky solve of the SPD system a * x = b (a is n x n, row-major).
std::vector<double> CholeskySolve(std::vector<double> a, std::vector<double> b, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) {
    double d = a[j * n + j];
    for (std::size_t k = 0; k < j; ++k) d -= a[j * n + k] * a[j * n + k];
    if (!(d > 0)) throw Error(ErrorCode::kNonFinite, "normal equations are not positive definite");
    const double l = std::sqrt(d);
    a[j * n + j] = l;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = a[i * n + j];
      for (std::size_t k = 0; k < j; ++k) s -= a[i * n + k] * a[j * n + k];
      a[i * n + j] = s / l;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[i];
    for (std::size_t k = 0; k < i; ++k) s -= a[i * n + k] * b[k];
    b[i] = s / a[i * n + i];
  }
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= a[k * n + i] * b[k];
    b[i] = s / a[i * n + i];
  }
  return b;
}

}  // namespace

Standardizer Standardizer::Fit(const Dataset& train) {
  train.RequireTrainingRows("standardizer");
  if (train.empty()) throw Error(ErrorCode::kEmptyDataset, "no training rows");
  const std::size_t d = train.num_features();
  const double n = static_cast<double>(train.num_rows());
  Standardizer s;
  s.means.assign(d, 0.0);
  s.scales.assign(d, 1.0);
  s.active.assign(d, false);
  for (std::size_t j = 0; j < d; ++j) {
    double mean = 0;
    for (std::size_t i = 0; i < train.num_rows(); ++i) mean += train.value(i, j);
    mean /= n;
    double ss = 0;
    for (std::size_t i = 0; i < train.num_rows(); ++i) {
      const double dv = train.value(i, j) - mean;
      ss += dv * dv;
    }
    const double sd = std::sqrt(ss / n);
    s.means[j] = mean;
    if (sd > 1e-12 * std::max(1.0, std::abs(mean))) {
      s.scales[j] = sd;
      s.active[j] = true;
    }
  }
  return s;
}

std::vector<double> Standardizer::Apply(std::span<const double> sample) const {
  std::vector<double> out(sample.size());
  for (std::size_t j = 0; j < sample.size(); ++j) {
    out[j] = active[j] ? (sample[j] - means[j]) / scales[j] : 0.0;
  }
  return out;
}

double LinearModel::Decision(std::span<const double> sample) const {
  RequireArity(*this, sample);
  double z = bias;
  if (task == LinearTask::kLogistic) {
    const auto x = standardizer.Apply(sample);
    for (std::size_t j = 0; j < x.size(); ++j) z += weights[j] * x[j];
  } else {
    for (std::size_t j = 0; j < sample.size(); ++j) z += weights[j] * sample[j];
  }
  return z;
}

double LinearModel::Predict(std::span<const double> sample) const {
  const double z = Decision(sample);
  return task == LinearTask::kLogistic ? Logistic(z) : z;
}

double PredictLinear(const LinearModel& model, std::span<const double> sample) {
  return model.Predict(sample);
}

LogisticObjective::LogisticObjective(const Dataset& train, const Standardizer& standardizer,
                                     double l2)
    : features_(train.num_features()),
      rows_(train.num_rows()),
      y_(train.labels()),
      active_(standardizer.active),
      l2_(l2) {
  x_.reserve(rows_ * features_);
  for (std::size_t i = 0; i < rows_; ++i) {
    const auto z = standardizer.Apply(train.row(i));
    x_.insert(x_.end(), z.begin(), z.end());
  }
}

double LogisticObjective::Evaluate(std::span<const double> params,
                                   std::span<double> gradient) const {
  const double bias = params[features_];
  const bool want_grad = !gradient.empty();
  if (want_grad) std::fill(gradient.begin(), gradient.end(), 0.0);
  double loss = 0;
  for (std::size_t i = 0; i < rows_; ++i) {
    const double* xi = x_.data() + i * features_;
    double z = bias;
    for (std::size_t j = 0; j < features_; ++j) z += params[j] * xi[j];
    loss += y_[i] != 0.0 ? Softplus(-z) : Softplus(z);
    if (want_grad) {
      // d/dz of the cross-entropy; the unclamped sigmoid keeps it exact.
      const double p = z >= 0 ? 1.0 / (1.0 + std::exp(-z)) : std::exp(z) / (1.0 + std::exp(z));
      const double r = p - y_[i];
      for (std::size_t j = 0; j < features_; ++j) gradient[j] += r * xi[j];
      gradient[features_] += r;
    }
  }
  const double n = static_cast<double>(rows_);
  loss /= n;
  double penalty = 0;
  for (std::size_t j = 0; j < features_; ++j) penalty += params[j] * params[j];
  loss += 0.5 * l2_ * penalty;
  if (want_grad) {
    for (std::size_t j = 0; j <= features_; ++j) gradient[j] /= n;
    for (std::size_t j = 0; j < features_; ++j) {
      gradient[j] += l2_ * params[j];
      if (!active_[j]) gradient[j] = 0.0;
    }
  }
  return loss;
}

LinearModel TrainLogistic(const Dataset& train, const LogisticOptions& options) {
  if (train.label_kind() != LabelKind::kBinary) {
    throw Error(ErrorCode::kInvalidArgument, "logistic regression needs binary labels");
  }
  if (!(options.l2 >= 0) || options.max_iters < 0 || !(options.tolerance > 0)) {
    throw Error(ErrorCode::kInvalidArgument, "invalid logistic options");
  }
  const auto counts = train.ClassCounts();
  if (counts[0] == 0 || counts[1] == 0) {
    throw Error(ErrorCode::kSingleClassDataset, "logistic regression needs both classes");
  }
  LinearModel model;
  model.task = LinearTask::kLogistic;
  model.schema = train.schema();
  model.l2 = options.l2;
  model.standardizer = Standardizer::Fit(train);
  const LogisticObjective objective(train, model.standardizer, options.l2);
  const std::size_t dim = objective.dimension();

  std::vector<double> params(dim, 0.0);
  if (!options.initial.empty()) {
    if (options.initial.size() != dim) {
      throw Error(ErrorCode::kArityMismatch, "initial point has the wrong dimension");
    }
    params = options.initial;
    for (std::size_t j = 0; j + 1 < dim; ++j) {
      if (!model.standardizer.active[j]) params[j] = 0.0;
    }
  }
  std::vector<double> grad(dim), trial(dim), trial_grad(dim);
  double loss = objective.Evaluate(params, grad);
  if (!std::isfinite(loss)) throw Error(ErrorCode::kNonFinite, "initial loss is not finite");
  model.loss_history.push_back(loss);

  constexpr double kArmijo = 1e-4;
  double step = 1.0;
  int iter = 0;
  for (; iter < options.max_iters; ++iter) {
    if (MaxAbs(grad) < options.tolerance) break;
    double g2 = 0;
    for (double g : grad) g2 += g * g;
    step = std::min(step * 2.0, 1e6);
    bool accepted = false;
    double trial_loss = loss;
    for (int halvings = 0; halvings < 80; ++halvings) {
      for (std::size_t k = 0; k < dim; ++k) trial[k] = params[k] - step * grad[k];
      trial_loss = objective.Evaluate(trial, trial_grad);
      if (std::isfinite(trial_loss) && trial_loss <= loss - kArmijo * step * g2) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;  // no representable descent step remains
    params.swap(trial);
    grad.swap(trial_grad);
    loss = trial_loss;
    for (double g : grad) {
      if (!std::isfinite(g)) throw Error(ErrorCode::kNonFinite, "gradient overflow");
    }
    model.loss_history.push_back(loss);
  }
  model.iterations = iter;
  model.weights.assign(params.begin(), params.end() - 1);
  model.bias = params.back();
  model.standardized_weights = model.weights;
  return model;
}

LinearModel TrainLinear(const Dataset& train, double ridge) {
  if (train.empty()) throw Error(ErrorCode::kEmptyDataset, "no training rows");
  if (!(ridge >= 0)) throw Error(ErrorCode::kInvalidArgument, "ridge must be non-negative");
  LinearModel model;
  model.task = LinearTask::kLinear;
  model.schema = train.schema();
  model.l2 = ridge;
  model.standardizer = Standardizer::Fit(train);
  const Standardizer& st = model.standardizer;

  const std::size_t d = train.num_features();
  std::vector<std::size_t> act;
  for (std::size_t j = 0; j < d; ++j) {
    if (st.active[j]) act.push_back(j);
  }
  const std::size_t m = act.size();
  const double n = static_cast<double>(train.num_rows());
  double y_mean = 0;
  for (double y : train.labels()) y_mean += y;
  y_mean /= n;

  // Normal equations on standardized, centered columns.
  std::vector<double> gram(m * m, 0.0), rhs(m, 0.0), z(m);
  for (std::size_t i = 0; i < train.num_rows(); ++i) {
    for (std::size_t a = 0; a < m; ++a) {
      z[a] = (train.value(i, act[a]) - st.means[act[a]]) / st.scales[act[a]];
    }
    const double yc = train.label(i) - y_mean;
    for (std::size_t a = 0; a < m; ++a) {
      rhs[a] += z[a] * yc;
      for (std::size_t b = 0; b <= a; ++b) gram[a * m + b] += z[a] * z[b];
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < a; ++b) gram[b * m + a] = gram[a * m + b];
    gram[a * m + a] += ridge;
  }
  const std::vector<double> beta = m > 0 ? CholeskySolve(gram, rhs, m) : std::vector<double>{};

  model.weights.assign(d, 0.0);
  model.standardized_weights.assign(d, 0.0);
  model.bias = y_mean;
  for (std::size_t a = 0; a < m; ++a) {
    const std::size_t j = act[a];
    model.standardized_weights[j] = beta[a];
    model.weights[j] = beta[a] / st.scales[j];
    model.bias -= model.weights[j] * st.means[j];
  }
  if (!std::isfinite(model.bias) ||
      std::any_of(model.weights.begin(), model.weights.end(),
                  [](double w) { return !std::isfinite(w); })) {
    throw Error(ErrorCode::kNonFinite, "least-squares coefficients are not finite");
  }
  return model;
}

}  // namespace glassbox
