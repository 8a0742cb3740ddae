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

#include "glassbox/ebm.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "glassbox/error.h"
#include "glassbox/numeric.h"

namespace glassbox {
namespace {

struct Carve {
  std::vector<std::size_t> inner;
  std::vector<std::size_t> validation;
};

std::size_t ValidationCount(std::size_t n, double fraction) {
  const auto k = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n)));
  return std::clamp<std::size_t>(k, 1, n - 1);
}

// Classification carves each class separately so both sides see both labels.
Carve CarveValidation(const Dataset& train, Task task, double fraction,
                      std::uint64_t seed) {
  Rng rng(seed);
  Carve carve;
  std::vector<std::vector<std::size_t>> strata;
  if (task == Task::kClassification) {
    strata.resize(2);
    for (std::size_t i = 0; i < train.num_rows(); ++i) {
      strata[train.label(i) != 0.0 ? 1 : 0].push_back(i);
    }
  } else {
    strata.emplace_back(train.num_rows());
    std::iota(strata[0].begin(), strata[0].end(), 0);
  }
  for (auto& rows : strata) {
    rng.Shuffle(rows);
    const std::size_t k = ValidationCount(rows.size(), fraction);
    carve.validation.insert(carve.validation.end(), rows.begin(), rows.begin() + k);
    carve.inner.insert(carve.inner.end(), rows.begin() + k, rows.end());
  }
  std::sort(carve.inner.begin(), carve.inner.end());
  std::sort(carve.validation.begin(), carve.validation.end());
  return carve;
}

double MeanLoss(Task task, std::span<const double> scores,
                std::span<const std::size_t> rows, const Dataset& data) {
  double total = 0;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const double y = data.label(rows[k]);
    const double s = scores[k];
    if (task == Task::kClassification) {
      total += y != 0.0 ? Softplus(-s) : Softplus(s);
    } else {
      total += (y - s) * (y - s);
    }
  }
  return total / static_cast<double>(rows.size());
}

struct BestSplit {
  std::size_t segment = 0;
  std::size_t boundary = 0;
  double gain = 0;
  bool found = false;
};

}  // namespace

void ValidateEbmHyper(const EbmHyper& hyper) {
  if (hyper.interactions > 0) {
    throw Error(ErrorCode::kNotImplemented, "pairwise interaction terms are not supported");
  }
  auto fail = [](const char* what) { throw Error(ErrorCode::kInvalidArgument, what); };
  if (!(hyper.learning_rate > 0) || !std::isfinite(hyper.learning_rate)) {
    fail("learning_rate must be positive");
  }
  if (hyper.max_rounds < 1) fail("max_rounds must be positive");
  if (hyper.patience < 1) fail("patience must be positive");
  if (!(hyper.validation_fraction > 0 && hyper.validation_fraction <= 0.5)) {
    fail("validation_fraction must lie in (0, 0.5]");
  }
  if (hyper.max_bins < 2) fail("max_bins must be at least 2");
  if (hyper.max_leaves < 2) fail("max_leaves must be at least 2");
  if (hyper.min_samples_leaf < 1) fail("min_samples_leaf must be positive");
  if (hyper.interactions < 0) fail("interactions must be non-negative");
}

std::vector<BinSegment> FitBinSegments(std::span<const double> gradients,
                                       std::span<const double> weights,
                                       std::span<const std::size_t> counts,
                                       int max_leaves, int min_samples_leaf) {
  const std::size_t bins = gradients.size();
  std::vector<double> g(bins + 1, 0.0), h(bins + 1, 0.0);
  std::vector<std::size_t> c(bins + 1, 0);
  for (std::size_t b = 0; b < bins; ++b) {
    g[b + 1] = g[b] + gradients[b];
    h[b + 1] = h[b] + weights[b];
    c[b + 1] = c[b] + counts[b];
  }
  auto score = [&](std::size_t begin, std::size_t end) {
    const double hs = h[end] - h[begin];
    if (!(hs > 0)) return 0.0;
    const double gs = g[end] - g[begin];
    return gs * gs / hs;
  };
  const auto min_leaf = static_cast<std::size_t>(min_samples_leaf);

  std::vector<BinSegment> segments = {{0, bins, 0.0}};
  for (int leaves = 1; leaves < max_leaves; ++leaves) {
    BestSplit best;
    for (std::size_t s = 0; s < segments.size(); ++s) {
      const auto [begin, end, unused] = segments[s];
      const double parent = score(begin, end);
      for (std::size_t k = begin + 1; k < end; ++k) {
        if (c[k] - c[begin] < min_leaf || c[end] - c[k] < min_leaf) continue;
        if (!(h[k] - h[begin] > 0) || !(h[end] - h[k] > 0)) continue;
        const double gain = score(begin, k) + score(k, end) - parent;
        if (gain > best.gain) best = {s, k, gain, true};
      }
    }
    if (!best.found) break;
    const BinSegment parent = segments[best.segment];
    segments[best.segment] = {parent.begin, best.boundary, 0.0};
    segments.insert(segments.begin() + static_cast<std::ptrdiff_t>(best.segment) + 1,
                    {best.boundary, parent.end, 0.0});
  }
  for (auto& seg : segments) {
    const double hs = h[seg.end] - h[seg.begin];
    seg.value = hs > 0 ? (g[seg.end] - g[seg.begin]) / hs : 0.0;
  }
  return segments;
}

std::vector<double> EbmModel::Terms(std::span<const double> sample) const {
  if (sample.size() != shapes.size()) {
    throw Error(ErrorCode::kArityMismatch,
                "sample has " + std::to_string(sample.size()) +
                    " values, model has " + std::to_string(shapes.size()) + " features");
  }
  std::vector<double> terms(shapes.size());
  for (std::size_t j = 0; j < shapes.size(); ++j) {
    terms[j] = shapes[j].scores[bins[j].BinOf(sample[j])];
  }
  return terms;
}

double EbmModel::Score(std::span<const double> terms) const {
  double score = intercept;
  for (double t : terms) score += t;
  return score;
}

double EbmModel::Predict(std::span<const double> sample) const {
  const double score = Score(Terms(sample));
  return task == Task::kClassification ? Logistic(score) : score;
}

double PredictEbm(const EbmModel& model, std::span<const double> sample) {
  return model.Predict(sample);
}

EbmModel TrainEbm(const Dataset& train, const EbmHyper& hyper, Task task) {
  ValidateEbmHyper(hyper);
  train.RequireTrainingRows("EBM trainer");
  if (train.empty()) throw Error(ErrorCode::kEmptyDataset, "no training rows");
  const std::size_t n = train.num_rows();
  const std::size_t f = train.num_features();

  if (task == Task::kClassification) {
    if (train.label_kind() != LabelKind::kBinary) {
      throw Error(ErrorCode::kInvalidArgument, "classification needs binary labels");
    }
    const auto counts = train.ClassCounts();
    if (counts[0] < 2 || counts[1] < 2) {
      throw Error(ErrorCode::kDegenerateTargets,
                  "classification needs at least two samples of each class");
    }
  } else {
    std::set<double> distinct(train.labels().begin(), train.labels().end());
    if (distinct.size() < 2) {
      throw Error(ErrorCode::kDegenerateTargets, "regression needs two distinct targets");
    }
  }

  EbmModel model;
  model.task = task;
  model.schema = train.schema();
  model.hyper = hyper;
  model.bins = BuildBins(train, static_cast<std::size_t>(hyper.max_bins));

  // Bin index per (feature, row), feature-major.
  std::vector<std::vector<std::uint32_t>> binned(f, std::vector<std::uint32_t>(n));
  for (std::size_t j = 0; j < f; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      binned[j][i] = static_cast<std::uint32_t>(model.bins[j].BinOf(train.value(i, j)));
    }
  }

  const Carve carve = CarveValidation(train, task, hyper.validation_fraction, hyper.seed);
  const std::size_t n_inner = carve.inner.size();
  const std::size_t n_val = carve.validation.size();

  double intercept;
  if (task == Task::kClassification) {
    double positives = 0;
    for (std::size_t i : carve.inner) positives += train.label(i);
    const double p = positives / static_cast<double>(n_inner);
    intercept = std::log(p / (1 - p));
  } else {
    double sum = 0;
    for (std::size_t i : carve.inner) sum += train.label(i);
    intercept = sum / static_cast<double>(n_inner);
  }

  std::vector<std::vector<std::uint32_t>> inner_bins(f), val_bins(f);
  for (std::size_t j = 0; j < f; ++j) {
    inner_bins[j].resize(n_inner);
    val_bins[j].resize(n_val);
    for (std::size_t k = 0; k < n_inner; ++k) inner_bins[j][k] = binned[j][carve.inner[k]];
    for (std::size_t k = 0; k < n_val; ++k) val_bins[j][k] = binned[j][carve.validation[k]];
  }
  std::vector<double> inner_y(n_inner);
  for (std::size_t k = 0; k < n_inner; ++k) inner_y[k] = train.label(carve.inner[k]);

  std::vector<double> inner_score(n_inner, intercept);
  std::vector<double> val_score(n_val, intercept);

  std::vector<std::vector<double>> shapes(f);
  for (std::size_t j = 0; j < f; ++j) shapes[j].assign(model.bins[j].num_bins(), 0.0);

  double best_loss = MeanLoss(task, val_score, carve.validation, train);
  model.log.push_back({0, MeanLoss(task, inner_score, carve.inner, train), best_loss});
  std::vector<std::vector<double>> best_shapes = shapes;
  int best_epoch = 0;
  int stale = 0;

  // Rows per inner bin, fixed for the whole run. Every row weighs 1, so each
  // leaf moves by the mean residual of its rows.
  std::vector<std::vector<std::size_t>> bin_count(f);
  std::vector<std::vector<double>> bin_weight(f);
  for (std::size_t j = 0; j < f; ++j) {
    bin_count[j].assign(shapes[j].size(), 0);
    for (std::uint32_t b : inner_bins[j]) ++bin_count[j][b];
    bin_weight[j].assign(bin_count[j].begin(), bin_count[j].end());
  }

  std::vector<double> grad_sum, delta;
  for (int epoch = 1; epoch <= hyper.max_rounds; ++epoch) {
    for (std::size_t j = 0; j < f; ++j) {
      const std::size_t bins = shapes[j].size();
      grad_sum.assign(bins, 0.0);
      const auto& ib = inner_bins[j];
      if (task == Task::kClassification) {
        for (std::size_t k = 0; k < n_inner; ++k) {
          grad_sum[ib[k]] += inner_y[k] - Logistic(inner_score[k]);
        }
      } else {
        for (std::size_t k = 0; k < n_inner; ++k) {
          grad_sum[ib[k]] += inner_y[k] - inner_score[k];
        }
      }
      const auto segments = FitBinSegments(grad_sum, bin_weight[j], bin_count[j],
                                           hyper.max_leaves, hyper.min_samples_leaf);
      delta.assign(bins, 0.0);
      for (const auto& seg : segments) {
        for (std::size_t b = seg.begin; b < seg.end; ++b) {
          delta[b] = hyper.learning_rate * seg.value;
        }
      }
      for (std::size_t b = 0; b < bins; ++b) shapes[j][b] += delta[b];
      for (std::size_t k = 0; k < n_inner; ++k) inner_score[k] += delta[ib[k]];
      const auto& vb = val_bins[j];
      for (std::size_t k = 0; k < n_val; ++k) val_score[k] += delta[vb[k]];
    }

    const double train_loss = MeanLoss(task, inner_score, carve.inner, train);
    const double val_loss = MeanLoss(task, val_score, carve.validation, train);
    if (!std::isfinite(train_loss) || !std::isfinite(val_loss)) {
      throw Error(ErrorCode::kNonFinite, "loss diverged at epoch " + std::to_string(epoch));
    }
    model.log.push_back({epoch, train_loss, val_loss});
    if (val_loss < best_loss) {
      best_loss = val_loss;
      best_epoch = epoch;
      best_shapes = shapes;
      stale = 0;
    } else if (++stale >= hyper.patience) {
      break;
    }
  }

  model.best_epoch = best_epoch;
  model.intercept = intercept;
  model.shapes.resize(f);
  for (std::size_t j = 0; j < f; ++j) {
    std::vector<double>& scores = best_shapes[j];
    // Training-set mean of g_j, accumulated per bin.
    std::vector<double> population(scores.size(), 0.0);
    for (std::size_t i = 0; i < n; ++i) population[binned[j][i]] += 1.0;
    double mean = 0;
    for (std::size_t b = 0; b < scores.size(); ++b) mean += population[b] * scores[b];
    mean /= static_cast<double>(n);
    for (double& s : scores) s -= mean;
    model.intercept += mean;
    model.shapes[j] = {j, std::move(scores)};
  }
  return model;
}

}  // namespace glassbox
