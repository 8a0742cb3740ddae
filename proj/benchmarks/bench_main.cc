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


#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "glassbox/binning.h"
#include "glassbox/cart.h"
#include "glassbox/dataset.h"
#include "glassbox/ebm.h"
#include "glassbox/metrics.h"
#include "glassbox/numeric.h"

namespace glassbox {
namespace {

Dataset MakeData(std::size_t rows, std::size_t features, Task task) {
  std::vector<FeatureSpec> schema;
  for (std::size_t j = 0; j < features; ++j) {
    schema.push_back({"x" + std::to_string(j), FeatureKind::kContinuous, "", {}});
  }
  const LabelKind kind = task == Task::kClassification ? LabelKind::kBinary : LabelKind::kFms;
  Dataset data(std::move(schema), kind, Provenance::kSynthetic);
  data.Reserve(rows);
  Rng rng(7);
  std::vector<double> x(features);
  for (std::size_t i = 0; i < rows; ++i) {
    for (auto& v : x) v = rng.Normal();
    const double signal = 1.5 * x[0] - x[1 % features];
    const double label = task == Task::kClassification
                             ? (rng.UniformReal() < Logistic(signal) ? 1.0 : 0.0)
                             : std::clamp(5.0 + signal + 0.3 * rng.Normal(), 0.0, 10.0);
    data.AddRow(x, label, RowTag{static_cast<std::int64_t>(i), Partition::kTrain, false});
  }
  return data;
}

void BM_BuildBins(benchmark::State& state) {
  Rng rng(3);
  std::vector<double> values(static_cast<std::size_t>(state.range(0)));
  for (auto& v : values) v = rng.Normal();
  for (auto _ : state) {
    benchmark::DoNotOptimize(BuildBinMap(values, FeatureKind::kContinuous, 256));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildBins)->Arg(1000)->Arg(100000);

void BM_Roc(benchmark::State& state) {
  Rng rng(5);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<double> scores(n), labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = i % 3 == 0 ? 1.0 : 0.0;
    scores[i] = Logistic(rng.Normal() + labels[i]);
  }
  for (auto _ : state) benchmark::DoNotOptimize(ComputeRoc(scores, labels));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Roc)->Arg(1000)->Arg(100000);

void BM_TrainTree(benchmark::State& state) {
  const Dataset data = MakeData(static_cast<std::size_t>(state.range(0)), 8,
                                Task::kClassification);
  for (auto _ : state) benchmark::DoNotOptimize(TrainTree(data, 6, Task::kClassification));
}
BENCHMARK(BM_TrainTree)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_TrainEbm(benchmark::State& state) {
  const Task task = state.range(1) == 0 ? Task::kClassification : Task::kRegression;
  const Dataset data = MakeData(static_cast<std::size_t>(state.range(0)), 8, task);
  EbmHyper hyper;
  hyper.max_rounds = 500;
  for (auto _ : state) benchmark::DoNotOptimize(TrainEbm(data, hyper, task));
}
BENCHMARK(BM_TrainEbm)->Args({2000, 0})->Args({2000, 1})->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace glassbox

BENCHMARK_MAIN();
