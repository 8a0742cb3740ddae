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

#ifndef GLASSBOX_PIPELINE_H_
#define GLASSBOX_PIPELINE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "glassbox/config.h"
#include "glassbox/dataset.h"
#include "glassbox/model_io.h"

namespace glassbox {

// Run directory layout:
//   config.conf          resolved settings (without the output path)
//   prep/                prep.json, train.csv, test.csv
//   models/              <model>.json, dt.txt
//   evaluate/            metrics.json, roc_<model>.csv, predictions_<model>.csv
//   explain/             global_<model>.json, local_<model>.json
//   report.json, series/ consolidated report and plot-ready CSV series
//   timings.json         wall-clock seconds per stage
// Everything except timings.json is a deterministic function of the dataset
// and the config.

const char* Version();

// Loads, relabels, windows (regression), splits and oversamples
// (classification). Writes config.conf and prep/ into config.out_dir.
void PrepStage(const RunConfig& config);
void TrainStage(const std::string& run_dir);
void EvaluateStage(const std::string& run_dir);

// Which test rows get local explanations: the first TP, TN, FP and FN in
// test order, or one row by its position in the test split.
struct SampleSelector {
  std::optional<std::size_t> index;

  // "auto" or a non-negative integer.
  static SampleSelector Parse(std::string_view text);
};

void ExplainStage(const std::string& run_dir, const SampleSelector& selector = {});
void ReportStage(const std::string& run_dir);

// All stages in order.
void RunAll(const RunConfig& config, const SampleSelector& selector = {});

RunConfig LoadRunConfig(const std::string& run_dir);

struct PreparedData {
  Task task = Task::kClassification;
  Dataset train;
  Dataset test;
};

PreparedData LoadPrepared(const std::string& run_dir);
AnyModel LoadRunModel(const std::string& run_dir, ModelKind kind);

// Structural check of a report document. Returns the problems found; empty
// means the report is well formed.
std::vector<std::string> ValidateReport(std::string_view report_json);

}  // namespace glassbox

#endif  // GLASSBOX_PIPELINE_H_
