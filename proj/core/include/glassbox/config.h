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

#ifndef GLASSBOX_CONFIG_H_
#define GLASSBOX_CONFIG_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "glassbox/dataset.h"
#include "glassbox/ebm.h"
#include "glassbox/explain.h"
#include "glassbox/linear.h"

namespace glassbox {

// Everything one run needs. Settings are addressed by dotted keys
// ("ebm.learning_rate", "seed_split", ...) in config files, profiles and
// command-line overrides alike.
struct RunConfig {
  std::string dataset;
  std::string schema;
  // Overrides the schema file's @provenance when set.
  std::optional<Provenance> provenance;
  Task task = Task::kClassification;
  // Unset means every model valid for the task.
  std::optional<std::vector<ModelKind>> models;
  double train_fraction = 0.7;
  std::uint64_t seed_split = 0;
  std::uint64_t seed_oversample = 1;
  std::uint64_t seed_model = 2;
  EbmHyper ebm;
  int dt_max_depth = 3;
  LogisticOptions lr;
  double lir_ridge = 1e-8;
  // Regression only: time steps per input window; 0 uses rows as they are.
  std::size_t window = 5;
  std::string out_dir;
  std::string profile;
};

// Applies one key = value setting. Unknown keys and malformed values throw
// InvalidConfig.
void ApplySetting(RunConfig& config, std::string_view key, std::string_view value);

// Reads "key = value" lines; '#' starts a comment.
void ApplyConfigText(RunConfig& config, std::string_view text);
void ApplyConfigFile(RunConfig& config, const std::string& path);

// Built-in setting bundles: "paper-physiological" and "paper-gameplay".
// InvalidConfig for other names.
void ApplyProfile(RunConfig& config, std::string_view name);
std::vector<std::string> ProfileNames();

// The models the run trains: the explicit set, or the task's defaults.
std::vector<ModelKind> ResolvedModels(const RunConfig& config);

// Throws InvalidConfig for inconsistent settings (for example lir with a
// classification task, or an empty model set).
void ValidateConfig(const RunConfig& config);

// Every setting as (key, value) in a fixed order. Feeding them back through
// ApplySetting reproduces the config.
std::vector<std::pair<std::string, std::string>> ConfigSettings(const RunConfig& config);
std::string FormatConfig(const RunConfig& config);

ModelKind ParseModelKind(std::string_view text);

// Root for run directories: $GLASSBOX_OUTPUT_ROOT, else "runs".
std::string DefaultOutputRoot();

}  // namespace glassbox

#endif  // GLASSBOX_CONFIG_H_
