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

#ifndef GLASSBOX_DATAIO_H_
#define GLASSBOX_DATAIO_H_

#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "glassbox/dataset.h"

namespace glassbox {

// Column layout of a dataset file, read from a plain-text schema file:
//
//   # comment
//   @provenance = physiological
//   @label = class          raw severity class column (classification)
//   @target = fms           FMS score column (regression)
//   @group = participant    optional; windows never cross groups
//   @order = time           optional; rows sorted by it within each group
//   PC_HR = continuous | percent change from resting baseline
//   user_gender = categorical
struct SchemaFile {
  std::vector<FeatureSpec> features;
  Provenance provenance = Provenance::kSynthetic;
  std::string label_column;
  std::string target_column;
  std::string group_column;
  std::string order_column;
};

SchemaFile ParseSchema(std::string_view text);
SchemaFile LoadSchemaFile(const std::string& path);
std::string FormatSchema(const SchemaFile& schema);

struct LoadResult {
  Dataset data;
  // Group code per row, empty when the schema names no group column.
  std::vector<std::int64_t> groups;
  std::size_t rejected_rows = 0;
  std::vector<std::string> warnings;
};

// Parses a dataset CSV. Rows with a missing cell are dropped and counted;
// malformed values abort the load with their line and column.
LoadResult LoadDataset(const std::string& path, const SchemaFile& schema,
                       LabelKind label_kind);
LoadResult LoadDataset(std::istream& in, const SchemaFile& schema,
                       LabelKind label_kind);

// Maps a raw severity class name to the binary cybersickness label. Case,
// surrounding blanks and the separators "_" and "-" are ignored.
//   physiological: low sickness -> 0; moderate, acute sickness -> 1
//   gameplay:      none -> 0; slight, moderate, severe -> 1
// Synthetic data accepts "0" and "1" verbatim.
Label RelabelBinary(std::string_view raw_class, Provenance provenance);

// Shuffled row-level split. The train part holds floor(N * fraction) rows;
// both parts keep source order and are tagged with their partition.
std::pair<Dataset, Dataset> Split(const Dataset& ds, double train_fraction,
                                  std::uint64_t seed);

// Random oversampling with replacement of the minority class until both
// classes have equal counts. Original rows come first, copies after.
Dataset Oversample(const Dataset& train, std::uint64_t seed);

struct WindowedSeries {
  std::size_t window = 0;
  // One row per window: w * features values, step-major, oldest step first.
  // The label is the FMS score of the step right after the window.
  Dataset data;
  // Source row of each window's target step.
  std::vector<std::int64_t> target_rows;
};

std::vector<FeatureSpec> WindowSchema(std::span<const FeatureSpec> schema,
                                      std::size_t window);
WindowedSeries MakeWindows(const Dataset& series, std::size_t window);
// Windows built independently inside each run of equal group codes.
WindowedSeries MakeWindows(const Dataset& series,
                           std::span<const std::int64_t> groups,
                           std::size_t window);

// Prepared-data artifacts: the dataset plus its row tags, exact doubles.
void WriteDatasetCsv(const std::string& path, const Dataset& ds);
Dataset ReadDatasetCsv(const std::string& path,
                       std::vector<FeatureSpec> schema, LabelKind label_kind,
                       Provenance provenance);

}  // namespace glassbox

#endif  // GLASSBOX_DATAIO_H_
