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

#ifndef GLASSBOX_DATASET_H_
#define GLASSBOX_DATASET_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace glassbox {

enum class FeatureKind { kContinuous, kCategorical };
enum class Provenance { kPhysiological, kGameplay, kSynthetic };
enum class LabelKind { kBinary, kFms };
enum class Task { kClassification, kRegression };

std::string_view ToString(FeatureKind kind);
std::string_view ToString(Provenance provenance);
std::string_view ToString(LabelKind kind);
std::string_view ToString(Task task);
Task ParseTask(std::string_view text);
FeatureKind ParseFeatureKind(std::string_view text);
Provenance ParseProvenance(std::string_view text);

struct FeatureSpec {
  std::string name;
  FeatureKind kind = FeatureKind::kContinuous;
  std::string unit_note;
  // Categorical only: categories[code] is the original string.
  std::vector<std::string> categories;

  friend bool operator==(const FeatureSpec&, const FeatureSpec&) = default;
};

// Throws SchemaMismatch unless both schemas list the same names and kinds.
void RequireSameSchema(std::span<const FeatureSpec> expected,
                       std::span<const FeatureSpec> actual);

// A binary class label or a Fast-Motion-Scale score in [0, 10].
class Label {
 public:
  static Label Binary(int value);
  static Label Fms(double value);

  LabelKind kind() const { return kind_; }
  double value() const { return value_; }

 private:
  Label(LabelKind kind, double value) : kind_(kind), value_(value) {}
  LabelKind kind_;
  double value_;
};

// Where a row ended up after splitting. Every consumer that must only see
// training data checks these tags.
enum class Partition : std::uint8_t { kUnassigned, kTrain, kTest };

struct RowTag {
  std::int64_t source = -1;  // row (or window) index in the loaded file
  Partition partition = Partition::kUnassigned;
  bool oversampled_copy = false;

  friend bool operator==(const RowTag&, const RowTag&) = default;
};

// Dense row-major feature matrix with one label and one provenance tag per
// row. Categorical features hold their integer codes.
class Dataset {
 public:
  Dataset() = default;
  Dataset(std::vector<FeatureSpec> schema, LabelKind label_kind,
          Provenance provenance);

  const std::vector<FeatureSpec>& schema() const { return schema_; }
  LabelKind label_kind() const { return label_kind_; }
  Provenance provenance() const { return provenance_; }

  std::size_t num_rows() const { return labels_.size(); }
  std::size_t num_features() const { return schema_.size(); }
  bool empty() const { return labels_.empty(); }

  std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * schema_.size(), schema_.size()};
  }
  double value(std::size_t i, std::size_t j) const {
    return values_[i * schema_.size() + j];
  }
  double label(std::size_t i) const { return labels_[i]; }
  const std::vector<double>& labels() const { return labels_; }
  const RowTag& tag(std::size_t i) const { return tags_[i]; }
  const std::vector<RowTag>& tags() const { return tags_; }

  std::vector<double> Column(std::size_t j) const;
  // Index of the named feature, or -1.
  int FeatureIndex(std::string_view name) const;

  // Validates arity and label range before appending.
  void AddRow(std::span<const double> values, double label, RowTag tag);
  void Reserve(std::size_t rows);

  Dataset Subset(std::span<const std::size_t> rows) const;
  void SetPartition(Partition partition);
  // Counts of label 0 and label 1. Binary datasets only.
  std::array<std::size_t, 2> ClassCounts() const;

  // Throws Leakage if any row is tagged as test data.
  void RequireTrainingRows(std::string_view consumer) const;

 private:
  std::vector<FeatureSpec> schema_;
  LabelKind label_kind_ = LabelKind::kBinary;
  Provenance provenance_ = Provenance::kSynthetic;
  std::vector<double> values_;
  std::vector<double> labels_;
  std::vector<RowTag> tags_;
};

}  // namespace glassbox

#endif  // GLASSBOX_DATASET_H_
