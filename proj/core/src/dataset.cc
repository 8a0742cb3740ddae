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

#include "glassbox/dataset.h"

#include <cmath>
#include <unordered_set>

#include "glassbox/error.h"
#include "glassbox/numeric.h"

namespace glassbox {

std::string_view ToString(FeatureKind kind) {
  return kind == FeatureKind::kContinuous ? "continuous" : "categorical";
}

std::string_view ToString(Provenance provenance) {
  switch (provenance) {
    case Provenance::kPhysiological: return "physiological";
    case Provenance::kGameplay: return "gameplay";
    case Provenance::kSynthetic: return "synthetic";
  }
  return "synthetic";
}

std::string_view ToString(LabelKind kind) {
  return kind == LabelKind::kBinary ? "binary" : "fms";
}

std::string_view ToString(Task task) {
  return task == Task::kClassification ? "classification" : "regression";
}

Task ParseTask(std::string_view text) {
  if (text == "classification") return Task::kClassification;
  if (text == "regression") return Task::kRegression;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown task '" + std::string(text) + "'");
}

FeatureKind ParseFeatureKind(std::string_view text) {
  if (text == "continuous") return FeatureKind::kContinuous;
  if (text == "categorical") return FeatureKind::kCategorical;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown feature kind '" + std::string(text) + "'");
}

Provenance ParseProvenance(std::string_view text) {
  if (text == "physiological") return Provenance::kPhysiological;
  if (text == "gameplay") return Provenance::kGameplay;
  if (text == "synthetic") return Provenance::kSynthetic;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown provenance '" + std::string(text) + "'");
}

void RequireSameSchema(std::span<const FeatureSpec> expected,
                       std::span<const FeatureSpec> actual) {
  if (expected.size() != actual.size()) {
    throw Error(ErrorCode::kSchemaMismatch,
                "expected " + std::to_string(expected.size()) +
                    " features, got " + std::to_string(actual.size()));
  }
  for (std::size_t j = 0; j < expected.size(); ++j) {
    if (expected[j].name != actual[j].name ||
        expected[j].kind != actual[j].kind) {
      throw Error(ErrorCode::kSchemaMismatch,
                  "feature " + std::to_string(j) + " is '" + actual[j].name +
                      "', expected '" + expected[j].name + "'");
    }
  }
}

Label Label::Binary(int value) {
  if (value != 0 && value != 1) {
    throw Error(ErrorCode::kInvalidLabel,
                "binary label must be 0 or 1, got " + std::to_string(value));
  }
  return Label(LabelKind::kBinary, value);
}

Label Label::Fms(double value) {
  if (!(value >= 0.0 && value <= 10.0)) {
    throw Error(ErrorCode::kInvalidLabel,
                "FMS score must lie in [0, 10], got " + std::to_string(value));
  }
  return Label(LabelKind::kFms, value);
}

Dataset::Dataset(std::vector<FeatureSpec> schema, LabelKind label_kind,
                 Provenance provenance)
    : schema_(std::move(schema)),
      label_kind_(label_kind),
      provenance_(provenance) {
  std::unordered_set<std::string> seen;
  for (const auto& spec : schema_) {
    if (!seen.insert(spec.name).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate feature name '" + spec.name + "'");
    }
  }
}

std::vector<double> Dataset::Column(std::size_t j) const {
  std::vector<double> column(num_rows());
  for (std::size_t i = 0; i < num_rows(); ++i) column[i] = value(i, j);
  return column;
}

int Dataset::FeatureIndex(std::string_view name) const {
  for (std::size_t j = 0; j < schema_.size(); ++j) {
    if (schema_[j].name == name) return static_cast<int>(j);
  }
  return -1;
}

void Dataset::AddRow(std::span<const double> values, double label,
                     RowTag tag) {
  if (values.size() != schema_.size()) {
    throw Error(ErrorCode::kArityMismatch,
                "row has " + std::to_string(values.size()) +
                    " values, schema has " + std::to_string(schema_.size()));
  }
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kUnparsableValue, "non-finite feature value");
    }
  }
  if (label_kind_ == LabelKind::kBinary) {
    if (label != 0.0 && label != 1.0) {
      throw Error(ErrorCode::kInvalidLabel,
                  "binary label must be 0 or 1, got " + FormatDouble(label));
    }
  } else {
    Label::Fms(label);
  }
  values_.insert(values_.end(), values.begin(), values.end());
  labels_.push_back(label);
  tags_.push_back(tag);
}

void Dataset::Reserve(std::size_t rows) {
  values_.reserve(rows * schema_.size());
  labels_.reserve(rows);
  tags_.reserve(rows);
}

Dataset Dataset::Subset(std::span<const std::size_t> rows) const {
  Dataset out(schema_, label_kind_, provenance_);
  out.Reserve(rows.size());
  for (std::size_t i : rows) {
    auto r = row(i);
    out.values_.insert(out.values_.end(), r.begin(), r.end());
    out.labels_.push_back(labels_[i]);
    out.tags_.push_back(tags_[i]);
  }
  return out;
}

void Dataset::SetPartition(Partition partition) {
  for (auto& tag : tags_) tag.partition = partition;
}

std::array<std::size_t, 2> Dataset::ClassCounts() const {
  if (label_kind_ != LabelKind::kBinary) {
    throw Error(ErrorCode::kInvalidArgument,
                "class counts requested on a regression dataset");
  }
  std::array<std::size_t, 2> counts{0, 0};
  for (double y : labels_) ++counts[y != 0.0 ? 1 : 0];
  return counts;
}

void Dataset::RequireTrainingRows(std::string_view consumer) const {
  for (const auto& tag : tags_) {
    if (tag.partition == Partition::kTest) {
      throw Error(ErrorCode::kLeakage,
                  std::string(consumer) + " received test row (source " +
                      std::to_string(tag.source) + ")");
    }
  }
}

}  // namespace glassbox
