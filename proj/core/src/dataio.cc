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

#include "glassbox/dataio.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "glassbox/csv.h"
#include "glassbox/error.h"
#include "glassbox/numeric.h"

namespace glassbox {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool IsMissing(std::string_view cell) {
  const std::string v = Lower(Trim(cell));
  return v.empty() || v == "na" || v == "nan" || v == "n/a" || v == "null" ||
         v == "?";
}

bool ParseNumber(std::string_view text, double& out) {
  text = Trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size() &&
         std::isfinite(out);
}

std::string Location(std::size_t line, std::string_view column) {
  return "line " + std::to_string(line) + ", column '" + std::string(column) +
         "'";
}

}  // namespace

SchemaFile ParseSchema(std::string_view text) {
  SchemaFile schema;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  bool saw_provenance = false;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kInvalidConfig,
                  "schema line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key(Trim(line.substr(0, eq)));
    std::string_view value = Trim(line.substr(eq + 1));
    if (key.empty()) {
      throw Error(ErrorCode::kInvalidConfig,
                  "schema line " + std::to_string(line_no) + ": empty key");
    }
    if (key.front() == '@') {
      const std::string v(value);
      if (key == "@provenance") {
        schema.provenance = ParseProvenance(v);
        saw_provenance = true;
      } else if (key == "@label") {
        schema.label_column = v;
      } else if (key == "@target") {
        schema.target_column = v;
      } else if (key == "@group") {
        schema.group_column = v;
      } else if (key == "@order") {
        schema.order_column = v;
      } else {
        throw Error(ErrorCode::kInvalidConfig,
                    "schema line " + std::to_string(line_no) +
                        ": unknown directive " + key);
      }
      continue;
    }
    FeatureSpec spec;
    spec.name = key;
    std::string_view kind = value;
    if (auto bar = value.find('|'); bar != std::string_view::npos) {
      kind = Trim(value.substr(0, bar));
      spec.unit_note = std::string(Trim(value.substr(bar + 1)));
    }
    spec.kind = ParseFeatureKind(kind);
    for (const auto& existing : schema.features) {
      if (existing.name == spec.name) {
        throw Error(ErrorCode::kInvalidConfig,
                    "schema line " + std::to_string(line_no) +
                        ": duplicate column '" + spec.name + "'");
      }
    }
    schema.features.push_back(std::move(spec));
  }
  if (!saw_provenance) {
    throw Error(ErrorCode::kInvalidConfig, "schema is missing @provenance");
  }
  if (schema.features.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "schema lists no feature columns");
  }
  return schema;
}

SchemaFile LoadSchemaFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open schema '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseSchema(buffer.str());
}

std::string FormatSchema(const SchemaFile& schema) {
  std::string out;
  out += "@provenance = " + std::string(ToString(schema.provenance)) + "\n";
  if (!schema.label_column.empty()) out += "@label = " + schema.label_column + "\n";
  if (!schema.target_column.empty()) out += "@target = " + schema.target_column + "\n";
  if (!schema.group_column.empty()) out += "@group = " + schema.group_column + "\n";
  if (!schema.order_column.empty()) out += "@order = " + schema.order_column + "\n";
  for (const auto& f : schema.features) {
    out += f.name + " = " + std::string(ToString(f.kind));
    if (!f.unit_note.empty()) out += " | " + f.unit_note;
    out += "\n";
  }
  return out;
}

namespace {

// "Moderate_Sickness" and "moderate  sickness" both become "moderate sickness".
std::string ClassKey(std::string_view raw) {
  std::string key;
  for (char c : Lower(Trim(raw))) {
    if (c == '_' || c == '-' || std::isspace(static_cast<unsigned char>(c))) c = ' ';
    if (c == ' ' && (key.empty() || key.back() == ' ')) continue;
    key += c;
  }
  if (!key.empty() && key.back() == ' ') key.pop_back();
  return key;
}

}  // namespace

Label RelabelBinary(std::string_view raw_class, Provenance provenance) {
  const std::string name = ClassKey(raw_class);
  switch (provenance) {
    case Provenance::kPhysiological:
      if (name == "low sickness") return Label::Binary(0);
      if (name == "moderate sickness" || name == "acute sickness") {
        return Label::Binary(1);
      }
      break;
    case Provenance::kGameplay:
      if (name == "none") return Label::Binary(0);
      if (name == "slight" || name == "moderate" || name == "severe") {
        return Label::Binary(1);
      }
      break;
    case Provenance::kSynthetic:
      if (name == "0") return Label::Binary(0);
      if (name == "1") return Label::Binary(1);
      break;
  }
  throw Error(ErrorCode::kUnknownClassName,
              "'" + std::string(raw_class) + "' is not a " +
                  std::string(ToString(provenance)) + " class name");
}

LoadResult LoadDataset(const std::string& path, const SchemaFile& schema,
                       LabelKind label_kind) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open dataset '" + path + "'");
  try {
    return LoadDataset(in, schema, label_kind);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.detail());
  }
}

LoadResult LoadDataset(std::istream& in, const SchemaFile& schema,
                       LabelKind label_kind) {
  const csv::Table table = csv::Parse(in);
  if (table.rows.empty()) throw Error(ErrorCode::kEmptyFile, "no data rows");

  std::unordered_map<std::string, std::size_t> column_of;
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    column_of.emplace(std::string(Trim(table.header[c])), c);
  }
  auto require = [&](const std::string& name) {
    auto it = column_of.find(name);
    if (it == column_of.end()) {
      throw Error(ErrorCode::kMissingColumn, "header has no column '" + name + "'");
    }
    return it->second;
  };

  std::vector<std::size_t> feature_cols;
  for (const auto& f : schema.features) feature_cols.push_back(require(f.name));
  const std::string& label_name = label_kind == LabelKind::kBinary
                                      ? schema.label_column
                                      : schema.target_column;
  if (label_name.empty()) {
    throw Error(ErrorCode::kInvalidConfig,
                label_kind == LabelKind::kBinary
                    ? "schema has no @label column for classification"
                    : "schema has no @target column for regression");
  }
  const std::size_t label_col = require(label_name);
  const bool grouped = !schema.group_column.empty();
  const bool ordered = !schema.order_column.empty();
  const std::size_t group_col = grouped ? require(schema.group_column) : 0;
  const std::size_t order_col = ordered ? require(schema.order_column) : 0;

  std::vector<FeatureSpec> specs = schema.features;
  for (auto& s : specs) s.categories.clear();
  std::vector<std::unordered_map<std::string, double>> codes(specs.size());
  std::unordered_map<std::string, std::int64_t> group_codes;

  struct Parsed {
    std::vector<double> values;
    double label;
    std::int64_t group;
    double order;
    std::int64_t source;
  };
  std::vector<Parsed> parsed;
  parsed.reserve(table.rows.size());

  LoadResult result;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& cells = table.rows[r];
    const std::size_t line = table.line_numbers[r];
    auto cell = [&](std::size_t c) -> std::string_view {
      return c < cells.size() ? std::string_view(cells[c]) : std::string_view();
    };

    bool missing = IsMissing(cell(label_col)) ||
                   (grouped && IsMissing(cell(group_col))) ||
                   (ordered && IsMissing(cell(order_col)));
    for (std::size_t c : feature_cols) missing = missing || IsMissing(cell(c));
    if (missing) {
      ++result.rejected_rows;
      continue;
    }

    Parsed row;
    row.source = static_cast<std::int64_t>(r);
    row.values.resize(specs.size());
    for (std::size_t j = 0; j < specs.size(); ++j) {
      const std::string_view text = cell(feature_cols[j]);
      if (specs[j].kind == FeatureKind::kContinuous) {
        if (!ParseNumber(text, row.values[j])) {
          throw Error(ErrorCode::kUnparsableValue,
                      Location(line, specs[j].name) + ": '" + std::string(text) + "'");
        }
      } else {
        const std::string key(Trim(text));
        auto [it, inserted] =
            codes[j].emplace(key, static_cast<double>(codes[j].size()));
        if (inserted) specs[j].categories.push_back(key);
        row.values[j] = it->second;
      }
    }

    const std::string_view label_text = cell(label_col);
    try {
      if (label_kind == LabelKind::kBinary) {
        row.label = RelabelBinary(label_text, schema.provenance).value();
      } else {
        double fms;
        if (!ParseNumber(label_text, fms)) {
          throw Error(ErrorCode::kUnparsableValue, "'" + std::string(label_text) + "'");
        }
        row.label = Label::Fms(fms).value();
      }
    } catch (const Error& e) {
      throw Error(e.code(), Location(line, label_name) + ": " + e.detail());
    }

    if (grouped) {
      auto [it, inserted] = group_codes.emplace(
          std::string(Trim(cell(group_col))),
          static_cast<std::int64_t>(group_codes.size()));
      row.group = it->second;
    } else {
      row.group = 0;
    }
    row.order = 0;
    if (ordered && !ParseNumber(cell(order_col), row.order)) {
      throw Error(ErrorCode::kUnparsableValue,
                  Location(line, schema.order_column) + ": '" +
                      std::string(cell(order_col)) + "'");
    }
    parsed.push_back(std::move(row));
  }

  if (parsed.empty()) {
    throw Error(ErrorCode::kEmptyFile, "every data row has a missing value");
  }
  if (result.rejected_rows > 0) {
    result.warnings.push_back("rejected " + std::to_string(result.rejected_rows) +
                              " row(s) with missing values");
  }
  if (ordered) {
    std::stable_sort(parsed.begin(), parsed.end(),
                     [](const Parsed& a, const Parsed& b) {
                       if (a.group != b.group) return a.group < b.group;
                       return a.order < b.order;
                     });
  }

  result.data = Dataset(std::move(specs), label_kind, schema.provenance);
  result.data.Reserve(parsed.size());
  for (const auto& row : parsed) {
    result.data.AddRow(row.values, row.label, RowTag{row.source});
    if (grouped) result.groups.push_back(row.group);
  }
  return result;
}

std::pair<Dataset, Dataset> Split(const Dataset& ds, double train_fraction,
                                  std::uint64_t seed) {
  if (ds.empty()) throw Error(ErrorCode::kEmptyDataset, "cannot split an empty dataset");
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "train fraction must lie in (0, 1)");
  }
  const std::size_t n = ds.num_rows();
  // The small offset keeps products like 10 * 0.7 from flooring to 6.
  const auto n_train = static_cast<std::size_t>(
      std::floor(static_cast<double>(n) * train_fraction + 1e-9));

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  rng.Shuffle(order);

  std::vector<std::size_t> train_rows(order.begin(), order.begin() + n_train);
  std::vector<std::size_t> test_rows(order.begin() + n_train, order.end());
  std::sort(train_rows.begin(), train_rows.end());
  std::sort(test_rows.begin(), test_rows.end());

  Dataset train = ds.Subset(train_rows);
  Dataset test = ds.Subset(test_rows);
  train.SetPartition(Partition::kTrain);
  test.SetPartition(Partition::kTest);
  return {std::move(train), std::move(test)};
}

Dataset Oversample(const Dataset& train, std::uint64_t seed) {
  train.RequireTrainingRows("oversampler");
  const auto counts = train.ClassCounts();
  if (counts[0] == 0 || counts[1] == 0) {
    throw Error(ErrorCode::kSingleClassDataset,
                "oversampling needs both classes present");
  }
  const double minority_label = counts[1] < counts[0] ? 1.0 : 0.0;
  std::vector<std::size_t> minority;
  for (std::size_t i = 0; i < train.num_rows(); ++i) {
    if (train.label(i) == minority_label) minority.push_back(i);
  }
  const std::size_t needed =
      (counts[0] > counts[1] ? counts[0] - counts[1] : counts[1] - counts[0]);

  Dataset out = train;
  out.Reserve(train.num_rows() + needed);
  Rng rng(seed);
  for (std::size_t k = 0; k < needed; ++k) {
    const std::size_t i = minority[rng.UniformIndex(minority.size())];
    RowTag tag = train.tag(i);
    tag.oversampled_copy = true;
    out.AddRow(train.row(i), train.label(i), tag);
  }
  return out;
}

std::vector<FeatureSpec> WindowSchema(std::span<const FeatureSpec> schema,
                                      std::size_t window) {
  std::vector<FeatureSpec> out;
  out.reserve(schema.size() * window);
  for (std::size_t step = 0; step < window; ++step) {
    const std::size_t lag = window - step;
    for (const auto& f : schema) {
      FeatureSpec spec = f;
      spec.name = f.name + "[t-" + std::to_string(lag) + "]";
      out.push_back(std::move(spec));
    }
  }
  return out;
}

namespace {

void AppendWindows(const Dataset& series, std::size_t begin, std::size_t end,
                   std::size_t window, WindowedSeries& out) {
  const std::size_t f = series.num_features();
  std::vector<double> flat(f * window);
  for (std::size_t start = begin; start + window < end; ++start) {
    for (std::size_t step = 0; step < window; ++step) {
      auto r = series.row(start + step);
      std::copy(r.begin(), r.end(), flat.begin() + step * f);
    }
    const std::size_t target = start + window;
    out.data.AddRow(flat, series.label(target),
                    RowTag{static_cast<std::int64_t>(out.target_rows.size())});
    out.target_rows.push_back(series.tag(target).source);
  }
}

}  // namespace

WindowedSeries MakeWindows(const Dataset& series, std::size_t window) {
  return MakeWindows(series, {}, window);
}

WindowedSeries MakeWindows(const Dataset& series,
                           std::span<const std::int64_t> groups,
                           std::size_t window) {
  if (window == 0) throw Error(ErrorCode::kInvalidArgument, "window must be positive");
  if (series.label_kind() != LabelKind::kFms) {
    throw Error(ErrorCode::kInvalidArgument, "windows need FMS-labelled series");
  }
  if (!groups.empty() && groups.size() != series.num_rows()) {
    throw Error(ErrorCode::kLengthMismatch, "one group code per row required");
  }
  WindowedSeries out;
  out.window = window;
  out.data = Dataset(WindowSchema(series.schema(), window), LabelKind::kFms,
                     series.provenance());
  std::size_t begin = 0;
  while (begin < series.num_rows()) {
    std::size_t end = begin + 1;
    if (groups.empty()) {
      end = series.num_rows();
    } else {
      while (end < series.num_rows() && groups[end] == groups[begin]) ++end;
    }
    AppendWindows(series, begin, end, window, out);
    begin = end;
  }
  if (out.data.empty()) {
    throw Error(ErrorCode::kSeriesTooShort,
                "no series is longer than the window of " + std::to_string(window));
  }
  return out;
}

namespace {

std::string_view PartitionName(Partition p) {
  switch (p) {
    case Partition::kTrain: return "train";
    case Partition::kTest: return "test";
    default: return "none";
  }
}

Partition ParsePartition(std::string_view s) {
  if (s == "train") return Partition::kTrain;
  if (s == "test") return Partition::kTest;
  if (s == "none") return Partition::kUnassigned;
  throw Error(ErrorCode::kCorruptFile, "bad partition tag '" + std::string(s) + "'");
}

}  // namespace

void WriteDatasetCsv(const std::string& path, const Dataset& ds) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  std::vector<std::string> header = {"__source", "__partition", "__copy"};
  for (const auto& f : ds.schema()) header.push_back(f.name);
  header.push_back("__label");
  out << csv::JoinRow(header) << '\n';
  for (std::size_t i = 0; i < ds.num_rows(); ++i) {
    const RowTag& tag = ds.tag(i);
    out << tag.source << ',' << PartitionName(tag.partition) << ','
        << (tag.oversampled_copy ? 1 : 0);
    for (double v : ds.row(i)) out << ',' << FormatDouble(v);
    out << ',' << FormatDouble(ds.label(i)) << '\n';
  }
  if (!out) throw Error(ErrorCode::kIo, "failed writing '" + path + "'");
}

Dataset ReadDatasetCsv(const std::string& path, std::vector<FeatureSpec> schema,
                       LabelKind label_kind, Provenance provenance) {
  const csv::Table table = csv::ReadFile(path);
  const std::size_t f = schema.size();
  if (table.header.size() != f + 4) {
    throw Error(ErrorCode::kCorruptFile, path + ": unexpected column count");
  }
  for (std::size_t j = 0; j < f; ++j) {
    if (table.header[3 + j] != schema[j].name) {
      throw Error(ErrorCode::kSchemaMismatch,
                  path + ": column '" + table.header[3 + j] + "' expected '" +
                      schema[j].name + "'");
    }
  }
  Dataset ds(std::move(schema), label_kind, provenance);
  ds.Reserve(table.rows.size());
  std::vector<double> values(f);
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& cells = table.rows[r];
    if (cells.size() != f + 4) {
      throw Error(ErrorCode::kCorruptFile,
                  path + ": line " + std::to_string(table.line_numbers[r]) +
                      " has the wrong field count");
    }
    RowTag tag;
    double source;
    if (!ParseNumber(cells[0], source)) {
      throw Error(ErrorCode::kCorruptFile, path + ": bad __source");
    }
    tag.source = static_cast<std::int64_t>(source);
    tag.partition = ParsePartition(cells[1]);
    tag.oversampled_copy = cells[2] == "1";
    for (std::size_t j = 0; j < f; ++j) {
      if (!ParseNumber(cells[3 + j], values[j])) {
        throw Error(ErrorCode::kCorruptFile,
                    path + ": " + Location(table.line_numbers[r], ds.schema()[j].name));
      }
    }
    double label;
    if (!ParseNumber(cells[3 + f], label)) {
      throw Error(ErrorCode::kCorruptFile, path + ": bad __label");
    }
    ds.AddRow(values, label, tag);
  }
  return ds;
}

}  // namespace glassbox
