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

#include "support/fixtures.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

namespace fixtures {

std::vector<glassbox::FeatureSpec> ContinuousSchema(std::size_t features) {
  std::vector<glassbox::FeatureSpec> schema(features);
  for (std::size_t j = 0; j < features; ++j) schema[j].name = "x" + std::to_string(j);
  return schema;
}

glassbox::Dataset MakeDataset(const std::vector<std::vector<double>>& rows,
                              const std::vector<double>& labels, glassbox::LabelKind kind,
                              glassbox::Partition partition) {
  const std::size_t d = rows.empty() ? 0 : rows[0].size();
  glassbox::Dataset ds(ContinuousSchema(d), kind, glassbox::Provenance::kSynthetic);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    ds.AddRow(rows[i], labels[i], glassbox::RowTag{static_cast<std::int64_t>(i), partition});
  }
  return ds;
}

std::string FreshDir(const std::string& name) {
  namespace fs = std::filesystem;
  const fs::path dir =
      fs::temp_directory_path() / ("glassbox-test-" + std::to_string(::getpid())) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir.string();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace fixtures
