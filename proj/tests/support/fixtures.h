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

#ifndef GLASSBOX_TESTS_FIXTURES_H_
#define GLASSBOX_TESTS_FIXTURES_H_

#include <string>
#include <vector>

#include "glassbox/dataset.h"

namespace fixtures {

// Continuous features named x0, x1, ...; rows tagged as training rows with
// their index as source.
glassbox::Dataset MakeDataset(const std::vector<std::vector<double>>& rows,
                              const std::vector<double>& labels,
                              glassbox::LabelKind kind = glassbox::LabelKind::kBinary,
                              glassbox::Partition partition = glassbox::Partition::kTrain);

std::vector<glassbox::FeatureSpec> ContinuousSchema(std::size_t features);

// A fresh empty directory under the system temp dir.
std::string FreshDir(const std::string& name);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, const std::string& text);

}  // namespace fixtures

#endif  // GLASSBOX_TESTS_FIXTURES_H_
