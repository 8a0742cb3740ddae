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

// JSON conversions shared by the model files, run artifacts and reports.
// Internal to the core library.

#ifndef GLASSBOX_SRC_JSON_IO_H_
#define GLASSBOX_SRC_JSON_IO_H_

#include <string>
#include <vector>

#include "glassbox/dataset.h"
#include "glassbox/ebm.h"
#include "glassbox/explain.h"
#include "glassbox/metrics.h"
#include "json.hpp"

namespace glassbox {

nlohmann::json SchemaToJson(const std::vector<FeatureSpec>& schema);
std::vector<FeatureSpec> SchemaFromJson(const nlohmann::json& j);

nlohmann::json EbmHyperToJson(const EbmHyper& hyper);
EbmHyper EbmHyperFromJson(const nlohmann::json& j);

nlohmann::json ToJson(const GlobalExplanation& g);
nlohmann::json ToJson(const LocalExplanation& l);
nlohmann::json ToJson(const TreeTrace& t, const DecisionTree& tree);
nlohmann::json ToJson(const ClassificationMetrics& m, const ConfusionCounts& c);
nlohmann::json ToJson(const RegressionMetrics& m);

// Pretty-printed with sorted keys and a trailing newline.
std::string Dump(const nlohmann::json& j);

std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& text);

}  // namespace glassbox

#endif  // GLASSBOX_SRC_JSON_IO_H_
