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

#ifndef GLASSBOX_MODEL_IO_H_
#define GLASSBOX_MODEL_IO_H_

#include <string>
#include <string_view>
#include <variant>

#include "glassbox/cart.h"
#include "glassbox/ebm.h"
#include "glassbox/linear.h"

namespace glassbox {

// Model files are JSON documents tagged with
//   "format": "glassbox-model", "format_version": 1, "model": <kind>
// and hold everything needed to predict: schema (with category
// dictionaries), bins, shapes, coefficients, hyperparameters and training
// logs. Doubles are written in shortest round-trip form, so
// save -> load -> predict is bit-identical.
inline constexpr int kModelFormatVersion = 1;

using AnyModel = std::variant<EbmModel, DecisionTree, LinearModel>;

std::string SerializeModel(const AnyModel& model);
AnyModel ParseModel(std::string_view text);

void SaveModel(const std::string& path, const AnyModel& model);
AnyModel LoadModel(const std::string& path);

}  // namespace glassbox

#endif  // GLASSBOX_MODEL_IO_H_
