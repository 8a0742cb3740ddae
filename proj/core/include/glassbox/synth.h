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

#ifndef GLASSBOX_SYNTH_H_
#define GLASSBOX_SYNTH_H_

#include <cstddef>
#include <cstdint>
#include <string>

namespace glassbox {

// Demo data shaped like a per-participant physiological recording: a latent
// sickness level drifts over time, drives PC_GSR strongly and PC_HR weakly,
// and sets both the FMS score and the binary class. AVG_BR is pure noise and
// headset is a categorical column.
struct SyntheticOptions {
  std::size_t participants = 12;
  std::size_t steps = 40;
  std::uint64_t seed = 0;
};

std::string SyntheticCsv(const SyntheticOptions& options);
// Schema file text matching SyntheticCsv's columns.
std::string SyntheticSchema();

}  // namespace glassbox

#endif  // GLASSBOX_SYNTH_H_
