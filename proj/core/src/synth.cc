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

#include "glassbox/synth.h"

#include <algorithm>
#include <cmath>

#include "glassbox/numeric.h"

namespace glassbox {

std::string SyntheticCsv(const SyntheticOptions& options) {
  Rng rng(options.seed);
  std::string out = "participant,time,PC_HR,PC_GSR,AVG_BR,headset,class,fms\n";
  const char* headsets[] = {"rift", "vive", "quest"};
  for (std::size_t p = 0; p < options.participants; ++p) {
    const double susceptibility = 0.5 + rng.UniformReal();
    const char* headset = headsets[rng.UniformIndex(3)];
    double level = 0.0;
    for (std::size_t t = 0; t < options.steps; ++t) {
      level = std::clamp(level + susceptibility * 0.25 + 0.4 * rng.Normal(), 0.0, 10.0);
      const double gsr = 4.0 * level + rng.Normal();
      const double hr = 1.5 * level + 3.0 * rng.Normal();
      const double br = 16.0 + 2.0 * rng.Normal();
      const double fms = std::round(level * 10.0) / 10.0;
      out += "p" + std::to_string(p) + "," + std::to_string(t) + "," + FormatDouble(hr) + "," +
             FormatDouble(gsr) + "," + FormatDouble(br) + "," + headset + "," +
             (fms >= 3.0 ? "1" : "0") + "," + FormatDouble(fms) + "\n";
    }
  }
  return out;
}

std::string SyntheticSchema() {
  return "@provenance = synthetic\n"
         "@label = class\n"
         "@target = fms\n"
         "@group = participant\n"
         "@order = time\n"
         "PC_HR = continuous | percent change in heart rate\n"
         "PC_GSR = continuous | percent change in skin conductance\n"
         "AVG_BR = continuous | breaths per minute\n"
         "headset = categorical\n";
}

}  // namespace glassbox
