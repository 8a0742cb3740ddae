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

#ifndef GLASSBOX_NUMERIC_H_
#define GLASSBOX_NUMERIC_H_

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace glassbox {

// Logistic sigmoid, clamped so the result stays strictly inside (0, 1).
double Logistic(double logit);

// log(1 + exp(x)) without overflow.
double Softplus(double x);

// Threshold between two consecutive distinct sorted values `lo < hi`. The
// result t satisfies lo <= t < hi, so "value <= t" routes lo left and hi right.
double SplitPoint(double lo, double hi);

// Shortest decimal text that parses back to the same double.
std::string FormatDouble(double value);

// Seeded generator with platform-independent integer sampling. The standard
// distributions are implementation-defined, which would break cross-machine
// reproducibility of splits and oversampling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [0, bound). `bound` must be positive.
  std::uint64_t UniformIndex(std::uint64_t bound);

  // Uniform double in [0, 1).
  double UniformReal();

  // Standard normal via Box-Muller.
  double Normal();

  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = UniformIndex(i);
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace glassbox

#endif  // GLASSBOX_NUMERIC_H_
