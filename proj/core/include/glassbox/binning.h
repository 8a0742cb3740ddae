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

#ifndef GLASSBOX_BINNING_H_
#define GLASSBOX_BINNING_H_

#include <cstddef>
#include <span>
#include <vector>

#include "glassbox/dataset.h"

namespace glassbox {

// Discretization of one feature. Bin b holds values in (cuts[b-1], cuts[b]];
// values outside the training range clamp to the first or last bin.
struct BinMap {
  std::size_t feature = 0;
  FeatureKind kind = FeatureKind::kContinuous;
  std::vector<double> cuts;
  // Categorical only: the observed codes in ascending order, one per bin.
  std::vector<double> categories;

  std::size_t num_bins() const { return cuts.size() + 1; }
  std::size_t BinOf(double value) const;

  friend bool operator==(const BinMap&, const BinMap&) = default;
};

// Equal-frequency bins over `values` for continuous features (at most
// max_bins; boundaries that fall inside a run of duplicates move to the
// nearest value change, and coinciding boundaries merge). Categorical
// features get one bin per observed code.
BinMap BuildBinMap(std::span<const double> values, FeatureKind kind,
                   std::size_t max_bins);

std::vector<BinMap> BuildBins(const Dataset& train, std::size_t max_bins);

// Per-bin training-sample counts.
std::vector<std::size_t> BinCounts(const BinMap& bins,
                                   std::span<const double> values);

}  // namespace glassbox

#endif  // GLASSBOX_BINNING_H_
