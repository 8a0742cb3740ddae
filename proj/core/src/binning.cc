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

#include "glassbox/binning.h"

#include <algorithm>

#include "glassbox/error.h"
#include "glassbox/numeric.h"

namespace glassbox {

std::size_t BinMap::BinOf(double value) const {
  return static_cast<std::size_t>(
      std::lower_bound(cuts.begin(), cuts.end(), value) - cuts.begin());
}

BinMap BuildBinMap(std::span<const double> values, FeatureKind kind,
                   std::size_t max_bins) {
  if (values.empty()) throw Error(ErrorCode::kEmptyDataset, "cannot bin zero values");
  if (max_bins < 1) throw Error(ErrorCode::kInvalidArgument, "max_bins must be >= 1");

  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> distinct = sorted;
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  BinMap map;
  map.kind = kind;
  if (kind == FeatureKind::kCategorical || distinct.size() <= max_bins) {
    for (std::size_t k = 1; k < distinct.size(); ++k) {
      map.cuts.push_back(SplitPoint(distinct[k - 1], distinct[k]));
    }
    if (kind == FeatureKind::kCategorical) map.categories = distinct;
    return map;
  }

  // Boundary positions q (1 <= q < n) where sorted[q-1] < sorted[q].
  const std::size_t n = sorted.size();
  std::vector<std::size_t> changes;
  for (std::size_t q = 1; q < n; ++q) {
    if (sorted[q - 1] < sorted[q]) changes.push_back(q);
  }
  std::vector<std::size_t> chosen;
  for (std::size_t k = 1; k < max_bins; ++k) {
    const std::size_t target = k * n / max_bins;
    auto right = std::lower_bound(changes.begin(), changes.end(), target);
    std::size_t pick;
    if (right == changes.end()) {
      pick = changes.back();
    } else if (right == changes.begin() || *right == target) {
      pick = *right;
    } else {
      const std::size_t hi = *right;
      const std::size_t lo = *(right - 1);
      pick = (target - lo <= hi - target) ? lo : hi;
    }
    chosen.push_back(pick);
  }
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  for (std::size_t q : chosen) {
    map.cuts.push_back(SplitPoint(sorted[q - 1], sorted[q]));
  }
  return map;
}

std::vector<BinMap> BuildBins(const Dataset& train, std::size_t max_bins) {
  train.RequireTrainingRows("binner");
  if (train.empty()) throw Error(ErrorCode::kEmptyDataset, "cannot bin an empty dataset");
  std::vector<BinMap> maps;
  maps.reserve(train.num_features());
  for (std::size_t j = 0; j < train.num_features(); ++j) {
    const std::vector<double> column = train.Column(j);
    BinMap map = BuildBinMap(column, train.schema()[j].kind, max_bins);
    map.feature = j;
    maps.push_back(std::move(map));
  }
  return maps;
}

std::vector<std::size_t> BinCounts(const BinMap& bins,
                                   std::span<const double> values) {
  std::vector<std::size_t> counts(bins.num_bins(), 0);
  for (double v : values) ++counts[bins.BinOf(v)];
  return counts;
}

}  // namespace glassbox
