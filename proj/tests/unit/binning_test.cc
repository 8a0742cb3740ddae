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
#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

#include "glassbox/numeric.h"
#include "support/expect_error.h"
#include "support/fixtures.h"

namespace glassbox {
namespace {

TEST(BinningTest, ConstantColumnIsOneBin) {
  const std::vector<double> v(50, 3.25);
  const BinMap map = BuildBinMap(v, FeatureKind::kContinuous, 16);
  EXPECT_EQ(map.num_bins(), 1u);
  EXPECT_EQ(map.BinOf(-100.0), 0u);
  EXPECT_EQ(map.BinOf(100.0), 0u);
}

TEST(BinningTest, OneToHundredInFourBins) {
  std::vector<double> v(100);
  std::iota(v.begin(), v.end(), 1.0);
  // Reference: cut halfway between the (k n / B)-th and next order statistic.
  std::vector<double> expected;
  for (std::size_t k = 1; k < 4; ++k) {
    const std::size_t q = k * v.size() / 4;
    expected.push_back((v[q - 1] + v[q]) / 2);
  }
  ASSERT_EQ(expected, (std::vector<double>{25.5, 50.5, 75.5}));
  const BinMap map = BuildBinMap(v, FeatureKind::kContinuous, 4);
  EXPECT_EQ(map.cuts, expected);
  EXPECT_EQ(BinCounts(map, v), (std::vector<std::size_t>{25, 25, 25, 25}));
}

TEST(BinningTest, CategoricalCodesGetOneBinEach) {
  const std::vector<double> v = {2, 0, 1, 1, 2, 0, 0};
  const BinMap map = BuildBinMap(v, FeatureKind::kCategorical, 2);
  EXPECT_EQ(map.num_bins(), 3u);
  EXPECT_EQ(map.categories, (std::vector<double>{0, 1, 2}));
  EXPECT_EQ(map.BinOf(0), 0u);
  EXPECT_EQ(map.BinOf(1), 1u);
  EXPECT_EQ(map.BinOf(2), 2u);
}

TEST(BinningTest, FewDistinctValuesGetTheirOwnBins) {
  const std::vector<double> v = {5, 1, 1, 5, 9, 9, 9};
  const BinMap map = BuildBinMap(v, FeatureKind::kContinuous, 8);
  EXPECT_EQ(map.cuts, (std::vector<double>{3, 7}));
}

TEST(BinningTest, DuplicateHeavyColumnsMergeBoundaries) {
  std::vector<double> v(90, 0.0);
  for (int i = 0; i < 10; ++i) v.push_back(i + 1);
  const BinMap map = BuildBinMap(v, FeatureKind::kContinuous, 4);
  ASSERT_FALSE(map.cuts.empty());
  EXPECT_TRUE(std::is_sorted(map.cuts.begin(), map.cuts.end()));
  EXPECT_TRUE(std::adjacent_find(map.cuts.begin(), map.cuts.end()) == map.cuts.end());
  // The zero run stays in one bin.
  EXPECT_EQ(BinCounts(map, v)[0], 90u);
}

TEST(BinningTest, RandomColumnsSatisfyInvariants) {
  Rng rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.UniformIndex(400);
    const std::size_t bins = 2 + rng.UniformIndex(40);
    const std::size_t levels = 1 + rng.UniformIndex(60);
    std::vector<double> v(n);
    for (auto& x : v) x = static_cast<double>(rng.UniformIndex(levels)) * 0.37 - 3.0;
    const BinMap map = BuildBinMap(v, FeatureKind::kContinuous, bins);
    ASSERT_LE(map.num_bins(), bins);
    for (std::size_t k = 1; k < map.cuts.size(); ++k) ASSERT_LT(map.cuts[k - 1], map.cuts[k]);
    const auto counts = BinCounts(map, v);
    ASSERT_EQ(std::accumulate(counts.begin(), counts.end(), std::size_t{0}), n);
    for (auto c : counts) ASSERT_GT(c, 0u);
    // Values on either side of a cut land in adjacent bins.
    for (std::size_t b = 0; b < map.cuts.size(); ++b) {
      ASSERT_EQ(map.BinOf(map.cuts[b]), b);
      ASSERT_EQ(map.BinOf(std::nextafter(map.cuts[b], 1e300)), b + 1);
    }
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    ASSERT_EQ(map.BinOf(*lo - 1000), 0u);
    ASSERT_EQ(map.BinOf(*hi + 1000), map.num_bins() - 1);
  }
}

TEST(BinningTest, RowOrderDoesNotMatter) {
  Rng rng(2);
  std::vector<std::vector<double>> rows;
  std::vector<double> labels;
  for (int i = 0; i < 300; ++i) {
    rows.push_back({rng.Normal(), static_cast<double>(rng.UniformIndex(5))});
    labels.push_back(i % 2);
  }
  const auto a = BuildBins(fixtures::MakeDataset(rows, labels), 32);
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  rng.Shuffle(order);
  std::vector<std::vector<double>> shuffled;
  std::vector<double> shuffled_labels;
  for (auto i : order) {
    shuffled.push_back(rows[i]);
    shuffled_labels.push_back(labels[i]);
  }
  EXPECT_EQ(BuildBins(fixtures::MakeDataset(shuffled, shuffled_labels), 32), a);
}

TEST(BinningTest, RefusesTestRows) {
  const auto test = fixtures::MakeDataset({{1}, {2}}, {0, 1}, LabelKind::kBinary, Partition::kTest);
  EXPECT_GLASSBOX_ERROR(BuildBins(test, 8), ErrorCode::kLeakage);
}

}  // namespace
}  // namespace glassbox
