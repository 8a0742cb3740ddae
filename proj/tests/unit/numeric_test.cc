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

#include "glassbox/numeric.h"

#include <cfloat>
#include <cmath>
#include <limits>
#include <set>

#include <gtest/gtest.h>

#include "glassbox/error.h"

namespace glassbox {
namespace {

TEST(LogisticTest, StaysInsideOpenInterval) {
  EXPECT_EQ(Logistic(0.0), 0.5);
  EXPECT_GT(Logistic(-1000.0), 0.0);
  EXPECT_LT(Logistic(1000.0), 1.0);
  for (double x : {-40.0, -3.0, 0.25, 7.0, 40.0}) {
    EXPECT_NEAR(Logistic(x), 1.0 / (1.0 + std::exp(-x)), 1e-15);
  }
}

TEST(SoftplusTest, MatchesDirectFormulaAndAvoidsOverflow) {
  for (double x : {-30.0, -1.0, 0.0, 2.0, 30.0}) {
    EXPECT_NEAR(Softplus(x), std::log1p(std::exp(x)), 1e-12);
  }
  EXPECT_DOUBLE_EQ(Softplus(1000.0), 1000.0);
  EXPECT_GE(Softplus(-1000.0), 0.0);
}

TEST(SplitPointTest, SeparatesNeighbours) {
  EXPECT_EQ(SplitPoint(1.0, 2.0), 1.5);
  const double lo = 1.0;
  const double hi = std::nextafter(lo, 2.0);
  const double t = SplitPoint(lo, hi);
  EXPECT_LE(lo, t);
  EXPECT_LT(t, hi);
  EXPECT_LT(SplitPoint(-DBL_MAX, DBL_MAX), DBL_MAX);
}

TEST(FormatDoubleTest, RoundTripsExactly) {
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    const double v = (rng.UniformReal() - 0.5) * std::pow(10.0, static_cast<double>(i % 40) - 20);
    EXPECT_EQ(std::stod(FormatDouble(v)), v);
  }
  EXPECT_EQ(FormatDouble(0.1), "0.1");
  EXPECT_EQ(FormatDouble(3.0), "3");
}

TEST(RngTest, SameSeedSameStream) {
  Rng a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.UniformIndex(1000);
    EXPECT_EQ(x, b.UniformIndex(1000));
    differs = differs || x != c.UniformIndex(1000);
  }
  EXPECT_TRUE(differs);
}

TEST(RngTest, UniformIndexCoversRange) {
  Rng rng(1);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const auto v = rng.UniformIndex(7);
    ASSERT_LT(v, 7u);
    seen.insert(v);
  }
  EXPECT_EQ(seen.size(), 7u);
}

TEST(RngTest, ShuffleIsAPermutation) {
  Rng rng(9);
  std::vector<int> v(50);
  for (int i = 0; i < 50; ++i) v[i] = i;
  rng.Shuffle(v);
  std::multiset<int> s(v.begin(), v.end());
  EXPECT_EQ(s.size(), 50u);
  EXPECT_EQ(*s.begin(), 0);
  EXPECT_EQ(*s.rbegin(), 49);
}

TEST(ErrorTest, CategoriesMapToExitCodes) {
  EXPECT_EQ(CategoryOf(ErrorCode::kInvalidConfig), ErrorCategory::kValidation);
  EXPECT_EQ(CategoryOf(ErrorCode::kSchemaMismatch), ErrorCategory::kValidation);
  EXPECT_EQ(CategoryOf(ErrorCode::kMissingColumn), ErrorCategory::kData);
  EXPECT_EQ(CategoryOf(ErrorCode::kIncompleteRun), ErrorCategory::kData);
  EXPECT_EQ(CategoryOf(ErrorCode::kDegenerateTargets), ErrorCategory::kTraining);
  EXPECT_EQ(CategoryOf(ErrorCode::kNotImplemented), ErrorCategory::kTraining);
  const Error e(ErrorCode::kEmptyFile, "nothing here");
  EXPECT_EQ(std::string(e.what()), "EmptyFile: nothing here");
  EXPECT_EQ(e.detail(), "nothing here");
}

}  // namespace
}  // namespace glassbox
