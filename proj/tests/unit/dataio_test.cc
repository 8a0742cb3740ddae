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

#include "glassbox/dataio.h"

#include <algorithm>
#include <map>
#include <sstream>

#include <gtest/gtest.h>

#include "glassbox/numeric.h"
#include "support/expect_error.h"
#include "support/fixtures.h"

namespace glassbox {
namespace {

SchemaFile TwoFeatureSchema() {
  return ParseSchema(
      "@provenance = physiological\n"
      "@label = label\n"
      "PC_HR = continuous | percent\n"
      "PC_GSR = continuous\n");
}

LoadResult LoadText(const std::string& text, const SchemaFile& schema,
                    LabelKind kind = LabelKind::kBinary) {
  std::istringstream in(text);
  return LoadDataset(in, schema, kind);
}

TEST(SchemaFileTest, ParsesDirectivesAndFeatures) {
  const SchemaFile s = ParseSchema(
      "# demo\n"
      "@provenance = gameplay\n"
      "@label = class\n"
      "@target = fms\n"
      "@group = player\n"
      "@order = t\n"
      "speed = continuous | km/h\n"
      "user gender = categorical   # comment\n");
  EXPECT_EQ(s.provenance, Provenance::kGameplay);
  EXPECT_EQ(s.label_column, "class");
  EXPECT_EQ(s.target_column, "fms");
  EXPECT_EQ(s.group_column, "player");
  EXPECT_EQ(s.order_column, "t");
  ASSERT_EQ(s.features.size(), 2u);
  EXPECT_EQ(s.features[0].unit_note, "km/h");
  EXPECT_EQ(s.features[1].name, "user gender");
  EXPECT_EQ(s.features[1].kind, FeatureKind::kCategorical);
  const SchemaFile again = ParseSchema(FormatSchema(s));
  EXPECT_EQ(again.features, s.features);
  EXPECT_EQ(again.order_column, "t");
}

TEST(SchemaFileTest, RejectsMalformedLines) {
  EXPECT_ANY_THROW(ParseSchema("speed = fuzzy\n"));
  EXPECT_ANY_THROW(ParseSchema("speed\n"));
  EXPECT_ANY_THROW(ParseSchema("a = continuous\na = continuous\n"));
}

TEST(LoadDatasetTest, ThreeRowsTwoFeatures) {
  const auto r = LoadText("PC_HR,PC_GSR,label\n1.5,2,low sickness\n-3,4e-1,Moderate Sickness\n0,0,acute sickness\n",
                          TwoFeatureSchema());
  EXPECT_EQ(r.data.num_rows(), 3u);
  EXPECT_EQ(r.data.num_features(), 2u);
  EXPECT_EQ(r.data.labels(), (std::vector<double>{0, 1, 1}));
  EXPECT_EQ(r.data.value(1, 1), 0.4);
  EXPECT_EQ(r.data.tag(2).source, 2);
  EXPECT_EQ(r.rejected_rows, 0u);
}

TEST(LoadDatasetTest, ColumnOrderInFileDoesNotMatter) {
  const auto r = LoadText("label,extra,PC_GSR,PC_HR\nlow sickness,x,2,1\n", TwoFeatureSchema());
  EXPECT_EQ(r.data.value(0, 0), 1.0);
  EXPECT_EQ(r.data.value(0, 1), 2.0);
}

TEST(LoadDatasetTest, MissingColumn) {
  EXPECT_GLASSBOX_ERROR(LoadText("PC_HR,label\n1,low sickness\n", TwoFeatureSchema()),
                        ErrorCode::kMissingColumn);
}

TEST(LoadDatasetTest, UnparsableValueNamesLineAndColumn) {
  try {
    LoadText("PC_HR,PC_GSR,label\n1,2,low sickness\n1,abc,low sickness\n", TwoFeatureSchema());
    FAIL() << "expected UnparsableValue";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnparsableValue);
    const std::string what = e.what();
    EXPECT_NE(what.find("line 3"), std::string::npos) << what;
    EXPECT_NE(what.find("PC_GSR"), std::string::npos) << what;
  }
}

TEST(LoadDatasetTest, EmptyFile) {
  EXPECT_GLASSBOX_ERROR(LoadText("", TwoFeatureSchema()), ErrorCode::kEmptyFile);
  EXPECT_GLASSBOX_ERROR(LoadText("PC_HR,PC_GSR,label\n", TwoFeatureSchema()), ErrorCode::kEmptyFile);
}

TEST(LoadDatasetTest, RowsWithMissingCellsAreDroppedAndCounted) {
  const auto r = LoadText("PC_HR,PC_GSR,label\n1,2,low sickness\n,2,low sickness\n1,NA,acute sickness\n3,4,acute sickness\n",
                          TwoFeatureSchema());
  EXPECT_EQ(r.data.num_rows(), 2u);
  EXPECT_EQ(r.rejected_rows, 2u);
  ASSERT_EQ(r.warnings.size(), 1u);
  EXPECT_EQ(r.data.tag(1).source, 3);
}

TEST(LoadDatasetTest, UnknownClassNameAborts) {
  EXPECT_GLASSBOX_ERROR(LoadText("PC_HR,PC_GSR,label\n1,2,vertigo\n", TwoFeatureSchema()),
                        ErrorCode::kUnknownClassName);
}

TEST(LoadDatasetTest, CategoricalCodesFollowFirstSeenOrder) {
  const SchemaFile s = ParseSchema("@provenance = gameplay\n@label = c\ngender = categorical\nage = continuous\n");
  const auto r = LoadText("gender,age,c\nf,30,none\nm,22,slight\nf,41,severe\nx,19,moderate\n", s);
  EXPECT_EQ(r.data.Column(0), (std::vector<double>{0, 1, 0, 2}));
  EXPECT_EQ(r.data.schema()[0].categories, (std::vector<std::string>{"f", "m", "x"}));
  EXPECT_EQ(r.data.labels(), (std::vector<double>{0, 1, 1, 1}));
}

TEST(LoadDatasetTest, FmsTargetsAndOrdering) {
  const SchemaFile s = ParseSchema("@provenance = synthetic\n@target = fms\n@group = p\n@order = t\nv = continuous\n");
  const auto r = LoadText("p,t,v,fms\na,2,20,2\nb,1,100,5\na,1,10,1\nb,0,90,4\n", s, LabelKind::kFms);
  EXPECT_EQ(r.data.Column(0), (std::vector<double>{10, 20, 90, 100}));
  EXPECT_EQ(r.data.labels(), (std::vector<double>{1, 2, 4, 5}));
  EXPECT_EQ(r.groups, (std::vector<std::int64_t>{0, 0, 1, 1}));
  EXPECT_GLASSBOX_ERROR(LoadText("p,t,v,fms\na,1,1,11\n", s, LabelKind::kFms), ErrorCode::kInvalidLabel);
}

TEST(RelabelTest, KnownNamesMapToBinaryClasses) {
  EXPECT_EQ(RelabelBinary("low sickness", Provenance::kPhysiological).value(), 0);
  EXPECT_EQ(RelabelBinary("moderate sickness", Provenance::kPhysiological).value(), 1);
  EXPECT_EQ(RelabelBinary("acute sickness", Provenance::kPhysiological).value(), 1);
  EXPECT_EQ(RelabelBinary("none", Provenance::kGameplay).value(), 0);
  EXPECT_EQ(RelabelBinary("slight", Provenance::kGameplay).value(), 1);
  EXPECT_EQ(RelabelBinary("moderate", Provenance::kGameplay).value(), 1);
  EXPECT_EQ(RelabelBinary(" Severe ", Provenance::kGameplay).value(), 1);
  EXPECT_EQ(RelabelBinary("1", Provenance::kSynthetic).value(), 1);
}

TEST(RelabelTest, SeparatorsAndCaseAreIgnored) {
  EXPECT_EQ(RelabelBinary("Low_Sickness", Provenance::kPhysiological).value(), 0);
  EXPECT_EQ(RelabelBinary("acute-sickness", Provenance::kPhysiological).value(), 1);
  EXPECT_EQ(RelabelBinary("moderate \t sickness", Provenance::kPhysiological).value(), 1);
  EXPECT_GLASSBOX_ERROR(RelabelBinary("lowsickness", Provenance::kPhysiological),
                        ErrorCode::kUnknownClassName);
}

TEST(RelabelTest, EverythingElseIsRejected) {
  for (const char* name : {"vertigo", "", "none", "slight", "0"}) {
    EXPECT_GLASSBOX_ERROR(RelabelBinary(name, Provenance::kPhysiological),
                          ErrorCode::kUnknownClassName);
  }
  for (const char* name : {"low sickness", "acute sickness", "mild"}) {
    EXPECT_GLASSBOX_ERROR(RelabelBinary(name, Provenance::kGameplay), ErrorCode::kUnknownClassName);
  }
}

Dataset Sequence(std::size_t n) {
  std::vector<std::vector<double>> rows;
  std::vector<double> labels;
  for (std::size_t i = 0; i < n; ++i) {
    rows.push_back({static_cast<double>(i)});
    labels.push_back(i % 3 == 0 ? 1.0 : 0.0);
  }
  return fixtures::MakeDataset(rows, labels, LabelKind::kBinary, Partition::kUnassigned);
}

TEST(SplitTest, TrainSizeIsFloorOfFraction) {
  auto [train, test] = Split(Sequence(10), 0.7, 5);
  EXPECT_EQ(train.num_rows(), 7u);
  EXPECT_EQ(test.num_rows(), 3u);
  auto [train1, test1] = Split(Sequence(1), 0.7, 5);
  EXPECT_EQ(train1.num_rows(), 0u);
  EXPECT_EQ(test1.num_rows(), 1u);
  EXPECT_GLASSBOX_ERROR(Split(Sequence(0), 0.7, 1), ErrorCode::kEmptyDataset);
  EXPECT_EQ(train.tag(0).partition, Partition::kTrain);
  EXPECT_EQ(test.tag(0).partition, Partition::kTest);
}

TEST(SplitTest, SameSeedSamePartition) {
  const auto ds = Sequence(40);
  auto [a_train, a_test] = Split(ds, 0.7, 11);
  auto [b_train, b_test] = Split(ds, 0.7, 11);
  auto [c_train, c_test] = Split(ds, 0.7, 12);
  EXPECT_EQ(a_train.tags(), b_train.tags());
  EXPECT_EQ(a_test.Column(0), b_test.Column(0));
  EXPECT_NE(a_test.Column(0), c_test.Column(0));
}

TEST(SplitTest, UnionIsTheInputForAllSeeds) {
  Rng sizes(2);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 1 + sizes.UniformIndex(60);
    const auto ds = Sequence(n);
    const double fraction = 0.05 + 0.9 * sizes.UniformReal();
    auto [train, test] = Split(ds, fraction, seed);
    std::vector<double> all = train.Column(0);
    const auto t = test.Column(0);
    all.insert(all.end(), t.begin(), t.end());
    std::sort(all.begin(), all.end());
    ASSERT_EQ(all, ds.Column(0)) << "seed " << seed;
    for (std::size_t i = 0; i < train.num_rows(); ++i) {
      ASSERT_EQ(train.label(i), ds.label(static_cast<std::size_t>(train.value(i, 0))));
    }
  }
}

Dataset WithCounts(std::size_t zeros, std::size_t ones) {
  std::vector<std::vector<double>> rows;
  std::vector<double> labels;
  for (std::size_t i = 0; i < zeros + ones; ++i) {
    rows.push_back({static_cast<double>(i), static_cast<double>(i * i)});
    labels.push_back(i < zeros ? 0.0 : 1.0);
  }
  return fixtures::MakeDataset(rows, labels);
}

TEST(OversampleTest, BalancesClasses) {
  const Dataset out = Oversample(WithCounts(100, 40), 3);
  EXPECT_EQ(out.ClassCounts()[0], 100u);
  EXPECT_EQ(out.ClassCounts()[1], 100u);
  std::size_t copies = 0;
  for (const auto& tag : out.tags()) copies += tag.oversampled_copy ? 1 : 0;
  EXPECT_EQ(copies, 60u);
}

TEST(OversampleTest, BalancedInputIsAFixedPoint) {
  const Dataset in = WithCounts(50, 50);
  const Dataset out = Oversample(in, 3);
  EXPECT_EQ(out.num_rows(), in.num_rows());
  EXPECT_EQ(out.Column(1), in.Column(1));
}

TEST(OversampleTest, SingleMinorityRowIsCopied) {
  const Dataset in = WithCounts(3, 1);
  const Dataset out = Oversample(in, 17);
  ASSERT_EQ(out.num_rows(), 6u);
  for (std::size_t i = 4; i < 6; ++i) {
    EXPECT_TRUE(out.tag(i).oversampled_copy);
    EXPECT_EQ(out.tag(i).source, 3);
    EXPECT_EQ(out.label(i), 1.0);
    EXPECT_EQ(out.value(i, 0), 3.0);
    EXPECT_EQ(out.value(i, 1), 9.0);
  }
}

TEST(OversampleTest, Errors) {
  EXPECT_GLASSBOX_ERROR(Oversample(WithCounts(4, 0), 1), ErrorCode::kSingleClassDataset);
  Dataset test = WithCounts(4, 2);
  test.SetPartition(Partition::kTest);
  EXPECT_GLASSBOX_ERROR(Oversample(test, 1), ErrorCode::kLeakage);
}

TEST(OversampleTest, OutputRowsComeFromInput) {
  Rng rng(8);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t zeros = 1 + rng.UniformIndex(30);
    const std::size_t ones = 1 + rng.UniformIndex(30);
    const Dataset in = WithCounts(zeros, ones);
    const Dataset out = Oversample(in, seed);
    ASSERT_GE(out.num_rows(), in.num_rows());
    ASSERT_EQ(out.ClassCounts()[0], out.ClassCounts()[1]);
    for (std::size_t i = 0; i < in.num_rows(); ++i) ASSERT_EQ(out.tag(i), in.tag(i));
    for (std::size_t i = 0; i < out.num_rows(); ++i) {
      const auto src = static_cast<std::size_t>(out.tag(i).source);
      ASSERT_EQ(out.value(i, 0), in.value(src, 0));
      ASSERT_EQ(out.label(i), in.label(src));
    }
  }
}

Dataset Series(std::size_t length) {
  std::vector<std::vector<double>> rows;
  std::vector<double> labels;
  for (std::size_t i = 0; i < length; ++i) {
    rows.push_back({static_cast<double>(i + 1), -static_cast<double>(i + 1)});
    labels.push_back(static_cast<double>((i + 1) % 11));
  }
  return fixtures::MakeDataset(rows, labels, LabelKind::kFms, Partition::kUnassigned);
}

TEST(WindowTest, LengthSixWindowFive) {
  const auto w = MakeWindows(Series(6), 5);
  ASSERT_EQ(w.data.num_rows(), 1u);
  ASSERT_EQ(w.data.num_features(), 10u);
  // Step-major: step 1 features, then step 2, ...
  EXPECT_EQ(w.data.value(0, 0), 1.0);
  EXPECT_EQ(w.data.value(0, 1), -1.0);
  EXPECT_EQ(w.data.value(0, 8), 5.0);
  EXPECT_EQ(w.data.label(0), 6.0);
  EXPECT_EQ(w.target_rows, (std::vector<std::int64_t>{5}));
  EXPECT_EQ(w.data.schema()[0].name, "x0[t-5]");
  EXPECT_EQ(w.data.schema()[9].name, "x1[t-1]");
}

TEST(WindowTest, Boundaries) {
  EXPECT_GLASSBOX_ERROR(MakeWindows(Series(5), 5), ErrorCode::kSeriesTooShort);
  EXPECT_EQ(MakeWindows(Series(8), 5).data.num_rows(), 3u);
  EXPECT_GLASSBOX_ERROR(MakeWindows(Series(8), 0), ErrorCode::kInvalidArgument);
  EXPECT_GLASSBOX_ERROR(MakeWindows(WithCounts(5, 5), 2), ErrorCode::kInvalidArgument);
}

TEST(WindowTest, CountIsLengthMinusWindow) {
  Rng rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t w = 1 + rng.UniformIndex(10);
    const std::size_t length = w + 1 + rng.UniformIndex(40);
    const auto out = MakeWindows(Series(length), w);
    ASSERT_EQ(out.data.num_rows(), length - w);
    for (std::size_t k = 0; k < out.data.num_rows(); ++k) {
      ASSERT_EQ(out.data.label(k), Series(length).label(k + w));
    }
  }
}

TEST(WindowTest, GroupsAreWindowedSeparately) {
  const std::vector<std::int64_t> groups = {0, 0, 0, 0, 1, 1, 1, 2, 2, 2, 2, 2};
  const auto out = MakeWindows(Series(groups.size()), groups, 2);
  // 4 - 2, 3 - 2 and 5 - 2 windows.
  ASSERT_EQ(out.data.num_rows(), 6u);
  EXPECT_EQ(out.target_rows, (std::vector<std::int64_t>{2, 3, 6, 9, 10, 11}));
}

TEST(DatasetCsvTest, RoundTripIsExact) {
  const std::string dir = fixtures::FreshDir("dataset_csv");
  Rng rng(5);
  std::vector<std::vector<double>> rows;
  std::vector<double> labels;
  for (int i = 0; i < 30; ++i) {
    rows.push_back({rng.Normal() * 1e-7, rng.Normal() * 1e9, rng.UniformReal()});
    labels.push_back(i % 2);
  }
  Dataset ds = fixtures::MakeDataset(rows, labels);
  ds = Oversample(ds, 2);
  WriteDatasetCsv(dir + "/d.csv", ds);
  const Dataset back = ReadDatasetCsv(dir + "/d.csv", ds.schema(), LabelKind::kBinary,
                                      Provenance::kSynthetic);
  ASSERT_EQ(back.num_rows(), ds.num_rows());
  EXPECT_EQ(back.tags(), ds.tags());
  EXPECT_EQ(back.labels(), ds.labels());
  for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(back.Column(j), ds.Column(j));
  EXPECT_GLASSBOX_ERROR(ReadDatasetCsv(dir + "/d.csv", fixtures::ContinuousSchema(2),
                                       LabelKind::kBinary, Provenance::kSynthetic),
                        ErrorCode::kCorruptFile);
}

}  // namespace
}  // namespace glassbox
