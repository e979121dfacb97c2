// Copyright 2026 The Bernstein Mechanism Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bernstein/dataset.h"

#include <vector>

#include "bernstein/dataset_io.h"
#include "bernstein/errors.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"

namespace bernstein {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;

TEST(DatasetTest, AddAndAccess) {
  Dataset d(2, LabelKind::kReal);
  d.Add(std::vector<double>{0.1, 0.2}, 0.5);
  d.Add(std::vector<double>{0.3, 0.4}, -1.5);
  EXPECT_EQ(d.size(), 2u);
  EXPECT_THAT(std::vector<double>(d.point(1).begin(), d.point(1).end()),
              ElementsAre(0.3, 0.4));
  EXPECT_EQ(d.label(1), -1.5);
  EXPECT_THROW(d.Add(std::vector<double>{0.1}, 1.0), ShapeError);
  EXPECT_THROW(d.Add(std::vector<double>{0.1, 0.1}), ShapeError);
}

TEST(DatasetTest, ValidateNamesOffendingRecord) {
  Dataset d(1, LabelKind::kBinary);
  d.Add(std::vector<double>{0.5}, 1.0);
  d.Add(std::vector<double>{1.5}, -1.0);
  try {
    d.Validate();
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_EQ(e.index(), 1u);
  }
  Dataset empty(1, LabelKind::kNone);
  EXPECT_THROW(empty.Validate(), PreconditionError);
  Dataset bad_label(1, LabelKind::kBinary);
  bad_label.Add(std::vector<double>{0.5}, 0.5);
  EXPECT_THROW(bad_label.Validate(), PreconditionError);
}

TEST(DatasetTest, UnitBall) {
  Dataset d(2, LabelKind::kNone);
  d.Add(std::vector<double>{0.6, 0.8});
  EXPECT_NO_THROW(d.ValidateUnitBall());
  d.Add(std::vector<double>{0.9, 0.9});
  EXPECT_THROW(d.ValidateUnitBall(), PreconditionError);
}

TEST(DatasetTest, WithRecordLeavesOriginal) {
  Dataset d(1, LabelKind::kReal);
  d.Add(std::vector<double>{0.1}, 1.0);
  d.Add(std::vector<double>{0.2}, 2.0);
  const double x[] = {0.9};
  const Dataset e = d.WithRecord(0, x, 3.0);
  EXPECT_EQ(e.point(0)[0], 0.9);
  EXPECT_EQ(e.label(0), 3.0);
  EXPECT_EQ(d.point(0)[0], 0.1);
  EXPECT_EQ(e.point(1)[0], 0.2);
}

TEST(LabelKindTest, Names) {
  for (LabelKind k : {LabelKind::kNone, LabelKind::kReal, LabelKind::kBinary}) {
    EXPECT_EQ(ParseLabelKind(LabelKindName(k)), k);
  }
  EXPECT_THROW(ParseLabelKind("categorical"), ConfigError);
}

TEST(DatasetIoTest, ParsesDelimitersCommentsAndBinaryLabels) {
  const Dataset d = ParseDataset(
      "# leading comment\n"
      "bernstein-dataset ell=2 label=binary\n"
      "0.1, 0.2, +\n"
      "0.3\t0.4\t-1   # trailing comment\n"
      "\n"
      "0.5 0.6 1\r\n"
      "0.7,0.8,-\n");
  ASSERT_EQ(d.size(), 4u);
  EXPECT_THAT(std::vector<double>(d.labels().begin(), d.labels().end()),
              ElementsAre(1, -1, 1, -1));
  EXPECT_EQ(d.point(2)[1], 0.6);
}

TEST(DatasetIoTest, ErrorsCarryLineNumbers) {
  try {
    ParseDataset("bernstein-dataset ell=1 label=real\n0.1 0.5\n0.2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_THAT(e.what(), HasSubstr("line 3"));
  }
  try {
    ParseDataset("bernstein-dataset ell=1 label=binary\n0.1 x\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(ParseDataset("0.1 0.2\n"), ParseError);
  EXPECT_THROW(ParseDataset("bernstein-dataset ell=0 label=none\n"), ParseError);
  EXPECT_THROW(ParseDataset("bernstein-dataset ell=1 label=weird\n"), ParseError);
  EXPECT_THROW(ParseDataset("bernstein-dataset ell=1 label=none\nnan\n"), ParseError);
  EXPECT_THROW(ParseDataset(""), ParseError);
}

TEST(DatasetIoTest, SerializeRoundTrip) {
  Dataset d(2, LabelKind::kReal);
  d.Add(std::vector<double>{0.1, 1.0 / 3.0}, -0.25);
  d.Add(std::vector<double>{0.0, 1.0}, 7.0);
  const Dataset r = ParseDataset(SerializeDataset(d));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r.point(0)[1], 1.0 / 3.0);
  EXPECT_EQ(r.label(0), -0.25);
  EXPECT_EQ(r.label_kind(), LabelKind::kReal);
}

TEST(DatasetIoTest, Points) {
  int ell = 0;
  const auto pts = ParsePoints("0.1,0.2\n# c\n0.3 0.4\n", &ell);
  EXPECT_EQ(ell, 2);
  EXPECT_THAT(pts, ElementsAre(0.1, 0.2, 0.3, 0.4));
  EXPECT_THROW(ParsePoints("0.1,0.2\n0.3\n", &ell), ParseError);
}

}  // namespace
}  // namespace bernstein
