// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pregeo/plane.h"

#include <set>

#include "gtest/gtest.h"
#include "pregeo/constructors.h"
#include "pregeo/errors.h"
#include "testing/oracles.h"

namespace pregeo {
namespace {

ElementSet Set(const std::vector<std::uint32_t>& v) {
  return ElementSet(std::span<const Element>(v));
}

class FanoTest : public ::testing::Test {
 protected:
  FanoTest()
      : geometry_(Geometrize(Matroid::Validate(LinearMatroid({2, 3})))),
        plane_(Plane::FromGeometry(geometry_, PlaneMode::kProjective)) {}

  Geometry geometry_;
  Plane plane_;
};

TEST_F(FanoTest, LinesMatchOracle) {
  std::vector<ElementSet> expected;
  for (const auto& l : testing::FanoLines()) expected.push_back(Set(l));
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(plane_.lines(), expected);
  EXPECT_EQ(plane_.points().size(), 7u);
  EXPECT_EQ(plane_.MinPointsPerLine(), 3u);
  EXPECT_TRUE(plane_.HasQuadrangle());
}

TEST_F(FanoTest, LineThroughAndMeet) {
  EXPECT_EQ(plane_.LineThrough(1, 4), (ElementSet{1, 4, 5}));
  EXPECT_EQ(plane_.LineThrough(4, 1), (ElementSet{1, 4, 5}));
  EXPECT_THROW(plane_.LineThrough(1, 1), InputError);
  EXPECT_THROW(plane_.LineThrough(0, 1), InputError);
  EXPECT_EQ(plane_.Meet(ElementSet{1, 2, 3}, ElementSet{1, 4, 5}), 1u);
  EXPECT_THROW(plane_.Meet(ElementSet{1, 2, 3}, ElementSet{1, 2, 3}),
               InputError);
  EXPECT_THROW(plane_.Meet(ElementSet{1, 2}, ElementSet{1, 4, 5}), InputError);
}

TEST_F(FanoTest, EveryLinePairMeetsOnce) {
  int pairs = 0;
  for (std::size_t i = 0; i < plane_.lines().size(); ++i) {
    for (std::size_t j = i + 1; j < plane_.lines().size(); ++j) {
      const ElementSet& a = plane_.lines()[i];
      const ElementSet& b = plane_.lines()[j];
      EXPECT_EQ((a & b).Size(), 1u);
      EXPECT_EQ(plane_.Meet(a, b), *(a & b).Min());
      ++pairs;
    }
  }
  EXPECT_EQ(pairs, 21);
}

TEST_F(FanoTest, Concurrency) {
  const ConcurrencyResult yes = Concurrency(
      plane_, ElementSet{1, 2, 3}, ElementSet{1, 4, 5}, ElementSet{1, 6, 7});
  EXPECT_TRUE(yes.concurrent);
  EXPECT_EQ(*yes.common_point, 1u);
  const ConcurrencyResult no = Concurrency(
      plane_, ElementSet{1, 2, 3}, ElementSet{1, 4, 5}, ElementSet{2, 4, 6});
  EXPECT_FALSE(no.concurrent);
  EXPECT_EQ(*no.pairwise_meets, (std::array<Element, 3>{1, 2, 4}));
  EXPECT_THROW(Concurrency(plane_, ElementSet{1, 2, 3}, ElementSet{1, 2, 3},
                           ElementSet{1, 4, 5}),
               InputError);
}

TEST_F(FanoTest, LinearMapsGive168Collineations) {
  std::set<Collineation> seen;
  for (const std::vector<std::uint32_t>& map : testing::GL32()) {
    const Collineation c = CollineationFrom(plane_, geometry_, map);
    EXPECT_TRUE(PreservesLines(plane_, c));
    seen.insert(c);
  }
  EXPECT_EQ(testing::GL32().size(), 168u);
  EXPECT_EQ(seen.size(), 168u);
}

TEST_F(FanoTest, FixingTwoPointsOfALineFixesIt) {
  for (const std::vector<std::uint32_t>& map : testing::GL32()) {
    const Collineation c = CollineationFrom(plane_, geometry_, map);
    for (const ElementSet& line : plane_.lines()) {
      const std::vector<Element> pts = line.Elements();
      for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
          if (c.Apply(pts[i]) == pts[i] && c.Apply(pts[j]) == pts[j]) {
            EXPECT_EQ(c.Apply(line), line);
          }
        }
      }
    }
  }
}

TEST_F(FanoTest, CollineationAlgebra) {
  const std::vector<std::vector<std::uint32_t>> maps = testing::GL32();
  const Collineation a = CollineationFrom(plane_, geometry_, maps[5]);
  const Collineation b = CollineationFrom(plane_, geometry_, maps[77]);
  EXPECT_TRUE(a.Compose(a.Inverse()).IsIdentity());
  EXPECT_TRUE(PreservesLines(plane_, a.Compose(b)));
  EXPECT_EQ(a.Compose(b).Apply(Element{3}), a.Apply(b.Apply(Element{3})));
}

TEST_F(FanoTest, RejectsNonCollineations) {
  std::vector<Element> map{0, 2, 1, 3, 4, 6, 5, 7};  // swap e1, e2
  EXPECT_NO_THROW(CollineationFrom(plane_, geometry_, map));
  // Swapping 3 and 4 sends the line {1,2,3} to a non-flat.
  map = {0, 1, 2, 4, 3, 5, 6, 7};
  EXPECT_THROW(CollineationFrom(plane_, geometry_, map),
               NotAnAutomorphismError);
  map = {0, 1, 2, 3};
  EXPECT_THROW(CollineationFrom(plane_, geometry_, map), InputError);
  map = {0, 1, 1, 3, 4, 5, 6, 7};
  EXPECT_THROW(CollineationFrom(plane_, geometry_, map), InputError);
  EXPECT_THROW(Collineation({1, 2}, {1, 1}), InputError);
}

TEST(PlaneTest, AffinePlaneIsNotProjective) {
  const Geometry g = Geometrize(Matroid::Validate(AffineMatroid({3, 2})));
  try {
    Plane::FromGeometry(g, PlaneMode::kProjective);
    FAIL() << "expected NotProjectiveError";
  } catch (const NotProjectiveError& e) {
    EXPECT_EQ(e.first_line(), "{0,1,2}");
    EXPECT_EQ(e.second_line(), "{3,4,5}");
  }
  const Plane affine = Plane::FromGeometry(g, PlaneMode::kAffine);
  EXPECT_EQ(affine.lines().size(), 12u);
  EXPECT_THROW(affine.Meet(ElementSet{0, 1, 2}, ElementSet{3, 4, 5}),
               NoIntersectionError);
  EXPECT_EQ(affine.Meet(ElementSet{0, 1, 2}, ElementSet{0, 3, 6}), 0u);
}

TEST(PlaneTest, RankMustBeThree) {
  EXPECT_THROW(Plane::FromGeometry(Geometrize(Matroid::Validate(
                                       LinearMatroid({2, 4}))),
                                   PlaneMode::kProjective),
               ShapeError);
  EXPECT_THROW(
      Plane::FromGeometry(
          Geometrize(Matroid::Validate(TrivialPregeometry(2, ElementSet{0, 1}))),
          PlaneMode::kProjective),
      ShapeError);
}

TEST(PlaneTest, ProjectivePlaneOfOrderThree) {
  const Plane p = Plane::FromGeometry(
      Geometrize(Matroid::Validate(LinearMatroid({3, 3}))),
      PlaneMode::kProjective);
  EXPECT_EQ(p.points().size(), 13u);
  EXPECT_EQ(p.lines().size(), 13u);
  EXPECT_EQ(p.MinPointsPerLine(), 4u);
}

TEST(PlaneTest, DegenerateRankThreeHasNoQuadrangle) {
  // Three independent points: a triangle, three two-point lines.
  const Plane p = Plane::FromGeometry(
      Geometrize(Matroid::Validate(TrivialPregeometry(3))),
      PlaneMode::kProjective);
  EXPECT_EQ(p.lines().size(), 3u);
  EXPECT_EQ(p.MinPointsPerLine(), 2u);
  EXPECT_FALSE(p.HasQuadrangle());
}

}  // namespace
}  // namespace pregeo
