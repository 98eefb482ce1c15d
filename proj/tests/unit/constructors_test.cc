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

#include "pregeo/constructors.h"

#include <random>
#include <set>

#include "gtest/gtest.h"
#include "pregeo/errors.h"
#include "pregeo/finite_group.h"
#include "testing/generators.h"
#include "testing/oracles.h"

namespace pregeo {
namespace {

ElementSet FromStd(const std::set<std::uint32_t>& s) {
  ElementSet out;
  for (std::uint32_t x : s) out.Insert(x);
  return out;
}

TEST(FieldSpecTest, Validation) {
  EXPECT_NO_THROW((FieldSpec{2, 3}.Validate()));
  EXPECT_EQ((FieldSpec{3, 4}.Size()), 81u);
  EXPECT_THROW((FieldSpec{4, 2}.Validate()), InputError);
  EXPECT_THROW((FieldSpec{1, 2}.Validate()), InputError);
  EXPECT_THROW((FieldSpec{2, 0}.Validate()), InputError);
  EXPECT_THROW((FieldSpec{2, 13}.Validate()), InputError);
  EXPECT_THROW(LinearMatroid({6, 1}), InputError);
  EXPECT_TRUE(IsPrime(7));
  EXPECT_FALSE(IsPrime(9));
  EXPECT_FALSE(IsPrime(1));
}

TEST(VectorSpaceTest, IndexingIsLittleEndian) {
  const VectorSpace v({3, 2});
  EXPECT_EQ(v.Coords(5), (std::vector<std::uint32_t>{2, 1}));
  EXPECT_EQ(v.FromCoords({2, 1}), 5u);
  EXPECT_EQ(v.Unit(1), 3u);
  EXPECT_EQ(v.Add(5, 4), v.FromCoords({0, 2}));
  EXPECT_EQ(v.Sub(0, 1), 2u);
  EXPECT_EQ(v.Scale(2, 4), v.FromCoords({2, 2}));
}

TEST(VectorSpaceTest, ExamplesFromTheCatalog) {
  const VectorSpace v({2, 3});
  EXPECT_EQ(v.Span(ElementSet{1, 2}), (ElementSet{0, 1, 2, 3}));
  EXPECT_EQ(v.Span(ElementSet()), (ElementSet{0}));
  const VectorSpace w({3, 2});
  // The line through 0 and e1 in GF(3)^2.
  EXPECT_EQ(w.AffineHull(ElementSet{0, 1}), (ElementSet{0, 1, 2}));
  EXPECT_EQ(w.AffineHull(ElementSet()), ElementSet());
  EXPECT_EQ(w.AffineHull(ElementSet{4}), (ElementSet{4}));
}

TEST(VectorSpaceProperty, SpanAndHullMatchBruteForce) {
  std::mt19937 rng(17);
  for (const FieldSpec spec :
       {FieldSpec{2, 4}, FieldSpec{3, 3}, FieldSpec{5, 2}, FieldSpec{3, 4}}) {
    const VectorSpace v(spec);
    for (int trial = 0; trial < 60; ++trial) {
      const ElementSet a =
          testing::RandomSubsetOfSize(rng, spec.Size(), 1 + trial % 4);
      EXPECT_EQ(v.Span(a), FromStd(testing::BruteSpan(a.Elements(), spec.q,
                                                      spec.d)))
          << a.ToString();
      EXPECT_EQ(v.AffineHull(a), FromStd(testing::BruteAffineHull(
                                     a.Elements(), spec.q, spec.d)))
          << a.ToString();
    }
  }
}

TEST(ConstructorsTest, TrivialWithLoops) {
  const ClosureTable t = TrivialPregeometry(4, ElementSet{0});
  EXPECT_EQ(t.Close(ElementSet()), (ElementSet{0}));
  EXPECT_EQ(t.Close(ElementSet{2, 3}), (ElementSet{0, 2, 3}));
  EXPECT_TRUE(VerifyAxioms(t).AllPass());
  EXPECT_THROW(TrivialPregeometry(4, ElementSet{4}), InputError);
}

TEST(ConstructorsTest, ExplicitFromFlatsIsLeastContainingFlat) {
  const ClosureTable t = ExplicitFromFlats(
      4, {ElementSet(), ElementSet{0}, ElementSet{0, 1}, ElementSet::Range(4)});
  EXPECT_EQ(t.Close(ElementSet{1}), (ElementSet{0, 1}));
  EXPECT_EQ(t.Close(ElementSet{2}), ElementSet::Range(4));
  EXPECT_EQ(t.Close(ElementSet()), ElementSet());
}

TEST(ConstructorsTest, AffineHasNoLoops) {
  const ClosureTable t = AffineMatroid({2, 3});
  EXPECT_EQ(t.Close(ElementSet()), ElementSet());
  // Any three points of AG(3,2) span a plane of four.
  EXPECT_EQ(t.Close(ElementSet{0, 1, 2}).Size(), 4u);
}

TEST(ConstructorsTest, SubgroupClosure) {
  const ClosureTable t = SubgroupClosure(groups::Cyclic(6));
  EXPECT_EQ(t.Close(ElementSet{2}), (ElementSet{0, 2, 4}));
  EXPECT_EQ(t.Close(ElementSet{2, 3}), ElementSet::Range(6));
  EXPECT_EQ(t.Close(ElementSet()), (ElementSet{0}));
}

}  // namespace
}  // namespace pregeo
