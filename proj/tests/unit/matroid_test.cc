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

#include "pregeo/matroid.h"

#include <random>

#include "gtest/gtest.h"
#include "pregeo/constructors.h"
#include "pregeo/errors.h"
#include "pregeo/finite_group.h"
#include "testing/generators.h"
#include "testing/oracles.h"

namespace pregeo {
namespace {

testing::Closure AsClosure(const Matroid& m) {
  return [m](const std::vector<std::uint32_t>& a) {
    return m.Close(ElementSet(std::span<const Element>(a))).Elements();
  };
}

TEST(MatroidTest, ValidateRejectsNonPregeometry) {
  EXPECT_THROW(Matroid::Validate(SubgroupClosure(groups::Cyclic(4))),
               AxiomError);
  EXPECT_NO_THROW(Matroid::Validate(LinearMatroid({2, 3})));
}

TEST(MatroidTest, LinearRanks) {
  const Matroid m = Matroid::Validate(LinearMatroid({2, 3}));
  EXPECT_EQ(m.Loops(), (ElementSet{0}));
  EXPECT_EQ(m.TotalRank(), 3u);
  EXPECT_EQ(m.Rank(ElementSet{1, 2, 3}), 2u);
  EXPECT_EQ(m.Rank(ElementSet{1, 2, 4}), 3u);
  EXPECT_EQ(m.Rank(ElementSet{4}, ElementSet{1, 2}), 1u);
  EXPECT_EQ(m.Rank(ElementSet{3}, ElementSet{1, 2}), 0u);
  EXPECT_TRUE(m.IsIndependent(ElementSet{1, 2, 4}));
  EXPECT_FALSE(m.IsIndependent(ElementSet{0}));
  EXPECT_FALSE(m.IsIndependent(ElementSet{1, 2, 3}));
  EXPECT_TRUE(m.IsFlat(ElementSet{0, 1, 2, 3}));
  EXPECT_FALSE(m.IsFlat(ElementSet{1, 2, 3}));
  EXPECT_THROW(m.Rank(ElementSet{8}), InputError);
}

TEST(MatroidTest, BasisWithinIsGreedyLeast) {
  const Matroid m = Matroid::Validate(LinearMatroid({2, 3}));
  EXPECT_EQ(m.BasisWithin(ElementSet{0, 1, 2, 3, 4}), (ElementSet{1, 2, 4}));
  EXPECT_EQ(m.BasisWithin(ElementSet{0}), ElementSet());
}

TEST(MatroidTest, FlatCountsAreGaussianBinomials) {
  for (const FieldSpec spec : {FieldSpec{2, 3}, FieldSpec{2, 4},
                               FieldSpec{3, 2}, FieldSpec{3, 3}}) {
    const Matroid m = Matroid::Validate(LinearMatroid(spec));
    for (std::uint32_t k = 0; k <= spec.d; ++k) {
      EXPECT_EQ(EnumerateFlats(m, k).size(),
                testing::GaussianBinomial(spec.d, k, spec.q))
          << "q=" << spec.q << " d=" << spec.d << " k=" << k;
    }
  }
}

TEST(MatroidTest, FlatsAreClosedAndSorted) {
  const Matroid m = Matroid::Validate(AffineMatroid({3, 2}));
  const std::vector<ElementSet>& flats = m.Flats();
  // empty, 9 points, 12 lines, the plane
  EXPECT_EQ(flats.size(), 1u + 9 + 12 + 1);
  EXPECT_TRUE(std::is_sorted(flats.begin(), flats.end()));
  for (const ElementSet& f : flats) EXPECT_TRUE(m.IsFlat(f));
}

TEST(MatroidTest, RestrictReindexes) {
  const Matroid m = Matroid::Validate(LinearMatroid({2, 3}));
  const ElementSet y{1, 2, 3, 4};
  const Matroid r = Restrict(m, y);
  EXPECT_EQ(r.ground_size(), 4u);
  // local {0,1} = {1,2}; its closure {1,2,3} ∩ Y = local {0,1,2}.
  EXPECT_EQ(r.Close(ElementSet{0, 1}), (ElementSet{0, 1, 2}));
  EXPECT_EQ(r.TotalRank(), 3u);
  const std::vector<Element> members = y.Elements();
  EXPECT_EQ(LiftFromRestriction(ElementSet{0, 3}, members), (ElementSet{1, 4}));
  EXPECT_EQ(LowerToRestriction(ElementSet{0, 2, 4, 7}, members),
            (ElementSet{1, 3}));
  EXPECT_THROW(Restrict(m, ElementSet()), InputError);
  EXPECT_THROW(Restrict(m, ElementSet{8}), InputError);
}

TEST(MatroidTest, LocalizeAddsLoops) {
  const Matroid m = Matroid::Validate(LinearMatroid({2, 3}));
  const Matroid l = Localize(m, ElementSet{1});
  EXPECT_EQ(l.Loops(), (ElementSet{0, 1}));
  EXPECT_EQ(l.TotalRank(), 2u);
  EXPECT_EQ(l.Close(ElementSet{2}), (ElementSet{0, 1, 2, 3}));
  EXPECT_EQ(Localize(m, ElementSet()).Close(ElementSet{2}), (ElementSet{0, 2}));
}

// Rank matches a brute-force largest independent subset.
TEST(MatroidProperty, RankMatchesBruteForce) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const FieldSpec spec = trial % 3 == 0 ? FieldSpec{3, 3} : FieldSpec{2, 4};
    const Matroid m = Matroid::Derived(
        testing::RandomConfiguration(rng, 5 + trial % 7, spec).Table());
    for (int s = 0; s < 10; ++s) {
      const ElementSet a = testing::RandomSubset(rng, m.ground_size(), 0.5);
      EXPECT_EQ(m.Rank(a), testing::BruteRank(AsClosure(m), a.Elements()));
      EXPECT_EQ(m.BasisWithin(a).Size(), m.Rank(a));
      EXPECT_TRUE(m.BasisWithin(a).IsSubsetOf(a));
      EXPECT_TRUE(m.IsIndependent(m.BasisWithin(a)));
    }
  }
}

// rank(A | B) + rank(A & B) <= rank(A) + rank(B) on random subsets.
TEST(MatroidProperty, RankIsSubmodular) {
  std::mt19937 rng(6);
  const Matroid m = Matroid::Validate(LinearMatroid({2, 4}));
  for (int trial = 0; trial < 500; ++trial) {
    const ElementSet a = testing::RandomSubset(rng, 16, 0.2);
    const ElementSet b = testing::RandomSubset(rng, 16, 0.2);
    EXPECT_LE(m.Rank(a | b) + m.Rank(a & b), m.Rank(a) + m.Rank(b));
  }
}

// Restriction and localization of a matroid are matroids.
TEST(MatroidProperty, DerivedMatroidsSatisfyAxioms) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const Matroid m = Matroid::Derived(
        testing::RandomConfiguration(rng, 8, FieldSpec{2, 3}).Table());
    ElementSet y = testing::RandomSubset(rng, 8, 0.5);
    y.Insert(static_cast<Element>(trial % 8));
    EXPECT_TRUE(VerifyAxioms(Restrict(m, y).table()).AllPass());
    EXPECT_TRUE(VerifyAxioms(Localize(m, y).table()).AllPass());
    // cl^Y(A) = cl(A) ∩ Y
    const Matroid r = Restrict(m, y);
    const std::vector<Element> members = y.Elements();
    const ElementSet local = testing::RandomSubset(rng, members.size(), 0.4);
    EXPECT_EQ(LiftFromRestriction(r.Close(local), members),
              m.Close(LiftFromRestriction(local, members)) & y);
  }
}

}  // namespace
}  // namespace pregeo
