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

#include "pregeo/classify.h"

#include <random>

#include "gtest/gtest.h"
#include "pregeo/constructors.h"
#include "pregeo/errors.h"
#include "testing/generators.h"

namespace pregeo {
namespace {

Matroid Linear(std::uint32_t q, std::uint32_t d) {
  return Matroid::Validate(LinearMatroid({q, d}));
}
Matroid Affine(std::uint32_t q, std::uint32_t d) {
  return Matroid::Validate(AffineMatroid({q, d}));
}

// Brute-force modularity over every pair of flats.
bool BruteModular(const Matroid& m, bool local) {
  const std::vector<ElementSet>& flats = m.Flats();
  for (const ElementSet& a : flats) {
    for (const ElementSet& b : flats) {
      if (local && m.Rank(a & b) == 0) continue;
      if (m.Rank(a | b) + m.Rank(a & b) != m.Rank(a) + m.Rank(b)) return false;
    }
  }
  return true;
}

TEST(GeometrizeTest, LinearDropsZero) {
  const Geometry g = Geometrize(Linear(2, 3));
  ASSERT_FALSE(g.empty());
  EXPECT_EQ(g.num_points(), 7u);
  EXPECT_EQ(g.representatives, (std::vector<Element>{1, 2, 3, 4, 5, 6, 7}));
  EXPECT_EQ(g.point_of[0], -1);
  EXPECT_EQ(g.point_of[5], 4);
}

TEST(GeometrizeTest, ParallelClassesUseLeastRepresentative) {
  // GF(3)^2: the 8 nonzero vectors fall into 4 projective points.
  const Geometry g = Geometrize(Linear(3, 2));
  EXPECT_EQ(g.num_points(), 4u);
  EXPECT_EQ(g.representatives, (std::vector<Element>{1, 3, 4, 5}));
  EXPECT_EQ(g.classes[0], (ElementSet{1, 2}));
  EXPECT_EQ(g.ToRepresentatives(ElementSet{0, 1}), (ElementSet{1, 3}));
  EXPECT_EQ(g.Preimage(ElementSet{0}), (ElementSet{1, 2}));
  EXPECT_EQ(g.base->TotalRank(), 2u);
}

TEST(GeometrizeTest, AllLoopsGivesEmptyGeometry) {
  const Geometry g =
      Geometrize(Matroid::Validate(TrivialPregeometry(3, ElementSet{0, 1, 2})));
  EXPECT_TRUE(g.empty());
  EXPECT_EQ(g.num_points(), 0u);
}

TEST(GeometrizeTest, Idempotent) {
  for (const Matroid& m : {Linear(2, 3), Linear(2, 4), Linear(3, 2),
                           Linear(3, 3), Affine(2, 3), Affine(3, 2),
                           Matroid::Validate(TrivialPregeometry(5, {0}))}) {
    const Geometry once = Geometrize(m);
    const Geometry twice = Geometrize(*once.base);
    EXPECT_EQ(twice.num_points(), once.num_points());
    EXPECT_EQ(twice.base->Flats(), once.base->Flats());
    EXPECT_EQ(twice.representatives.back() + 1, once.num_points());
  }
}

TEST(ClassifyTest, FanoIsProjective) {
  const Geometry g = Geometrize(Linear(2, 3));
  const ClassificationReport r = Classify(*g.base);
  EXPECT_TRUE(r.is_geometry);
  EXPECT_TRUE(r.modular);
  EXPECT_FALSE(r.trivial);
  EXPECT_TRUE(r.projective());
}

TEST(ClassifyTest, AffinePlaneWitness) {
  const ClassificationReport r = Classify(Affine(3, 2));
  EXPECT_FALSE(r.modular);
  ASSERT_TRUE(r.modular_witness.has_value());
  EXPECT_EQ(r.modular_witness->first, (ElementSet{0, 1, 2}));
  EXPECT_EQ(r.modular_witness->second, (ElementSet{3, 4, 5}));
  EXPECT_TRUE(r.locally_modular);
  EXPECT_FALSE(r.trivial);
  EXPECT_FALSE(r.projective());
  EXPECT_TRUE(r.is_geometry);
}

TEST(ClassifyTest, LinearIsModularButNotGeometry) {
  const ClassificationReport r = Classify(Linear(3, 2));
  EXPECT_TRUE(r.modular);
  EXPECT_TRUE(r.locally_modular);
  EXPECT_FALSE(r.is_geometry);
}

TEST(ClassifyTest, TrivialWithLoops) {
  const Matroid m = Matroid::Validate(TrivialPregeometry(4, ElementSet{0}));
  const ClassificationReport r = Classify(m);
  EXPECT_TRUE(r.trivial);
  EXPECT_TRUE(r.modular);
  EXPECT_FALSE(r.projective());
  EXPECT_FALSE(r.is_geometry);
  const ClassificationReport full = Classify(m, {.full_subset_triviality = true});
  EXPECT_TRUE(full.trivial);
}

TEST(ClassifyTest, FlatAndSubsetTrivialityAgree) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const Matroid m = Matroid::Derived(
        testing::RandomConfiguration(rng, 4 + trial % 6, FieldSpec{2, 3})
            .Table());
    EXPECT_EQ(Classify(m).trivial,
              Classify(m, {.full_subset_triviality = true}).trivial);
  }
}

TEST(ClassifyTest, ModularEquation) {
  const Matroid m = Affine(3, 2);
  EXPECT_FALSE(SatisfiesModularEquation(m, ElementSet{0, 1, 2},
                                        ElementSet{3, 4, 5}));
  EXPECT_TRUE(SatisfiesModularEquation(m, ElementSet{0, 1, 2},
                                       ElementSet{0, 3, 6}));
}

TEST(ClassifyTest, LocalModularityEquivalenceOnCatalog) {
  for (const Matroid& m : {Linear(2, 3), Linear(2, 4), Linear(3, 2),
                           Linear(3, 3), Affine(2, 3), Affine(3, 2),
                           Affine(3, 3), Matroid::Validate(TrivialPregeometry(4))}) {
    const LocalModularityEquivalence eq = CheckLocalModularityEquivalence(m);
    EXPECT_TRUE(eq.agree) << m.table().description();
  }
}

// Classification flags agree with a direct flat-pair scan on random
// representable matroids (which are often neither modular nor locally
// modular).
TEST(ClassifyProperty, MatchesBruteForce) {
  std::mt19937 rng(41);
  int non_modular = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const FieldSpec spec = trial % 2 ? FieldSpec{2, 4} : FieldSpec{3, 3};
    const Matroid m = Matroid::Derived(
        testing::RandomConfiguration(rng, 5 + trial % 6, spec).Table());
    const ClassificationReport r = Classify(m);
    EXPECT_EQ(r.modular, BruteModular(m, false));
    EXPECT_EQ(r.locally_modular, BruteModular(m, true));
    if (!r.modular) {
      ++non_modular;
      EXPECT_FALSE(SatisfiesModularEquation(m, r.modular_witness->first,
                                            r.modular_witness->second));
    }
    EXPECT_TRUE(CheckLocalModularityEquivalence(m).agree);
  }
  EXPECT_GT(non_modular, 0);
}

}  // namespace
}  // namespace pregeo
