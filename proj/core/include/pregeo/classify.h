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

// Geometrization and the trivial / modular / locally modular / projective
// taxonomy.

#ifndef PREGEO_CLASSIFY_H_
#define PREGEO_CLASSIFY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pregeo/element_set.h"
#include "pregeo/matroid.h"

namespace pregeo {

// Classification scans every pair of flats; refuse beyond this many.
inline constexpr std::size_t kMaxClassifyFlats = 4096;

// The canonical geometry of a pregeometry: loops deleted, elements with the
// same closure identified. Quotient point i stands for classes[i], whose
// least member representatives[i] is the point's id in reports.
struct Geometry {
  Matroid source;
  // Empty when every element of the source is a loop.
  std::optional<Matroid> base;
  std::vector<Element> representatives;
  std::vector<ElementSet> classes;
  // Source element -> quotient index, or -1 for loops.
  std::vector<std::int32_t> point_of;

  bool empty() const { return !base.has_value(); }
  std::size_t num_points() const { return representatives.size(); }
  // Representatives of the quotient points in `points`.
  ElementSet ToRepresentatives(const ElementSet& points) const;
  // Union of the classes of the quotient points in `points`.
  ElementSet Preimage(const ElementSet& points) const;
};

Geometry Geometrize(const Matroid& m);

struct FlatPair {
  ElementSet first;
  ElementSet second;
};

// A false flag carries the least failing pair of flats. For triviality the
// pair is (F, P) with P a rank-1 flat and F ∪ P not closed; in full-subset
// mode it is (A, cl(A)) for the least subset A whose closure differs from
// cl(∅) ∪ ⋃ cl(a).
struct ClassificationReport {
  bool trivial = true;
  std::optional<FlatPair> trivial_witness;
  bool modular = true;
  std::optional<FlatPair> modular_witness;
  bool locally_modular = true;
  std::optional<FlatPair> locally_modular_witness;
  bool is_geometry = true;

  bool projective() const { return modular && !trivial; }
};

struct ClassifyOptions {
  // Cross-validation mode: test triviality on every subset (ground <= 16).
  bool full_subset_triviality = false;
};

ClassificationReport Classify(const Matroid& m,
                              const ClassifyOptions& options = {});

// dim(A ∪ B) + dim(A ∩ B) = dim(A) + dim(B) for two flats.
bool SatisfiesModularEquation(const Matroid& m, const ElementSet& a,
                              const ElementSet& b);

struct LocalModularityEquivalence {
  bool agree = true;
  bool restricted_equation = true;
  bool all_localizations_modular = true;
  // A point whose localization is not modular, if any.
  std::optional<Element> non_modular_point;
  std::optional<FlatPair> restricted_witness;
};

// Compares the restricted modular equation with modularity of every
// single-point localization.
LocalModularityEquivalence CheckLocalModularityEquivalence(const Matroid& m);

}  // namespace pregeo

#endif  // PREGEO_CLASSIFY_H_
