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

// Finite checks of the group-with-pregeometry propositions.
//
// Every check works on a GroupPregeometry: a finite group whose automorphisms
// are required to preserve the closed sets of a matroid on the same ground.
// Homogeneity is replaced by a bounded finite analogue: for every A with
// |A| <= kmax and b, c outside cl(A) some automorphism fixes A pointwise and
// sends b to c. The infinite-dimension half of homogeneity cannot be tested
// on a finite ground and is never claimed.

#ifndef PREGEO_GROUP_HARNESS_H_
#define PREGEO_GROUP_HARNESS_H_

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pregeo/automorphisms.h"
#include "pregeo/element_set.h"
#include "pregeo/finite_group.h"
#include "pregeo/matroid.h"
#include "pregeo/plane.h"

namespace pregeo {

inline constexpr std::size_t kDefaultKmax = 2;
inline constexpr std::size_t kMaxKmax = 3;

enum class Outcome { kPass, kFail, kVacuous };
const char* OutcomeName(Outcome outcome);

struct CompatibilityVerdict {
  bool compatible = true;
  std::optional<Automorphism> automorphism;
  std::optional<ElementSet> flat;
  // False when only a strong generating set of Aut(G) was checked, in which
  // case the witness is least among those generators.
  bool exhaustive = true;
};

// True iff every automorphism maps flats to flats. Ground sizes must agree.
CompatibilityVerdict CheckCompatibility(const FiniteGroup& g, const Matroid& m);

class GroupPregeometry {
 public:
  // InputError if the group order and ground size differ. Compatibility is
  // evaluated here; the checks below require it to hold.
  static GroupPregeometry Create(FiniteGroup group, Matroid matroid);

  const FiniteGroup& group() const { return state_->automorphisms.group(); }
  const Matroid& matroid() const { return state_->matroid; }
  const AutomorphismGroup& automorphisms() const {
    return state_->automorphisms;
  }
  const CompatibilityVerdict& compatibility() const {
    return state_->compatibility;
  }
  // Every subgroup, canonical order.
  const std::vector<ElementSet>& Subgroups() const;

  // Throws InputError unless compatible.
  void RequireCompatible() const;

 private:
  struct State {
    AutomorphismGroup automorphisms;
    Matroid matroid;
    CompatibilityVerdict compatibility;
    mutable std::optional<std::vector<ElementSet>> subgroups;
  };
  explicit GroupPregeometry(std::shared_ptr<const State> s)
      : state_(std::move(s)) {}

  std::shared_ptr<const State> state_;
};

// Every subgroup of `g`, canonical order.
std::vector<ElementSet> EnumerateSubgroups(const FiniteGroup& g);

struct HomogeneityResult {
  bool pass = true;
  std::size_t kmax = 0;
  // Least failing (A, b, c) in (|A|, A, b, c) order.
  std::optional<ElementSet> set;
  std::optional<Element> b;
  std::optional<Element> c;
  std::string witness() const;
};

HomogeneityResult CheckFiniteHomogeneity(const GroupPregeometry& gp,
                                         std::size_t kmax = kDefaultKmax);

struct GenericProductResult {
  bool pass = true;
  // Least (A, a, b) with a ∉ cl(A ∪ b) but a·b ∈ cl(A ∪ b).
  std::optional<ElementSet> set;
  std::optional<Element> a;
  std::optional<Element> b;
  std::string witness() const;
};

GenericProductResult CheckGenericProduct(const GroupPregeometry& gp,
                                         std::size_t kmax = kDefaultKmax);

struct InvariantSubgroupResult {
  bool pass = true;
  std::optional<ElementSet> set;
  std::optional<ElementSet> subgroup;
  std::string witness() const;
};

// For each A with |A| <= kmax: an A-invariant subgroup not inside cl(A)
// must be the whole group.
InvariantSubgroupResult CheckInvariantSubgroups(const GroupPregeometry& gp,
                                                std::size_t kmax = kDefaultKmax);
InvariantSubgroupResult CheckInvariantSubgroupsAt(const GroupPregeometry& gp,
                                                  const ElementSet& a);

struct InvariantElementResult {
  bool pass = true;
  std::optional<ElementSet> set;
  std::optional<Element> element;
  std::string witness() const;
};

// For each A with |A| <= kmax: an element fixed by every automorphism that
// fixes A pointwise lies in cl(A).
InvariantElementResult CheckInvariantElements(const GroupPregeometry& gp,
                                              std::size_t kmax = kDefaultKmax);

// Nontriviality restated finitely: finite homogeneity at kmax = 1 and rank
// at least 2 force a nontrivial pregeometry. VACUOUS when the premises fail.
struct NontrivialityResult {
  Outcome outcome = Outcome::kVacuous;
  bool homogeneous = false;
  std::size_t rank = 0;
  bool trivial = false;
};

NontrivialityResult CheckNontriviality(const GroupPregeometry& gp);

struct ConfigurationWitness {
  ElementSet base;  // A
  Element a = 0;
  Element b = 0;
  Element c = 0;
  // (b,c), (ab,ac), (ba,ca) as sets of point ids, in ground labels.
  std::array<ElementSet, 3> lines;
  // Pairwise meets and common point, in ground labels.
  ConcurrencyResult result;
  bool first_membership = false;   // c⁻¹b ∈ cl_A(b,c) ∩ cl_A(ab,ac)
  bool second_membership = false;  // bc⁻¹ ∈ cl_A(b,c) ∩ cl_A(ba,ca)
  bool clcom_hypothesis = false;   // ba ∈ cl_A(ab)

  bool failed() const {
    return !result.concurrent || !first_membership || !second_membership;
  }
  std::string ToString() const;
};

struct ConfigurationSummary {
  std::size_t total = 0;
  std::size_t concurrent = 0;
  std::size_t degenerate = 0;
  std::size_t failed = 0;
  std::size_t clcom_hypothesis = 0;
  std::size_t planes_built = 0;
};

struct ConfigurationOptions {
  // Keep every examined triple; otherwise keep failures only.
  bool keep_all = false;
  std::size_t max_failures_kept = 64;
};

struct ConfigurationScan {
  ConfigurationSummary summary;
  std::vector<ConfigurationWitness> witnesses;
  std::optional<ConfigurationWitness> first_failure;

  bool pass() const { return summary.failed == 0; }
};

// Scans every (a, b, c) with dim(a,b/A) = 2 and c ∉ cl_A(a,b). Each triple
// is placed in the plane of the localized geometry on cl_A(a,b,c), where the
// lines (b,c), (ab,ac), (ba,ca) must share a point and both product
// identities must hold. Triples whose points do not form that configuration
// are counted as degenerate. NotProjectiveError propagates.
ConfigurationScan CheckConfiguration(const GroupPregeometry& gp,
                                     const ElementSet& a,
                                     const ConfigurationOptions& options = {});

struct ClcomResult {
  Outcome outcome = Outcome::kVacuous;
  HomogeneityResult homogeneity;
  bool hypothesis = false;
  std::optional<std::array<Element, 2>> hypothesis_pair;
  // The commuting-pair sub-case: some generic pair has ab = ba.
  bool commuting_pair = false;
  bool conclusion = false;  // G is commutative
};

// If finite homogeneity (kmax = min(|A| + 2, kMaxKmax)) holds and some pair
// generic over A has ba ∈ cl(A, ab), then G must be commutative.
ClcomResult CheckClcomCommutativity(const GroupPregeometry& gp,
                                    const ElementSet& a);

}  // namespace pregeo

#endif  // PREGEO_GROUP_HARNESS_H_
