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

#ifndef PREGEO_MATROID_H_
#define PREGEO_MATROID_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "pregeo/closure.h"
#include "pregeo/element_set.h"

namespace pregeo {

// Flat enumeration refuses to materialize more than this many closed sets.
inline constexpr std::size_t kMaxFlats = std::size_t{1} << 18;

// A closure table known to satisfy the pregeometry axioms.
//
// Copies share the table and the lazily built flat cache, so a Matroid is
// cheap to pass by value and safe to read from several threads.
class Matroid {
 public:
  // Runs VerifyAxioms and throws AxiomError naming the first failing axiom.
  static Matroid Validate(ClosureTable table);
  // For tables derived from an already validated matroid by an operation
  // that provably preserves the axioms (restriction, localization, quotient).
  static Matroid Derived(ClosureTable table);

  const ClosureTable& table() const;
  const GroundSet& ground() const { return table().ground(); }
  std::size_t ground_size() const { return table().ground_size(); }

  // Least flat containing `a`. Throws InputError for out-of-range members.
  ElementSet Close(const ElementSet& a) const { return table().Close(a); }
  ElementSet Loops() const { return Close({}); }

  // dim(a / over): size of a maximal subset of `a` independent over `over`.
  std::size_t Rank(const ElementSet& a, const ElementSet& over = {}) const;
  std::size_t TotalRank() const;
  // Lexicographically least maximal independent subset of `a`.
  ElementSet BasisWithin(const ElementSet& a) const;
  bool IsIndependent(const ElementSet& a) const;
  bool IsFlat(const ElementSet& a) const { return Close(a) == a; }

  // Every closed set in canonical order. Throws CapacityError beyond
  // kMaxFlats.
  const std::vector<ElementSet>& Flats() const;

 private:
  struct State;
  explicit Matroid(std::shared_ptr<State> state) : state_(std::move(state)) {}

  std::shared_ptr<State> state_;
};

// cl^Y(A) = cl(A) ∩ Y, re-indexed so that local index i is Y's i-th member.
// Throws InputError for an empty or out-of-range Y.
Matroid Restrict(const Matroid& m, const ElementSet& y);

// cl_Y(A) = cl(A ∪ Y) on the same ground.
Matroid Localize(const Matroid& m, const ElementSet& y);

// All flats, or only those of rank `rank`, in canonical order.
std::vector<ElementSet> EnumerateFlats(
    const Matroid& m, std::optional<std::size_t> rank = std::nullopt);

// Maps a local index of Restrict(m, y) back to the parent element and back.
ElementSet LiftFromRestriction(const ElementSet& local,
                               const std::vector<Element>& y_members);
ElementSet LowerToRestriction(const ElementSet& parent,
                              const std::vector<Element>& y_members);

}  // namespace pregeo

#endif  // PREGEO_MATROID_H_
