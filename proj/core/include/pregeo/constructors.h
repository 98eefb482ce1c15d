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

// Builders for the standard pregeometry families and for negative controls.

#ifndef PREGEO_CONSTRUCTORS_H_
#define PREGEO_CONSTRUCTORS_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "pregeo/closure.h"
#include "pregeo/element_set.h"
#include "pregeo/finite_group.h"

namespace pregeo {

inline constexpr std::size_t kMaxFieldGround = 4096;

// GF(q)^d with q prime. Throws InputError unless q is prime, d >= 1 and
// q^d <= kMaxFieldGround.
struct FieldSpec {
  std::uint32_t q;
  std::uint32_t d;

  std::size_t Size() const;
  void Validate() const;
};

bool IsPrime(std::uint32_t n);

// Coordinate arithmetic on GF(q)^d. Vectors are addressed by their
// little-endian positional index Σ c_i·q^i, the indexing every field
// constructor and the elementary abelian group catalog share.
inline constexpr std::size_t kAddTableLimit = 1024;

class VectorSpace {
 public:
  explicit VectorSpace(FieldSpec spec);

  const FieldSpec& spec() const { return spec_; }
  std::size_t size() const { return size_; }

  std::vector<std::uint32_t> Coords(Element v) const;
  Element FromCoords(const std::vector<std::uint32_t>& coords) const;
  Element Add(Element x, Element y) const;
  Element Sub(Element x, Element y) const;
  Element Scale(std::uint32_t k, Element x) const;
  // Unit vector e_{i+1} (0-based coordinate i).
  Element Unit(std::uint32_t i) const;

  // Linear span; Span({}) = {0}.
  ElementSet Span(const ElementSet& a) const;
  // Affine hull; AffineHull({}) = {}.
  ElementSet AffineHull(const ElementSet& a) const;

 private:
  std::vector<Element> SpanMembers(const ElementSet& a) const;

  FieldSpec spec_;
  std::size_t size_;
  std::vector<std::uint32_t> inverse_;
  // x + y as (*add_)[x * size_ + y]; null above kAddTableLimit.
  std::shared_ptr<const std::vector<std::uint16_t>> add_;
};

// Least-containing-flat operator over an arbitrary flat list.
ClosureTable ExplicitFromFlats(std::size_t ground_size,
                               std::vector<ElementSet> flats);

// cl(A) = linear span of A in GF(q)^d.
ClosureTable LinearMatroid(FieldSpec spec);

// cl(A) = affine hull of A in GF(q)^d.
ClosureTable AffineMatroid(FieldSpec spec);

// cl(A) = A ∪ loops.
ClosureTable TrivialPregeometry(std::size_t ground_size,
                                const ElementSet& loops = {});

// cl(A) = subgroup generated by A. Usually not a pregeometry.
ClosureTable SubgroupClosure(const FiniteGroup& group);

}  // namespace pregeo

#endif  // PREGEO_CONSTRUCTORS_H_
