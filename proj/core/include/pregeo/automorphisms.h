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

#ifndef PREGEO_AUTOMORPHISMS_H_
#define PREGEO_AUTOMORPHISMS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pregeo/element_set.h"
#include "pregeo/finite_group.h"

namespace pregeo {

// Listing Aut(G) is limited to groups of this order.
inline constexpr std::size_t kMaxAutomorphismGroupOrder = 64;
// The stabilizer-chain search (order and strong generators) goes further.
inline constexpr std::size_t kMaxSearchGroupOrder = 256;
// Listing stops here; larger automorphism groups are handled through a
// strong generating set.
inline constexpr std::uint64_t kMaxListedAutomorphisms = 100000;

// A bijection of group elements with f(x·y) = f(x)·f(y).
struct Automorphism {
  std::vector<Element> map;

  Element operator()(Element x) const { return map[x]; }
  ElementSet Apply(const ElementSet& s) const;
  bool Fixes(const ElementSet& s) const;  // pointwise
  bool IsIdentity() const;
  // "[0,3,2,1]"
  std::string ToString() const;

  bool operator==(const Automorphism&) const = default;
  friend bool operator<(const Automorphism& a, const Automorphism& b) {
    return a.map < b.map;
  }
};

bool IsAutomorphism(const FiniteGroup& g, std::span<const Element> map);

// Aut(G) for a group of order at most kMaxSearchGroupOrder.
//
// An automorphism is fixed by the images of a generating sequence
// g1..gk chosen greedily (each the least element outside the subgroup
// generated so far). Images are assigned one generator at a time; a partial
// assignment survives only if it extends to an injective homomorphism on
// <g1..gi>. Searching for one completion per candidate image of g_i with
// g1..g_{i-1} fixed yields the orbit sizes along the stabilizer chain, hence
// the exact order and a strong generating set, without listing the group.
class AutomorphismGroup {
 public:
  // CapacityError above kMaxSearchGroupOrder.
  explicit AutomorphismGroup(const FiniteGroup& g);

  const FiniteGroup& group() const { return group_; }
  const std::vector<Element>& generating_sequence() const { return gens_; }
  std::uint64_t Order() const { return order_; }
  // Sorted; the identity is not included.
  const std::vector<Automorphism>& StrongGenerators() const {
    return strong_generators_;
  }
  bool Listable() const {
    return group_.order() <= kMaxAutomorphismGroupOrder &&
           order_ <= kMaxListedAutomorphisms;
  }
  // Every automorphism in ascending map order (identity first). Built at
  // construction when Listable(); CapacityError otherwise.
  const std::vector<Automorphism>& All() const;

  // Automorphisms fixing `a` pointwise, ascending. Requires Listable().
  std::vector<Automorphism> PointwiseStabilizer(const ElementSet& a) const;

 private:
  FiniteGroup group_;
  std::vector<Element> gens_;
  std::uint64_t order_ = 0;
  std::vector<Automorphism> strong_generators_;
  std::optional<std::vector<Automorphism>> all_;
};

// Every automorphism of `g`, ascending. CapacityError for large groups.
std::vector<Automorphism> ListAutomorphisms(const FiniteGroup& g);

}  // namespace pregeo

#endif  // PREGEO_AUTOMORPHISMS_H_
