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

#ifndef PREGEO_FINITE_GROUP_H_
#define PREGEO_FINITE_GROUP_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pregeo/element_set.h"

namespace pregeo {

// A group given by its Cayley table. Element 0 is the identity; entry
// table[i * order + j] holds i·j.
class FiniteGroup {
 public:
  // Throws ValidationError when the table is not a group with identity 0,
  // naming the first violated law (and the triple, for associativity).
  static FiniteGroup FromTable(std::size_t order, std::vector<Element> table);

  std::size_t order() const { return order_; }
  const std::vector<Element>& table() const { return table_; }

  Element Mul(Element x, Element y) const { return table_[x * order_ + y]; }
  Element Inverse(Element x) const { return inverse_[x]; }
  // Least k >= 1 with x^k = 0.
  std::size_t ElementOrder(Element x) const { return element_order_[x]; }

  bool IsAbelian() const { return !FirstNonCommutingPair().has_value(); }
  std::optional<std::pair<Element, Element>> FirstNonCommutingPair() const;

  // Subgroup generated by `gens`.
  ElementSet Generated(const ElementSet& gens) const;
  ElementSet All() const { return ElementSet::Range(order_); }

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::size_t> element_order_;
};

namespace groups {

// Z_n under addition mod n.
FiniteGroup Cyclic(std::size_t n);
// (Z_p)^k; element index Σ c_i·p^i, matching the field constructors.
FiniteGroup ElementaryAbelian(std::uint32_t p, std::uint32_t k);
// S3 in the order e, (12), (13), (23), (123), (132); x·y applies y first.
FiniteGroup Symmetric3();
// Q8 in the order 1, -1, i, -i, j, -j, k, -k.
FiniteGroup Quaternion8();

}  // namespace groups

}  // namespace pregeo

#endif  // PREGEO_FINITE_GROUP_H_
