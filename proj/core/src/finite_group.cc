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

#include "pregeo/finite_group.h"

#include <array>
#include <string>

#include "pregeo/constructors.h"
#include "pregeo/errors.h"

namespace pregeo {

FiniteGroup FiniteGroup::FromTable(std::size_t order,
                                   std::vector<Element> table) {
  if (order == 0) throw ValidationError("group order must be positive");
  if (table.size() != order * order) {
    throw ValidationError("table has " + std::to_string(table.size()) +
                          " entries, expected " +
                          std::to_string(order * order));
  }
  for (Element v : table) {
    if (v >= order) {
      throw ValidationError("table entry " + std::to_string(v) +
                            " out of range for order " +
                            std::to_string(order));
    }
  }
  auto at = [&](std::size_t i, std::size_t j) { return table[i * order + j]; };
  for (std::size_t i = 0; i < order; ++i) {
    if (at(0, i) != i || at(i, 0) != i) {
      throw ValidationError("identity must be index 0: row/column 0 differs at " +
                            std::to_string(i));
    }
  }
  FiniteGroup g;
  g.order_ = order;
  g.inverse_.assign(order, 0);
  for (std::size_t i = 0; i < order; ++i) {
    std::size_t found = order;
    for (std::size_t j = 0; j < order; ++j) {
      if (at(i, j) == 0) {
        found = j;
        break;
      }
    }
    if (found == order) {
      throw ValidationError("element " + std::to_string(i) +
                            " has no inverse");
    }
    g.inverse_[i] = static_cast<Element>(found);
  }
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      for (std::size_t z = 0; z < order; ++z) {
        if (at(at(x, y), z) != at(x, at(y, z))) {
          throw ValidationError("not associative at (" + std::to_string(x) +
                                "," + std::to_string(y) + "," +
                                std::to_string(z) + ")");
        }
      }
    }
  }
  g.table_ = std::move(table);
  g.element_order_.assign(order, 1);
  for (std::size_t x = 0; x < order; ++x) {
    Element power = static_cast<Element>(x);
    std::size_t k = 1;
    while (power != 0) {
      power = g.Mul(power, static_cast<Element>(x));
      ++k;
    }
    g.element_order_[x] = k;
  }
  return g;
}

std::optional<std::pair<Element, Element>> FiniteGroup::FirstNonCommutingPair()
    const {
  for (Element x = 0; x < order_; ++x) {
    for (Element y = x + 1; y < order_; ++y) {
      if (Mul(x, y) != Mul(y, x)) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

ElementSet FiniteGroup::Generated(const ElementSet& gens) const {
  ElementSet seen{0};
  std::vector<Element> frontier{0};
  const std::vector<Element> g = gens.Elements();
  while (!frontier.empty()) {
    const Element x = frontier.back();
    frontier.pop_back();
    for (Element s : g) {
      const Element y = Mul(x, s);
      if (!seen.Contains(y)) {
        seen.Insert(y);
        frontier.push_back(y);
      }
    }
  }
  return seen;
}

namespace groups {

FiniteGroup Cyclic(std::size_t n) {
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i * n + j] = static_cast<Element>((i + j) % n);
    }
  }
  return FiniteGroup::FromTable(n, std::move(table));
}

FiniteGroup ElementaryAbelian(std::uint32_t p, std::uint32_t k) {
  const VectorSpace space(FieldSpec{p, k});
  const std::size_t n = space.size();
  std::vector<Element> table(n * n);
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) table[i * n + j] = space.Add(i, j);
  }
  return FiniteGroup::FromTable(n, std::move(table));
}

FiniteGroup Symmetric3() {
  using Perm = std::array<int, 3>;
  const std::array<Perm, 6> perms = {{
      {0, 1, 2},  // e
      {1, 0, 2},  // (12)
      {2, 1, 0},  // (13)
      {0, 2, 1},  // (23)
      {1, 2, 0},  // (123): 1->2->3->1 in 1-based labels
      {2, 0, 1},  // (132)
  }};
  std::vector<Element> table(36);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      Perm product{};
      for (int k = 0; k < 3; ++k) product[k] = perms[i][perms[j][k]];
      for (std::size_t r = 0; r < 6; ++r) {
        if (perms[r] == product) table[i * 6 + j] = static_cast<Element>(r);
      }
    }
  }
  return FiniteGroup::FromTable(6, std::move(table));
}

FiniteGroup Quaternion8() {
  // Units 1, i, j, k as 0..3; unit_mul[u][v] = {sign, unit}.
  struct Signed {
    int sign;
    int unit;
  };
  const Signed unit_mul[4][4] = {
      {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
      {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
      {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
      {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
  };
  // Index 2u for +unit, 2u+1 for -unit.
  std::vector<Element> table(64);
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const Signed p = unit_mul[x / 2][y / 2];
      const int sign = p.sign * (x % 2 ? -1 : 1) * (y % 2 ? -1 : 1);
      table[x * 8 + y] = static_cast<Element>(2 * p.unit + (sign < 0 ? 1 : 0));
    }
  }
  return FiniteGroup::FromTable(8, std::move(table));
}

}  // namespace groups

}  // namespace pregeo
