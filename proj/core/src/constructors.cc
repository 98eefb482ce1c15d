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

#include <memory>
#include <string>
#include <utility>

#include "pregeo/errors.h"

namespace pregeo {

bool IsPrime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t k = 2; k * k <= n; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

std::size_t FieldSpec::Size() const {
  std::size_t size = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    size *= q;
    if (size > kMaxFieldGround) return kMaxFieldGround + 1;
  }
  return size;
}

void FieldSpec::Validate() const {
  if (!IsPrime(q)) {
    throw InputError("field order " + std::to_string(q) +
                     " is not prime (prime powers are not supported)");
  }
  if (d == 0) throw InputError("vector space dimension must be at least 1");
  if (Size() > kMaxFieldGround) {
    throw InputError("q^d exceeds " + std::to_string(kMaxFieldGround));
  }
}

VectorSpace::VectorSpace(FieldSpec spec) : spec_(spec) {
  spec_.Validate();
  size_ = spec_.Size();
  inverse_.assign(spec_.q, 0);
  for (std::uint32_t a = 1; a < spec_.q; ++a) {
    for (std::uint32_t b = 1; b < spec_.q; ++b) {
      if (a * b % spec_.q == 1) inverse_[a] = b;
    }
  }
  if (size_ <= kAddTableLimit) {
    auto table = std::make_shared<std::vector<std::uint16_t>>(size_ * size_);
    for (Element x = 0; x < size_; ++x) {
      for (Element y = 0; y < size_; ++y) {
        (*table)[x * size_ + y] = static_cast<std::uint16_t>(Add(x, y));
      }
    }
    add_ = std::move(table);
  }
}

std::vector<std::uint32_t> VectorSpace::Coords(Element v) const {
  std::vector<std::uint32_t> c(spec_.d);
  for (std::uint32_t i = 0; i < spec_.d; ++i) {
    c[i] = v % spec_.q;
    v /= spec_.q;
  }
  return c;
}

Element VectorSpace::FromCoords(const std::vector<std::uint32_t>& coords) const {
  Element v = 0;
  for (std::size_t i = coords.size(); i-- > 0;) v = v * spec_.q + coords[i] % spec_.q;
  return v;
}

Element VectorSpace::Add(Element x, Element y) const {
  if (add_) return (*add_)[x * size_ + y];
  Element out = 0;
  Element place = 1;
  for (std::uint32_t i = 0; i < spec_.d; ++i) {
    out += ((x % spec_.q + y % spec_.q) % spec_.q) * place;
    x /= spec_.q;
    y /= spec_.q;
    place *= spec_.q;
  }
  return out;
}

Element VectorSpace::Scale(std::uint32_t k, Element x) const {
  Element out = 0;
  Element place = 1;
  for (std::uint32_t i = 0; i < spec_.d; ++i) {
    out += ((x % spec_.q) * (k % spec_.q) % spec_.q) * place;
    x /= spec_.q;
    place *= spec_.q;
  }
  return out;
}

Element VectorSpace::Sub(Element x, Element y) const {
  return Add(x, Scale(spec_.q - 1, y));
}

Element VectorSpace::Unit(std::uint32_t i) const {
  Element v = 1;
  for (std::uint32_t k = 0; k < i; ++k) v *= spec_.q;
  return v;
}

std::vector<Element> VectorSpace::SpanMembers(const ElementSet& a) const {
  const std::uint32_t q = spec_.q;
  // Row-echelon basis with normalized pivots.
  std::vector<std::vector<std::uint32_t>> rows;
  std::vector<std::uint32_t> pivots;
  for (Element v : a) {
    std::vector<std::uint32_t> c = Coords(v);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::uint32_t f = c[pivots[r]];
      if (f == 0) continue;
      for (std::uint32_t i = 0; i < spec_.d; ++i) {
        c[i] = (c[i] + (q - f) * rows[r][i]) % q;
      }
    }
    std::uint32_t pivot = 0;
    while (pivot < spec_.d && c[pivot] == 0) ++pivot;
    if (pivot == spec_.d) continue;
    const std::uint32_t inv = inverse_[c[pivot]];
    for (std::uint32_t& x : c) x = x * inv % q;
    rows.push_back(std::move(c));
    pivots.push_back(pivot);
  }
  std::vector<Element> members{0};
  std::size_t total = 1;
  for (std::size_t r = 0; r < rows.size(); ++r) total *= q;
  members.reserve(total);
  for (const auto& row : rows) {
    const Element b = FromCoords(row);
    const std::size_t base = members.size();
    for (std::uint32_t t = 1; t < q; ++t) {
      const Element step = Scale(t, b);
      for (std::size_t i = 0; i < base; ++i) {
        members.push_back(Add(members[i], step));
      }
    }
  }
  return members;
}

ElementSet VectorSpace::Span(const ElementSet& a) const {
  ElementSet out;
  for (Element m : SpanMembers(a)) out.Insert(m);
  return out;
}

ElementSet VectorSpace::AffineHull(const ElementSet& a) const {
  if (a.Empty()) return {};
  const Element origin = *a.Min();
  ElementSet directions;
  for (Element v : a) directions.Insert(Sub(v, origin));
  ElementSet out;
  for (Element d : SpanMembers(directions)) out.Insert(Add(origin, d));
  return out;
}

namespace {

std::string FieldName(const FieldSpec& spec) {
  return "GF(" + std::to_string(spec.q) + ")^" + std::to_string(spec.d);
}

}  // namespace

ClosureTable ExplicitFromFlats(std::size_t ground_size,
                               std::vector<ElementSet> flats) {
  return ClosureTable::FromFlats(ground_size, std::move(flats));
}

ClosureTable LinearMatroid(FieldSpec spec) {
  auto space = std::make_shared<const VectorSpace>(spec);
  return ClosureTable::FromRule(
      space->size(), [space](const ElementSet& a) { return space->Span(a); },
      "linear " + FieldName(spec), /*algebraic=*/true);
}

ClosureTable AffineMatroid(FieldSpec spec) {
  auto space = std::make_shared<const VectorSpace>(spec);
  return ClosureTable::FromRule(
      space->size(),
      [space](const ElementSet& a) { return space->AffineHull(a); },
      "affine " + FieldName(spec), /*algebraic=*/true);
}

ClosureTable TrivialPregeometry(std::size_t ground_size,
                                const ElementSet& loops) {
  GroundSet(ground_size).Require(loops, "loop set");
  return ClosureTable::FromRule(
      ground_size, [loops](const ElementSet& a) { return a | loops; },
      "trivial loops=" + loops.ToString(), /*algebraic=*/true);
}

ClosureTable SubgroupClosure(const FiniteGroup& group) {
  return ClosureTable::FromRule(
      group.order(),
      [group](const ElementSet& a) { return group.Generated(a); },
      "subgroup closure", /*algebraic=*/true);
}

}  // namespace pregeo
