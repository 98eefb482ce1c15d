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

#include "pregeo/automorphisms.h"

#include <algorithm>
#include <functional>

#include "pregeo/errors.h"

namespace pregeo {

ElementSet Automorphism::Apply(const ElementSet& s) const {
  ElementSet out;
  for (Element x : s) out.Insert(map[x]);
  return out;
}

bool Automorphism::Fixes(const ElementSet& s) const {
  for (Element x : s) {
    if (map[x] != x) return false;
  }
  return true;
}

bool Automorphism::IsIdentity() const {
  for (std::size_t x = 0; x < map.size(); ++x) {
    if (map[x] != x) return false;
  }
  return true;
}

std::string Automorphism::ToString() const {
  std::string out = "[";
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(map[i]);
  }
  return out + "]";
}

bool IsAutomorphism(const FiniteGroup& g, std::span<const Element> map) {
  const std::size_t n = g.order();
  if (map.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (Element y : map) {
    if (y >= n || hit[y]) return false;
    hit[y] = true;
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (map[g.Mul(x, y)] != g.Mul(map[x], map[y])) return false;
    }
  }
  return true;
}

namespace {

constexpr Element kUnset = ~Element{0};

// Partial homomorphisms determined by images of a generating sequence.
class Extender {
 public:
  Extender(const FiniteGroup& g, const std::vector<Element>& gens)
      : g_(g), gens_(gens) {}

  // Extends gens[0..images.size()) -> images along the Cayley graph of the
  // prefix subgroup. True iff every edge agrees and the map is injective.
  // Checking each edge x -> x·g_j makes the map multiplicative on the whole
  // subgroup (induct on word length).
  bool Build(std::span<const Element> images, std::vector<Element>& phi) const {
    const std::size_t n = g_.order();
    phi.assign(n, kUnset);
    std::vector<bool> used(n, false);
    std::vector<Element> queue{0};
    phi[0] = 0;
    used[0] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Element x = queue[head];
      for (std::size_t j = 0; j < images.size(); ++j) {
        const Element y = g_.Mul(x, gens_[j]);
        const Element value = g_.Mul(phi[x], images[j]);
        if (phi[y] == kUnset) {
          if (used[value]) return false;
          used[value] = true;
          phi[y] = value;
          queue.push_back(y);
        } else if (phi[y] != value) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<Element> Candidates(std::size_t level) const {
    std::vector<Element> out;
    const std::size_t order = g_.ElementOrder(gens_[level]);
    for (Element y = 0; y < g_.order(); ++y) {
      if (g_.ElementOrder(y) == order) out.push_back(y);
    }
    return out;
  }

  // Depth-first over the remaining levels; `visit` returns false to stop.
  // Returns false iff stopped.
  bool Search(std::vector<Element>& images,
              const std::function<bool(const std::vector<Element>&)>& visit)
      const {
    std::vector<Element> phi;
    if (images.size() == gens_.size()) {
      Build(images, phi);
      return visit(phi);
    }
    const std::size_t level = images.size();
    for (Element y : Candidates(level)) {
      images.push_back(y);
      const bool keep_going = !Build(images, phi) || Search(images, visit);
      images.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

 private:
  const FiniteGroup& g_;
  const std::vector<Element>& gens_;
};

}  // namespace

AutomorphismGroup::AutomorphismGroup(const FiniteGroup& g) : group_(g) {
  if (g.order() > kMaxSearchGroupOrder) {
    throw CapacityError("automorphism search is limited to groups of order " +
                        std::to_string(kMaxSearchGroupOrder));
  }
  ElementSet generated{0};
  for (Element x = 0; x < g.order(); ++x) {
    if (generated.Contains(x)) continue;
    gens_.push_back(x);
    generated = g.Generated(ElementSet(std::span<const Element>(gens_)));
  }

  const Extender extender(group_, gens_);
  order_ = 1;
  std::vector<Element> phi;
  for (std::size_t level = 0; level < gens_.size(); ++level) {
    std::uint64_t orbit = 0;
    for (Element y : extender.Candidates(level)) {
      std::vector<Element> images(gens_.begin(), gens_.begin() + level);
      images.push_back(y);
      if (!extender.Build(images, phi)) continue;
      std::optional<std::vector<Element>> found;
      extender.Search(images, [&](const std::vector<Element>& map) {
        found = map;
        return false;
      });
      if (!found) continue;
      ++orbit;
      if (y != gens_[level]) strong_generators_.push_back({*found});
    }
    order_ *= orbit;
  }
  std::sort(strong_generators_.begin(), strong_generators_.end());

  if (Listable()) {
    std::vector<Automorphism> all;
    std::vector<Element> images;
    extender.Search(images, [&](const std::vector<Element>& map) {
      all.push_back({map});
      return true;
    });
    std::sort(all.begin(), all.end());
    all_ = std::move(all);
  }
}

const std::vector<Automorphism>& AutomorphismGroup::All() const {
  if (!all_) {
    throw CapacityError(
        "listing Aut(G) needs |G| <= " +
        std::to_string(kMaxAutomorphismGroupOrder) + " and |Aut(G)| <= " +
        std::to_string(kMaxListedAutomorphisms) + "; got |G| = " +
        std::to_string(group_.order()) + ", |Aut(G)| = " +
        std::to_string(order_));
  }
  return *all_;
}

std::vector<Automorphism> AutomorphismGroup::PointwiseStabilizer(
    const ElementSet& a) const {
  std::vector<Automorphism> out;
  for (const Automorphism& f : All()) {
    if (f.Fixes(a)) out.push_back(f);
  }
  return out;
}

std::vector<Automorphism> ListAutomorphisms(const FiniteGroup& g) {
  return AutomorphismGroup(g).All();
}

}  // namespace pregeo
