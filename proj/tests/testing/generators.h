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

// Seeded random instances for property tests.

#ifndef PREGEO_TESTING_GENERATORS_H_
#define PREGEO_TESTING_GENERATORS_H_

#include <random>
#include <string>
#include <vector>

#include "pregeo/closure.h"
#include "pregeo/constructors.h"
#include "pregeo/element_set.h"

namespace pregeo::testing {

inline ElementSet RandomSubset(std::mt19937& rng, std::size_t n,
                               double density = 0.5) {
  std::bernoulli_distribution coin(density);
  ElementSet out;
  for (Element x = 0; x < n; ++x) {
    if (coin(rng)) out.Insert(x);
  }
  return out;
}

inline ElementSet RandomSubsetOfSize(std::mt19937& rng, std::size_t n,
                                     std::size_t k) {
  std::vector<Element> all(n);
  for (Element x = 0; x < n; ++x) all[x] = x;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min(k, n));
  return ElementSet(std::span<const Element>(all));
}

// The matroid of `n` random vectors (repeats and zero allowed) in GF(q)^d:
// cl(A) = every element whose vector is in the span of A's vectors.
struct VectorConfiguration {
  FieldSpec spec;
  std::vector<Element> vectors;

  ClosureTable Table() const {
    const VectorSpace space(spec);
    const std::vector<Element> v = vectors;
    return ClosureTable::FromRule(
        v.size(),
        [space, v](const ElementSet& a) {
          ElementSet image;
          for (Element x : a) image.Insert(v[x]);
          const ElementSet span = space.Span(image);
          ElementSet out;
          for (Element x = 0; x < v.size(); ++x) {
            if (span.Contains(v[x])) out.Insert(x);
          }
          return out;
        },
        "vector configuration", true);
  }
};

inline VectorConfiguration RandomConfiguration(std::mt19937& rng,
                                               std::size_t n, FieldSpec spec) {
  std::uniform_int_distribution<Element> pick(
      0, static_cast<Element>(spec.Size() - 1));
  VectorConfiguration c{spec, {}};
  for (std::size_t i = 0; i < n; ++i) c.vectors.push_back(pick(rng));
  return c;
}

}  // namespace pregeo::testing

#endif  // PREGEO_TESTING_GENERATORS_H_
