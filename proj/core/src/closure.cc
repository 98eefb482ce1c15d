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

#include "pregeo/closure.h"

#include <algorithm>
#include <bit>
#include <random>
#include <unordered_set>
#include <utility>

#include "pregeo/errors.h"

namespace pregeo {

GroundSet::GroundSet(std::size_t size) : size_(size) {
  if (size == 0) throw InputError("ground set must have at least 1 element");
}

void GroundSet::Require(const ElementSet& s, const char* what) const {
  if (!Covers(s)) {
    throw InputError(std::string(what) + " " + s.ToString() +
                     " has element " + std::to_string(*s.Max()) +
                     " outside ground of size " + std::to_string(size_));
  }
}

void GroundSet::Require(Element e, const char* what) const {
  if (e >= size_) {
    throw InputError(std::string(what) + " " + std::to_string(e) +
                     " outside ground of size " + std::to_string(size_));
  }
}

ClosureTable ClosureTable::FromFlats(std::size_t ground_size,
                                     std::vector<ElementSet> flats) {
  ClosureTable table{GroundSet(ground_size)};
  for (const ElementSet& f : flats) table.ground_.Require(f, "flat");

  std::unordered_set<ElementSet, ElementSetHash> seen(flats.begin(),
                                                      flats.end());
  const std::size_t distinct_input = seen.size();
  std::vector<ElementSet> all(seen.begin(), seen.end());
  if (seen.insert(table.ground_.Full()).second) {
    all.push_back(table.ground_.Full());
  }
  // Worklist closure under pairwise intersection.
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      ElementSet meet = all[i] & all[j];
      if (seen.insert(meet).second) all.push_back(std::move(meet));
    }
  }
  std::sort(all.begin(), all.end());
  table.added_ = all.size() - distinct_input;
  table.explicit_flats_ =
      std::make_shared<const std::vector<ElementSet>>(std::move(all));
  table.description_ = "explicit";
  return table;
}

ClosureTable ClosureTable::FromRule(std::size_t ground_size, Rule rule,
                                    std::string description, bool algebraic) {
  ClosureTable table{GroundSet(ground_size)};
  table.rule_ = std::move(rule);
  table.description_ = std::move(description);
  table.algebraic_ = algebraic;
  return table;
}

ElementSet ClosureTable::Close(const ElementSet& a) const {
  ground_.Require(a);
  return CloseUnchecked(a);
}

ElementSet ClosureTable::CloseUnchecked(const ElementSet& a) const {
  if (!explicit_flats_) return rule_(a);
  ElementSet result = ground_.Full();
  for (const ElementSet& f : *explicit_flats_) {
    if (a.IsSubsetOf(f)) result &= f;
  }
  return result;
}

const std::vector<ElementSet>& ClosureTable::explicit_flats() const {
  if (!explicit_flats_) throw InputError("closure table is not explicit");
  return *explicit_flats_;
}

bool IsReflexivityViolation(const ClosureTable& table, const ElementSet& a) {
  return !a.IsSubsetOf(table.Close(a));
}

bool IsTransitivityViolation(const ClosureTable& table, const ElementSet& a) {
  const ElementSet once = table.Close(a);
  return table.Close(once) != once;
}

bool IsExchangeViolation(const ClosureTable& table, const ElementSet& set,
                         Element a, Element b) {
  table.ground().Require(a);
  table.ground().Require(b);
  const ElementSet base = table.Close(set);
  return table.Close(set.With(b)).Contains(a) && !base.Contains(a) &&
         !table.Close(set.With(a)).Contains(b);
}

namespace {

constexpr const char* kFiniteCharacterNote = "degenerate-on-finite-grounds";

// Same-size masks: the one holding the lowest differing bit is smaller.
bool MaskOrder(std::uint32_t x, std::uint32_t y) {
  const int px = std::popcount(x);
  const int py = std::popcount(y);
  if (px != py) return px < py;
  if (x == y) return false;
  const std::uint32_t low = (x ^ y) & (~(x ^ y) + 1);
  return (x & low) != 0;
}

AxiomReport VerifyExhaustive(const ClosureTable& table) {
  const std::size_t n = table.ground_size();
  const std::uint32_t count = std::uint32_t{1} << n;
  std::vector<std::uint32_t> closed(count);
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    closed[mask] = static_cast<std::uint32_t>(
        table.CloseUnchecked(ElementSet::FromMask(mask)).Mask());
  }
  std::vector<std::uint32_t> order(count);
  for (std::uint32_t mask = 0; mask < count; ++mask) order[mask] = mask;
  std::sort(order.begin(), order.end(), MaskOrder);

  AxiomReport report;
  report.mode = VerificationMode::kExhaustive;
  report.subsets_checked = count;
  report.finite_character.note = kFiniteCharacterNote;

  for (std::uint32_t mask : order) {
    const std::uint32_t missing = mask & ~closed[mask];
    if (missing != 0) {
      report.reflexivity.pass = false;
      report.reflexivity.set = ElementSet::FromMask(mask);
      report.reflexivity.a = static_cast<Element>(std::countr_zero(missing));
      break;
    }
  }
  for (std::uint32_t mask : order) {
    if (closed[closed[mask]] != closed[mask]) {
      report.transitivity.pass = false;
      report.transitivity.set = ElementSet::FromMask(mask);
      break;
    }
  }
  for (std::uint32_t mask : order) {
    const std::uint32_t base = closed[mask];
    for (std::uint32_t a = 0; a < n && report.exchange.pass; ++a) {
      if ((base >> a) & 1u) continue;
      const std::uint32_t with_a = closed[mask | (1u << a)];
      for (std::uint32_t b = 0; b < n; ++b) {
        if (((closed[mask | (1u << b)] >> a) & 1u) && !((with_a >> b) & 1u)) {
          report.exchange.pass = false;
          report.exchange.set = ElementSet::FromMask(mask);
          report.exchange.a = a;
          report.exchange.b = b;
          break;
        }
      }
    }
    if (!report.exchange.pass) break;
  }
  return report;
}

std::vector<Element> SampleElements(std::size_t n, std::size_t limit,
                                    std::mt19937_64& rng) {
  std::vector<Element> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<Element>(i);
  if (n <= limit) return all;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(limit);
  std::sort(all.begin(), all.end());
  return all;
}

// Tables too large to enumerate: the empty set, singletons, and random
// subsets, each checked against a (possibly sampled) element pool.
AxiomReport VerifySampled(const ClosureTable& table,
                          const VerifyOptions& options) {
  constexpr std::size_t kElementPool = 256;
  const std::size_t n = table.ground_size();
  std::mt19937_64 rng(options.seed);

  std::vector<ElementSet> subsets;
  subsets.emplace_back();
  for (Element e : SampleElements(n, 64, rng)) subsets.push_back({e});
  std::uniform_int_distribution<std::size_t> size_dist(2,
                                                       std::min<std::size_t>(n, 8));
  std::uniform_int_distribution<Element> elem_dist(0,
                                                   static_cast<Element>(n - 1));
  for (std::size_t i = 0; i < options.random_subsets; ++i) {
    ElementSet s;
    const std::size_t k = size_dist(rng);
    while (s.Size() < k) s.Insert(elem_dist(rng));
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(), SizeThenLexLess);
  subsets.erase(std::unique(subsets.begin(), subsets.end()), subsets.end());
  const std::vector<Element> pool = SampleElements(n, kElementPool, rng);

  AxiomReport report;
  report.mode = VerificationMode::kSampled;
  report.subsets_checked = subsets.size();
  report.finite_character.note = kFiniteCharacterNote;
  report.exchange.note = "sampled";

  for (const ElementSet& s : subsets) {
    const ElementSet base = table.CloseUnchecked(s);
    if (report.reflexivity.pass && !s.IsSubsetOf(base)) {
      report.reflexivity.pass = false;
      report.reflexivity.set = s;
      report.reflexivity.a = *(s - base).Min();
    }
    if (report.transitivity.pass && table.CloseUnchecked(base) != base) {
      report.transitivity.pass = false;
      report.transitivity.set = s;
    }
    if (!report.exchange.pass) continue;
    std::vector<ElementSet> extended;
    extended.reserve(pool.size());
    for (Element x : pool) extended.push_back(table.CloseUnchecked(s.With(x)));
    for (std::size_t i = 0; i < pool.size() && report.exchange.pass; ++i) {
      const Element a = pool[i];
      if (base.Contains(a)) continue;
      for (std::size_t j = 0; j < pool.size(); ++j) {
        const Element b = pool[j];
        if (extended[j].Contains(a) && !extended[i].Contains(b)) {
          report.exchange.pass = false;
          report.exchange.set = s;
          report.exchange.a = a;
          report.exchange.b = b;
          break;
        }
      }
    }
  }
  return report;
}

}  // namespace

AxiomReport VerifyAxioms(const ClosureTable& table,
                         const VerifyOptions& options) {
  if (table.ground_size() <= kExhaustiveGroundLimit) {
    return VerifyExhaustive(table);
  }
  if (!table.algebraic()) {
    throw CapacityError("exhaustive axiom check is limited to grounds of " +
                        std::to_string(kExhaustiveGroundLimit) +
                        " elements; got " +
                        std::to_string(table.ground_size()));
  }
  return VerifySampled(table, options);
}

}  // namespace pregeo
