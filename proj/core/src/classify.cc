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

#include "pregeo/classify.h"

#include <memory>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "pregeo/errors.h"

namespace pregeo {

ElementSet Geometry::ToRepresentatives(const ElementSet& points) const {
  ElementSet out;
  for (Element p : points) out.Insert(representatives.at(p));
  return out;
}

ElementSet Geometry::Preimage(const ElementSet& points) const {
  ElementSet out;
  for (Element p : points) out |= classes.at(p);
  return out;
}

Geometry Geometrize(const Matroid& m) {
  Geometry g{m, std::nullopt, {}, {}, {}};
  const std::size_t n = m.ground_size();
  const ElementSet loops = m.Loops();
  g.point_of.assign(n, -1);
  for (Element x = 0; x < n; ++x) {
    if (loops.Contains(x) || g.point_of[x] >= 0) continue;
    const ElementSet span = m.Close({x});
    ElementSet cls;
    // x is the least member of its class, since smaller non-loops are
    // already assigned.
    for (Element y : span - loops) {
      if (y >= x && m.Close({y}) == span) cls.Insert(y);
    }
    const auto index = static_cast<std::int32_t>(g.representatives.size());
    for (Element y : cls) g.point_of[y] = index;
    g.representatives.push_back(x);
    g.classes.push_back(std::move(cls));
  }
  if (g.representatives.empty()) return g;

  auto point_of = std::make_shared<const std::vector<std::int32_t>>(g.point_of);
  auto reps =
      std::make_shared<const std::vector<Element>>(g.representatives);
  ClosureTable::Rule rule = [m, point_of, reps](const ElementSet& points) {
    ElementSet lifted;
    for (Element p : points) lifted.Insert((*reps)[p]);
    ElementSet out;
    for (Element y : m.table().CloseUnchecked(lifted)) {
      if ((*point_of)[y] >= 0) out.Insert(static_cast<Element>((*point_of)[y]));
    }
    return out;
  };
  ClosureTable table = ClosureTable::FromRule(
      g.representatives.size(), std::move(rule),
      "geometry of " + m.table().description(), m.table().algebraic());
  g.base = table.ground_size() <= kExhaustiveGroundLimit
               ? Matroid::Validate(std::move(table))
               : Matroid::Derived(std::move(table));
  return g;
}

bool SatisfiesModularEquation(const Matroid& m, const ElementSet& a,
                              const ElementSet& b) {
  return m.Rank(m.Close(a | b)) + m.Rank(a & b) == m.Rank(a) + m.Rank(b);
}

namespace {

struct ModularScan {
  bool modular = true;
  std::optional<FlatPair> modular_witness;
  bool locally_modular = true;
  std::optional<FlatPair> locally_modular_witness;
};

const std::vector<ElementSet>& ClassifiableFlats(const Matroid& m) {
  const std::vector<ElementSet>& flats = m.Flats();
  if (flats.size() > kMaxClassifyFlats) {
    throw CapacityError("classification scans flat pairs; " +
                        std::to_string(flats.size()) + " flats exceed " +
                        std::to_string(kMaxClassifyFlats));
  }
  return flats;
}

// Pairs (i, j) with i <= j in canonical order: by symmetry of the equation
// the least failing ordered pair always has its smaller flat first.
ModularScan ScanFlatPairs(const Matroid& m) {
  const std::vector<ElementSet>& flats = ClassifiableFlats(m);
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> rank_of;
  rank_of.reserve(flats.size());
  // cl(F ∪ G) = cl(basis(F) ∪ basis(G)), and bases are small.
  std::vector<ElementSet> bases;
  bases.reserve(flats.size());
  for (const ElementSet& f : flats) {
    bases.push_back(m.BasisWithin(f));
    rank_of.emplace(f, bases.back().Size());
  }

  ModularScan scan;
  for (std::size_t i = 0; i < flats.size(); ++i) {
    const std::size_t ri = rank_of.at(flats[i]);
    for (std::size_t j = i; j < flats.size(); ++j) {
      if (flats[i].IsSubsetOf(flats[j]) || flats[j].IsSubsetOf(flats[i])) {
        continue;
      }
      const std::size_t rj = rank_of.at(flats[j]);
      const std::size_t join =
          rank_of.at(m.table().CloseUnchecked(bases[i] | bases[j]));
      const std::size_t meet = rank_of.at(flats[i] & flats[j]);
      if (join + meet == ri + rj) continue;
      if (scan.modular) {
        scan.modular = false;
        scan.modular_witness = FlatPair{flats[i], flats[j]};
      }
      if (meet > 0 && scan.locally_modular) {
        scan.locally_modular = false;
        scan.locally_modular_witness = FlatPair{flats[i], flats[j]};
        return scan;
      }
    }
  }
  return scan;
}

}  // namespace

ClassificationReport Classify(const Matroid& m,
                              const ClassifyOptions& options) {
  ClassificationReport report;
  const ElementSet loops = m.Loops();
  const std::size_t n = m.ground_size();

  report.is_geometry = loops.Empty();
  for (Element x = 0; x < n && report.is_geometry; ++x) {
    if (m.Close({x}) != ElementSet{x}) report.is_geometry = false;
  }

  const std::vector<ElementSet>& flats = ClassifiableFlats(m);
  if (options.full_subset_triviality) {
    if (n > kExhaustiveGroundLimit) {
      throw CapacityError("full-subset triviality is limited to grounds of " +
                          std::to_string(kExhaustiveGroundLimit));
    }
    std::vector<ElementSet> singles;
    for (Element x = 0; x < n; ++x) singles.push_back(m.Close({x}));
    std::vector<ElementSet> subsets = SubsetsUpTo(m.ground().Full(), n);
    for (const ElementSet& a : subsets) {
      ElementSet unions = loops;
      for (Element x : a) unions |= singles[x];
      const ElementSet closed = m.Close(a);
      if (closed != unions) {
        report.trivial = false;
        report.trivial_witness = FlatPair{a, closed};
        break;
      }
    }
  } else {
    // cl(A) = cl(∅) ∪ ⋃ cl(a) for all A  <=>  F ∪ P is closed for every flat
    // F and rank-1 flat P (induct on the points of A).
    std::vector<ElementSet> points;
    for (const ElementSet& f : flats) {
      if (m.Rank(f) == 1) points.push_back(f);
    }
    for (std::size_t i = 0; i < flats.size() && report.trivial; ++i) {
      for (const ElementSet& p : points) {
        const ElementSet joined = flats[i] | p;
        if (!m.IsFlat(joined)) {
          report.trivial = false;
          report.trivial_witness = FlatPair{flats[i], p};
          break;
        }
      }
    }
  }

  const ModularScan scan = ScanFlatPairs(m);
  report.modular = scan.modular;
  report.modular_witness = scan.modular_witness;
  report.locally_modular = scan.locally_modular;
  report.locally_modular_witness = scan.locally_modular_witness;
  return report;
}

LocalModularityEquivalence CheckLocalModularityEquivalence(const Matroid& m) {
  LocalModularityEquivalence result;
  const ModularScan direct = ScanFlatPairs(m);
  result.restricted_equation = direct.locally_modular;
  result.restricted_witness = direct.locally_modular_witness;

  const ElementSet loops = m.Loops();
  std::unordered_set<ElementSet, ElementSetHash> done;
  for (Element a = 0; a < m.ground_size(); ++a) {
    if (loops.Contains(a)) continue;
    // Parallel elements localize to the same operator.
    if (!done.insert(m.Close({a})).second) continue;
    const ModularScan local = ScanFlatPairs(Localize(m, {a}));
    if (!local.modular) {
      result.all_localizations_modular = false;
      result.non_modular_point = a;
      break;
    }
  }
  result.agree = result.restricted_equation == result.all_localizations_modular;
  return result;
}

}  // namespace pregeo
