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

#include "pregeo/group_harness.h"

#include <algorithm>
#include <mutex>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "pregeo/classify.h"
#include "pregeo/errors.h"

namespace pregeo {

const char* OutcomeName(Outcome outcome) {
  switch (outcome) {
    case Outcome::kPass:
      return "PASS";
    case Outcome::kFail:
      return "FAIL";
    case Outcome::kVacuous:
      return "VACUOUS";
  }
  return "?";
}

namespace {

CompatibilityVerdict CheckCompatibilityWith(const AutomorphismGroup& aut,
                                            const Matroid& m) {
  const std::vector<ElementSet>& flats = m.Flats();
  const std::unordered_set<ElementSet, ElementSetHash> flat_set(flats.begin(),
                                                               flats.end());
  CompatibilityVerdict verdict;
  verdict.exhaustive = aut.Listable();
  const std::vector<Automorphism>& candidates =
      aut.Listable() ? aut.All() : aut.StrongGenerators();
  for (const Automorphism& f : candidates) {
    for (const ElementSet& flat : flats) {
      if (!flat_set.contains(f.Apply(flat))) {
        verdict.compatible = false;
        verdict.automorphism = f;
        verdict.flat = flat;
        return verdict;
      }
    }
  }
  return verdict;
}

void RequireKmax(std::size_t kmax) {
  if (kmax > kMaxKmax) {
    throw InputError("kmax " + std::to_string(kmax) + " exceeds cap " +
                     std::to_string(kMaxKmax));
  }
}

std::vector<ElementSet> BaseSets(const GroupPregeometry& gp,
                                 std::size_t kmax) {
  RequireKmax(kmax);
  return SubsetsUpTo(gp.group().All(), kmax);
}

}  // namespace

CompatibilityVerdict CheckCompatibility(const FiniteGroup& g,
                                        const Matroid& m) {
  if (g.order() != m.ground_size()) {
    throw InputError("group order " + std::to_string(g.order()) +
                     " differs from ground size " +
                     std::to_string(m.ground_size()));
  }
  return CheckCompatibilityWith(AutomorphismGroup(g), m);
}

GroupPregeometry GroupPregeometry::Create(FiniteGroup group, Matroid matroid) {
  if (group.order() != matroid.ground_size()) {
    throw InputError("group order " + std::to_string(group.order()) +
                     " differs from ground size " +
                     std::to_string(matroid.ground_size()));
  }
  AutomorphismGroup aut(group);
  CompatibilityVerdict verdict = CheckCompatibilityWith(aut, matroid);
  return GroupPregeometry(std::make_shared<const State>(
      State{std::move(aut), std::move(matroid), std::move(verdict), {}}));
}

const std::vector<ElementSet>& GroupPregeometry::Subgroups() const {
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (!state_->subgroups) state_->subgroups = EnumerateSubgroups(group());
  return *state_->subgroups;
}

void GroupPregeometry::RequireCompatible() const {
  if (!compatibility().compatible) {
    throw InputError(
        "group automorphisms do not preserve the pregeometry: " +
        compatibility().automorphism->ToString() + " moves flat " +
        compatibility().flat->ToString());
  }
}

std::vector<ElementSet> EnumerateSubgroups(const FiniteGroup& g) {
  // Each subgroup is <H, x> for a smaller subgroup H; track a generating set
  // per subgroup so closures stay cheap.
  std::unordered_map<ElementSet, ElementSet, ElementSetHash> gens_of;
  std::vector<ElementSet> order;
  const ElementSet trivial{0};
  gens_of.emplace(trivial, ElementSet{});
  order.push_back(trivial);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const ElementSet h = order[i];
    const ElementSet gens = gens_of.at(h);
    for (Element x = 0; x < g.order(); ++x) {
      if (h.Contains(x)) continue;
      const ElementSet next_gens = gens.With(x);
      ElementSet next = g.Generated(next_gens);
      if (gens_of.emplace(next, next_gens).second) order.push_back(next);
    }
  }
  std::sort(order.begin(), order.end());
  return order;
}

std::string HomogeneityResult::witness() const {
  if (pass) return "";
  return "A=" + set->ToString() + " b=" + std::to_string(*b) +
         " c=" + std::to_string(*c);
}

HomogeneityResult CheckFiniteHomogeneity(const GroupPregeometry& gp,
                                         std::size_t kmax) {
  gp.RequireCompatible();
  HomogeneityResult result;
  result.kmax = kmax;
  const Matroid& m = gp.matroid();
  const std::size_t n = m.ground_size();
  for (const ElementSet& a : BaseSets(gp, kmax)) {
    const ElementSet outside = m.ground().Full() - m.Close(a);
    if (outside.Empty()) continue;
    const std::vector<Automorphism> stabilizer =
        gp.automorphisms().PointwiseStabilizer(a);
    for (Element b : outside) {
      std::vector<bool> reached(n, false);
      for (const Automorphism& f : stabilizer) reached[f(b)] = true;
      for (Element c : outside) {
        if (!reached[c]) {
          result.pass = false;
          result.set = a;
          result.b = b;
          result.c = c;
          return result;
        }
      }
    }
  }
  return result;
}

std::string GenericProductResult::witness() const {
  if (pass) return "";
  return "A=" + set->ToString() + " b=" + std::to_string(*b) +
         " a=" + std::to_string(*a);
}

GenericProductResult CheckGenericProduct(const GroupPregeometry& gp,
                                         std::size_t kmax) {
  gp.RequireCompatible();
  GenericProductResult result;
  const Matroid& m = gp.matroid();
  const FiniteGroup& g = gp.group();
  const std::size_t n = m.ground_size();
  for (const ElementSet& base : BaseSets(gp, kmax)) {
    std::vector<ElementSet> with_b(n);
    for (Element b = 0; b < n; ++b) {
      with_b[b] = m.table().CloseUnchecked(base.With(b));
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (with_b[b].Contains(a)) continue;
        if (with_b[b].Contains(g.Mul(a, b))) {
          result.pass = false;
          result.set = base;
          result.a = a;
          result.b = b;
          return result;
        }
      }
    }
  }
  return result;
}

std::string InvariantSubgroupResult::witness() const {
  if (pass) return "";
  return "A=" + set->ToString() + " H=" + subgroup->ToString();
}

InvariantSubgroupResult CheckInvariantSubgroupsAt(const GroupPregeometry& gp,
                                                  const ElementSet& a) {
  gp.RequireCompatible();
  gp.matroid().ground().Require(a);
  InvariantSubgroupResult result;
  const ElementSet closed = gp.matroid().Close(a);
  const ElementSet whole = gp.group().All();
  const std::vector<Automorphism> stabilizer =
      gp.automorphisms().PointwiseStabilizer(a);
  for (const ElementSet& h : gp.Subgroups()) {
    if (h == whole || h.IsSubsetOf(closed)) continue;
    const bool invariant =
        std::all_of(stabilizer.begin(), stabilizer.end(),
                    [&](const Automorphism& f) { return f.Apply(h) == h; });
    if (invariant) {
      result.pass = false;
      result.set = a;
      result.subgroup = h;
      return result;
    }
  }
  return result;
}

InvariantSubgroupResult CheckInvariantSubgroups(const GroupPregeometry& gp,
                                                std::size_t kmax) {
  for (const ElementSet& a : BaseSets(gp, kmax)) {
    InvariantSubgroupResult result = CheckInvariantSubgroupsAt(gp, a);
    if (!result.pass) return result;
  }
  return {};
}

std::string InvariantElementResult::witness() const {
  if (pass) return "";
  return "A=" + set->ToString() + " x=" + std::to_string(*element);
}

InvariantElementResult CheckInvariantElements(const GroupPregeometry& gp,
                                              std::size_t kmax) {
  gp.RequireCompatible();
  InvariantElementResult result;
  const Matroid& m = gp.matroid();
  for (const ElementSet& a : BaseSets(gp, kmax)) {
    const ElementSet closed = m.Close(a);
    const std::vector<Automorphism> stabilizer =
        gp.automorphisms().PointwiseStabilizer(a);
    for (Element x = 0; x < m.ground_size(); ++x) {
      if (closed.Contains(x)) continue;
      const bool fixed =
          std::all_of(stabilizer.begin(), stabilizer.end(),
                      [&](const Automorphism& f) { return f(x) == x; });
      if (fixed) {
        result.pass = false;
        result.set = a;
        result.element = x;
        return result;
      }
    }
  }
  return result;
}

NontrivialityResult CheckNontriviality(const GroupPregeometry& gp) {
  NontrivialityResult result;
  result.homogeneous = CheckFiniteHomogeneity(gp, 1).pass;
  result.rank = gp.matroid().TotalRank();
  result.trivial = Classify(gp.matroid()).trivial;
  if (!result.homogeneous || result.rank < 2) {
    result.outcome = Outcome::kVacuous;
  } else {
    result.outcome = result.trivial ? Outcome::kFail : Outcome::kPass;
  }
  return result;
}

namespace {

// The plane of cl_A restricted to one flat S = cl_A(a,b,c).
struct LocalPlane {
  std::vector<Element> members;
  std::optional<Plane> plane;
  // Ground element -> plane point id (restricted label), or -1.
  std::unordered_map<Element, Element> point_id;

  Element Lift(Element local) const { return members[local]; }
  ElementSet Lift(const ElementSet& local) const {
    return LiftFromRestriction(local, members);
  }
  std::optional<Element> PointOf(Element x) const {
    auto it = point_id.find(x);
    if (it == point_id.end()) return std::nullopt;
    return it->second;
  }
};

LocalPlane BuildLocalPlane(const Matroid& localized, const ElementSet& span) {
  LocalPlane lp;
  lp.members = span.Elements();
  const Geometry geometry = Geometrize(Restrict(localized, span));
  if (geometry.empty() || geometry.base->TotalRank() != 3) return lp;
  lp.plane = Plane::FromGeometry(geometry, PlaneMode::kProjective);
  for (std::size_t i = 0; i < lp.members.size(); ++i) {
    const std::int32_t p = geometry.point_of[i];
    if (p >= 0) lp.point_id.emplace(lp.members[i], geometry.representatives[p]);
  }
  return lp;
}

// Concurrency of three lines that may coincide: coincident lines share
// every point, so the question reduces to the distinct ones.
ConcurrencyResult ConfigurationConcurrency(const Plane& plane,
                                           const ElementSet& l1,
                                           const ElementSet& l2,
                                           const ElementSet& l3) {
  if (l1 != l2 && l1 != l3 && l2 != l3) return Concurrency(plane, l1, l2, l3);
  ConcurrencyResult result;
  result.concurrent = true;
  if (l1 == l2 && l2 == l3) {
    result.common_point = *l1.Min();
  } else if (l1 == l2) {
    result.common_point = plane.Meet(l1, l3);
  } else {
    result.common_point = plane.Meet(l1, l2);
  }
  return result;
}

ConcurrencyResult LiftConcurrency(const LocalPlane& lp,
                                  const ConcurrencyResult& local) {
  ConcurrencyResult out = local;
  if (out.common_point) out.common_point = lp.Lift(*out.common_point);
  if (out.pairwise_meets) {
    for (Element& d : *out.pairwise_meets) d = lp.Lift(d);
  }
  return out;
}

}  // namespace

std::string ConfigurationWitness::ToString() const {
  std::string out = "A=" + base.ToString() + " a=" + std::to_string(a) +
                    " b=" + std::to_string(b) + " c=" + std::to_string(c);
  if (result.concurrent) {
    out += " concurrent=" + std::to_string(*result.common_point);
  } else if (result.pairwise_meets) {
    const auto& d = *result.pairwise_meets;
    out += " d1=" + std::to_string(d[0]) + " d2=" + std::to_string(d[1]) +
           " d3=" + std::to_string(d[2]);
  }
  out += std::string(" cinv_b=") + (first_membership ? "in" : "out");
  out += std::string(" b_cinv=") + (second_membership ? "in" : "out");
  return out;
}

ConfigurationScan CheckConfiguration(const GroupPregeometry& gp,
                                     const ElementSet& base,
                                     const ConfigurationOptions& options) {
  gp.RequireCompatible();
  const Matroid& m = gp.matroid();
  const FiniteGroup& g = gp.group();
  m.ground().Require(base);
  const ElementSet loops = m.Loops();
  if (loops == m.ground().Full()) {
    throw InputError("every element is a loop; no configuration exists");
  }
  const Matroid localized = Localize(m, base);
  const ClosureTable& cl = m.table();
  const std::size_t n = m.ground_size();
  const ElementSet closed_base = cl.CloseUnchecked(base);

  std::unordered_map<ElementSet, LocalPlane, ElementSetHash> planes;
  ConfigurationScan scan;
  ConfigurationSummary& s = scan.summary;

  for (Element a = 0; a < n; ++a) {
    if (closed_base.Contains(a)) continue;
    const ElementSet with_a = base.With(a);
    const ElementSet span_a = cl.CloseUnchecked(with_a);
    for (Element b = 0; b < n; ++b) {
      if (span_a.Contains(b)) continue;
      const ElementSet with_ab = with_a.With(b);
      const ElementSet span_ab = cl.CloseUnchecked(with_ab);
      const Element ab = g.Mul(a, b);
      const Element ba = g.Mul(b, a);
      const bool clcom = cl.CloseUnchecked(base.With(ab)).Contains(ba);
      for (Element c = 0; c < n; ++c) {
        if (span_ab.Contains(c)) continue;
        ++s.total;
        const ElementSet span = cl.CloseUnchecked(with_ab.With(c));
        auto it = planes.find(span);
        if (it == planes.end()) {
          it = planes.emplace(span, BuildLocalPlane(localized, span)).first;
          ++s.planes_built;
        }
        const LocalPlane& lp = it->second;
        if (!lp.plane) {
          ++s.degenerate;
          continue;
        }
        const Element ac = g.Mul(a, c);
        const Element ca = g.Mul(c, a);
        const auto pb = lp.PointOf(b), pc = lp.PointOf(c);
        const auto pab = lp.PointOf(ab), pac = lp.PointOf(ac);
        const auto pba = lp.PointOf(ba), pca = lp.PointOf(ca);
        if (!pb || !pc || !pab || !pac || !pba || !pca || *pb == *pc ||
            *pab == *pac || *pba == *pca) {
          ++s.degenerate;
          continue;
        }
        const Plane& plane = *lp.plane;
        const ElementSet& l1 = plane.LineThrough(*pb, *pc);
        const ElementSet& l2 = plane.LineThrough(*pab, *pac);
        const ElementSet& l3 = plane.LineThrough(*pba, *pca);

        ConfigurationWitness w;
        w.a = a;
        w.b = b;
        w.c = c;
        w.result = LiftConcurrency(lp, ConfigurationConcurrency(plane, l1, l2, l3));
        const Element c_inv = g.Inverse(c);
        const Element cinv_b = g.Mul(c_inv, b);
        const Element b_cinv = g.Mul(b, c_inv);
        const ElementSet span_bc = cl.CloseUnchecked(base.With(b).With(c));
        w.first_membership =
            span_bc.Contains(cinv_b) &&
            cl.CloseUnchecked(base.With(ab).With(ac)).Contains(cinv_b);
        w.second_membership =
            span_bc.Contains(b_cinv) &&
            cl.CloseUnchecked(base.With(ba).With(ca)).Contains(b_cinv);
        w.clcom_hypothesis = clcom;

        if (w.result.concurrent) ++s.concurrent;
        if (clcom) ++s.clcom_hypothesis;
        const bool failed = w.failed();
        if (failed) ++s.failed;
        if (options.keep_all ||
            (failed && s.failed <= options.max_failures_kept) ||
            (failed && !scan.first_failure)) {
          w.base = base;
          w.lines = {lp.Lift(l1), lp.Lift(l2), lp.Lift(l3)};
          if (failed && !scan.first_failure) scan.first_failure = w;
          scan.witnesses.push_back(std::move(w));
        }
      }
    }
  }
  return scan;
}

ClcomResult CheckClcomCommutativity(const GroupPregeometry& gp,
                                    const ElementSet& base) {
  gp.RequireCompatible();
  const Matroid& m = gp.matroid();
  const FiniteGroup& g = gp.group();
  m.ground().Require(base);
  ClcomResult result;
  result.homogeneity =
      CheckFiniteHomogeneity(gp, std::min(base.Size() + 2, kMaxKmax));
  const ClosureTable& cl = m.table();
  const std::size_t n = m.ground_size();
  const ElementSet closed_base = cl.CloseUnchecked(base);
  for (Element a = 0; a < n; ++a) {
    if (closed_base.Contains(a)) continue;
    const ElementSet span_a = cl.CloseUnchecked(base.With(a));
    for (Element b = 0; b < n; ++b) {
      if (span_a.Contains(b)) continue;
      const Element ab = g.Mul(a, b);
      const Element ba = g.Mul(b, a);
      if (ab == ba) result.commuting_pair = true;
      if (!result.hypothesis && cl.CloseUnchecked(base.With(ab)).Contains(ba)) {
        result.hypothesis = true;
        result.hypothesis_pair = std::array<Element, 2>{a, b};
      }
    }
  }
  result.conclusion = g.IsAbelian();
  if (!result.homogeneity.pass || !result.hypothesis) {
    result.outcome = Outcome::kVacuous;
  } else {
    result.outcome = result.conclusion ? Outcome::kPass : Outcome::kFail;
  }
  return result;
}

}  // namespace pregeo
