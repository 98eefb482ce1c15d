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

#include "pregeo/matroid.h"

#include <algorithm>
#include <deque>
#include <mutex>
#include <string>
#include <unordered_set>
#include <utility>

#include "pregeo/errors.h"

namespace pregeo {

struct Matroid::State {
  explicit State(ClosureTable t) : table(std::move(t)) {}

  ClosureTable table;
  std::once_flag flats_once;
  std::vector<ElementSet> flats;
};

namespace {

std::string DescribeFailure(const AxiomReport& report) {
  auto witness = [](const AxiomVerdict& v) {
    std::string out = " A=" + v.set->ToString();
    if (v.a) out += " a=" + std::to_string(*v.a);
    if (v.b) out += " b=" + std::to_string(*v.b);
    return out;
  };
  if (!report.reflexivity.pass) {
    return "reflexivity fails:" + witness(report.reflexivity);
  }
  if (!report.transitivity.pass) {
    return "transitivity fails:" + witness(report.transitivity);
  }
  return "exchange fails:" + witness(report.exchange);
}

// Small derived grounds are cheap to re-check; larger ones rely on the
// operation preserving the axioms.
Matroid ValidateIfSmall(ClosureTable table) {
  if (table.ground_size() <= kExhaustiveGroundLimit) {
    return Matroid::Validate(std::move(table));
  }
  return Matroid::Derived(std::move(table));
}

}  // namespace

Matroid Matroid::Validate(ClosureTable table) {
  const AxiomReport report = VerifyAxioms(table);
  if (!report.AllPass()) {
    throw AxiomError("not a pregeometry (" + table.description() +
                     "): " + DescribeFailure(report));
  }
  return Matroid(std::make_shared<State>(std::move(table)));
}

Matroid Matroid::Derived(ClosureTable table) {
  return Matroid(std::make_shared<State>(std::move(table)));
}

const ClosureTable& Matroid::table() const { return state_->table; }

std::size_t Matroid::Rank(const ElementSet& a, const ElementSet& over) const {
  ground().Require(a);
  ground().Require(over, "base set");
  ElementSet span = table().CloseUnchecked(over);
  std::size_t rank = 0;
  for (Element x : a) {
    if (span.Contains(x)) continue;
    span = table().CloseUnchecked(span.With(x));
    ++rank;
  }
  return rank;
}

std::size_t Matroid::TotalRank() const { return Rank(ground().Full()); }

ElementSet Matroid::BasisWithin(const ElementSet& a) const {
  ground().Require(a);
  ElementSet span = table().CloseUnchecked({});
  ElementSet basis;
  for (Element x : a) {
    if (span.Contains(x)) continue;
    span = table().CloseUnchecked(span.With(x));
    basis.Insert(x);
  }
  return basis;
}

bool Matroid::IsIndependent(const ElementSet& a) const {
  return BasisWithin(a) == a;
}

const std::vector<ElementSet>& Matroid::Flats() const {
  std::call_once(state_->flats_once, [this] {
    const ClosureTable& t = table();
    if (t.is_explicit()) {
      state_->flats = t.explicit_flats();
      return;
    }
    // Every flat is the closure of a chain cl(∅) ⊂ cl(x1) ⊂ cl(x1,x2) ...,
    // so growing flats one element at a time reaches all of them.
    const std::size_t n = t.ground_size();
    std::unordered_set<ElementSet, ElementSetHash> seen;
    std::vector<ElementSet> all;
    std::deque<std::size_t> queue;
    ElementSet bottom = t.CloseUnchecked({});
    seen.insert(bottom);
    all.push_back(std::move(bottom));
    queue.push_back(0);
    while (!queue.empty()) {
      const std::size_t index = queue.front();
      queue.pop_front();
      for (Element x = 0; x < n; ++x) {
        if (all[index].Contains(x)) continue;
        ElementSet next = t.CloseUnchecked(all[index].With(x));
        if (seen.insert(next).second) {
          if (all.size() >= kMaxFlats) {
            throw CapacityError("more than " + std::to_string(kMaxFlats) +
                                " flats");
          }
          all.push_back(std::move(next));
          queue.push_back(all.size() - 1);
        }
      }
    }
    std::sort(all.begin(), all.end());
    state_->flats = std::move(all);
  });
  return state_->flats;
}

ElementSet LiftFromRestriction(const ElementSet& local,
                               const std::vector<Element>& y_members) {
  ElementSet out;
  for (Element i : local) out.Insert(y_members.at(i));
  return out;
}

ElementSet LowerToRestriction(const ElementSet& parent,
                              const std::vector<Element>& y_members) {
  ElementSet out;
  for (Element e : parent) {
    auto it = std::lower_bound(y_members.begin(), y_members.end(), e);
    if (it != y_members.end() && *it == e) {
      out.Insert(static_cast<Element>(it - y_members.begin()));
    }
  }
  return out;
}

Matroid Restrict(const Matroid& m, const ElementSet& y) {
  m.ground().Require(y, "restriction set");
  if (y.Empty()) throw InputError("restriction to the empty set");
  auto members = std::make_shared<const std::vector<Element>>(y.Elements());
  ClosureTable::Rule rule = [m, y, members](const ElementSet& local) {
    const ElementSet lifted = LiftFromRestriction(local, *members);
    return LowerToRestriction(m.table().CloseUnchecked(lifted) & y, *members);
  };
  return ValidateIfSmall(ClosureTable::FromRule(
      members->size(), std::move(rule),
      "restriction of " + m.table().description() + " to " + y.ToString(),
      m.table().algebraic()));
}

Matroid Localize(const Matroid& m, const ElementSet& y) {
  m.ground().Require(y, "localization set");
  if (y.Empty()) return m;
  ClosureTable::Rule rule = [m, y](const ElementSet& a) {
    return m.table().CloseUnchecked(a | y);
  };
  return ValidateIfSmall(ClosureTable::FromRule(
      m.ground_size(), std::move(rule),
      "localization of " + m.table().description() + " at " + y.ToString(),
      m.table().algebraic()));
}

std::vector<ElementSet> EnumerateFlats(const Matroid& m,
                                       std::optional<std::size_t> rank) {
  const std::vector<ElementSet>& flats = m.Flats();
  if (!rank) return flats;
  std::vector<ElementSet> out;
  for (const ElementSet& f : flats) {
    if (m.Rank(f) == *rank) out.push_back(f);
  }
  return out;
}

}  // namespace pregeo
