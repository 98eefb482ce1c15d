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

// Candidate closure operators on a finite ground set and the exhaustive
// checker for the four pregeometry axioms.

#ifndef PREGEO_CLOSURE_H_
#define PREGEO_CLOSURE_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pregeo/element_set.h"

namespace pregeo {

// Exhaustive subset enumeration is limited to grounds of this size.
inline constexpr std::size_t kExhaustiveGroundLimit = 16;

class GroundSet {
 public:
  // Throws InputError for size 0.
  explicit GroundSet(std::size_t size);

  std::size_t size() const { return size_; }
  ElementSet Full() const { return ElementSet::Range(size_); }
  bool Covers(const ElementSet& s) const {
    return s.Empty() || *s.Max() < size_;
  }
  // Throws InputError naming the offending index.
  void Require(const ElementSet& s, const char* what = "set") const;
  void Require(Element e, const char* what = "element") const;

  bool operator==(const GroundSet&) const = default;

 private:
  std::size_t size_;
};

// A candidate operator cl : P(X) -> P(X), not yet known to be a pregeometry.
//
// Two realizations: an intersection-closed flat list (close(A) is the least
// flat containing A) or an algebraic rule. Rule-backed tables that come from
// the field and group constructors are flagged `algebraic` and may be
// checked by sampling when the ground is too large to enumerate.
class ClosureTable {
 public:
  using Rule = std::function<ElementSet(const ElementSet&)>;

  // Closes `flats` under pairwise intersection and adds the full ground.
  // Any list is accepted; whether it is a pregeometry is VerifyAxioms' job.
  static ClosureTable FromFlats(std::size_t ground_size,
                                std::vector<ElementSet> flats);
  static ClosureTable FromRule(std::size_t ground_size, Rule rule,
                               std::string description, bool algebraic);

  const GroundSet& ground() const { return ground_; }
  std::size_t ground_size() const { return ground_.size(); }

  // Throws InputError on out-of-range members.
  ElementSet Close(const ElementSet& a) const;
  // No range check; used by inner loops that already validated input.
  ElementSet CloseUnchecked(const ElementSet& a) const;

  bool is_explicit() const { return explicit_flats_ != nullptr; }
  bool algebraic() const { return algebraic_; }
  const std::string& description() const { return description_; }

  // Explicit tables only: the normalized flat list, canonical order.
  const std::vector<ElementSet>& explicit_flats() const;
  // Explicit tables only: how many flats intersection-closure and the ground
  // had to add to the input list.
  std::size_t added_by_normalization() const { return added_; }

 private:
  ClosureTable(GroundSet ground) : ground_(ground) {}

  GroundSet ground_;
  std::shared_ptr<const std::vector<ElementSet>> explicit_flats_;
  Rule rule_;
  std::string description_;
  bool algebraic_ = false;
  std::size_t added_ = 0;
};

struct AxiomVerdict {
  bool pass = true;
  // Witness, populated on failure. `set` is A; reflexivity uses `a` for the
  // member of A missing from cl(A); exchange uses both `a` and `b`.
  std::optional<ElementSet> set;
  std::optional<Element> a;
  std::optional<Element> b;
  std::string note;
};

enum class VerificationMode { kExhaustive, kSampled };

struct AxiomReport {
  AxiomVerdict reflexivity;
  AxiomVerdict transitivity;
  AxiomVerdict finite_character;
  AxiomVerdict exchange;
  VerificationMode mode = VerificationMode::kExhaustive;
  std::size_t subsets_checked = 0;

  bool AllPass() const {
    return reflexivity.pass && transitivity.pass && finite_character.pass &&
           exchange.pass;
  }
};

struct VerifyOptions {
  // Number of random subsets examined in sampled mode, on top of the empty
  // set and the singletons.
  std::size_t random_subsets = 48;
  std::uint64_t seed = 0x5eed;
};

// Exhaustive on grounds of at most kExhaustiveGroundLimit elements; sampled
// above that for algebraic tables. Explicit tables above the limit raise
// CapacityError. Failing verdicts carry the least witness in (|A|, A, a, b)
// order among the subsets examined.
AxiomReport VerifyAxioms(const ClosureTable& table,
                         const VerifyOptions& options = {});

// Re-check helpers. Each returns true iff the tuple is a genuine violation.
bool IsReflexivityViolation(const ClosureTable& table, const ElementSet& a);
bool IsTransitivityViolation(const ClosureTable& table, const ElementSet& a);
bool IsExchangeViolation(const ClosureTable& table, const ElementSet& set,
                         Element a, Element b);

}  // namespace pregeo

#endif  // PREGEO_CLOSURE_H_
