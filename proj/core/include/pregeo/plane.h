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

// Rank-3 geometries as point/line incidence structures.

#ifndef PREGEO_PLANE_H_
#define PREGEO_PLANE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pregeo/classify.h"
#include "pregeo/element_set.h"

namespace pregeo {

enum class PlaneMode { kProjective, kAffine };

// Points are identified by the least ground representative of their class
// in the geometry's source matroid; a line is the set of its point ids.
class Plane {
 public:
  // Requires a geometry of rank exactly 3 (ShapeError otherwise). In
  // projective mode every two lines must meet; the least parallel pair is
  // reported through NotProjectiveError.
  static Plane FromGeometry(const Geometry& g, PlaneMode mode);

  PlaneMode mode() const { return mode_; }
  const std::vector<Element>& points() const { return points_; }
  const std::vector<ElementSet>& lines() const { return lines_; }

  bool HasPoint(Element p) const;
  // Index into lines(), or nullopt if `line` is not a line of this plane.
  std::optional<std::size_t> LineIndex(const ElementSet& line) const;

  // The unique line through two distinct points.
  const ElementSet& LineThrough(Element p, Element q) const;
  // The common point of two distinct lines. NoIntersectionError for
  // parallel lines (affine mode only).
  Element Meet(const ElementSet& l1, const ElementSet& l2) const;

  // Nondegeneracy facts, reported but never enforced.
  std::size_t MinPointsPerLine() const;
  bool HasQuadrangle() const;

 private:
  Plane() = default;

  std::size_t PointIndex(Element p) const;
  std::size_t RequireLine(const ElementSet& line) const;

  PlaneMode mode_ = PlaneMode::kProjective;
  std::vector<Element> points_;
  std::vector<ElementSet> lines_;
  // point id -> index into points_, -1 elsewhere.
  std::vector<std::int32_t> point_index_;
  // line_through_[i * P + j] for point indices i != j.
  std::vector<std::int32_t> line_through_;
  // meet_[k * L + l] = point index, -1 for parallel or k == l.
  std::vector<std::int32_t> meet_;
};

struct ConcurrencyResult {
  bool concurrent = false;
  std::optional<Element> common_point;
  // d1 = l1∧l2, d2 = l1∧l3, d3 = l2∧l3 when not concurrent.
  std::optional<std::array<Element, 3>> pairwise_meets;
};

// The three lines must be pairwise distinct (InputError otherwise).
ConcurrencyResult Concurrency(const Plane& plane, const ElementSet& l1,
                              const ElementSet& l2, const ElementSet& l3);

// A bijection of point ids that maps lines to lines.
class Collineation {
 public:
  Collineation(std::vector<Element> domain, std::vector<Element> image);

  Element Apply(Element p) const;
  ElementSet Apply(const ElementSet& points) const;
  const std::vector<Element>& domain() const { return domain_; }
  const std::vector<Element>& image() const { return image_; }

  Collineation Compose(const Collineation& inner) const;  // this ∘ inner
  Collineation Inverse() const;
  bool IsIdentity() const { return domain_ == image_; }

  bool operator==(const Collineation&) const = default;
  friend bool operator<(const Collineation& a, const Collineation& b) {
    return a.image_ < b.image_;
  }

 private:
  std::vector<Element> domain_;
  std::vector<Element> image_;
};

// Pushes a bijection of the source matroid's ground through the quotient.
// Throws InputError if `ground_map` is not a bijection of the right size
// and NotAnAutomorphismError if it sends some flat to a non-flat.
Collineation CollineationFrom(const Plane& plane, const Geometry& g,
                              std::span<const Element> ground_map);

// True iff `c` maps every line of `plane` onto a line.
bool PreservesLines(const Plane& plane, const Collineation& c);

}  // namespace pregeo

#endif  // PREGEO_PLANE_H_
