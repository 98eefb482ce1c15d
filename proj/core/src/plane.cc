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

#include "pregeo/plane.h"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "pregeo/errors.h"

namespace pregeo {

Plane Plane::FromGeometry(const Geometry& g, PlaneMode mode) {
  if (g.empty()) throw ShapeError("empty geometry has no plane");
  const Matroid& base = *g.base;
  const std::size_t rank = base.TotalRank();
  if (rank != 3) {
    throw ShapeError("plane needs rank 3, geometry has rank " +
                     std::to_string(rank));
  }
  Plane plane;
  plane.mode_ = mode;
  plane.points_ = g.representatives;
  plane.point_index_.assign(*std::max_element(plane.points_.begin(),
                                              plane.points_.end()) + 1,
                            -1);
  for (std::size_t i = 0; i < plane.points_.size(); ++i) {
    plane.point_index_[plane.points_[i]] = static_cast<std::int32_t>(i);
  }
  for (const ElementSet& f : EnumerateFlats(base, 2)) {
    plane.lines_.push_back(g.ToRepresentatives(f));
  }
  std::sort(plane.lines_.begin(), plane.lines_.end());

  const std::size_t np = plane.points_.size();
  const std::size_t nl = plane.lines_.size();
  plane.line_through_.assign(np * np, -1);
  for (std::size_t l = 0; l < nl; ++l) {
    const std::vector<Element> members = plane.lines_[l].Elements();
    for (Element p : members) {
      for (Element q : members) {
        if (p == q) continue;
        plane.line_through_[plane.PointIndex(p) * np + plane.PointIndex(q)] =
            static_cast<std::int32_t>(l);
      }
    }
  }
  plane.meet_.assign(nl * nl, -1);
  for (std::size_t k = 0; k < nl; ++k) {
    for (std::size_t l = k + 1; l < nl; ++l) {
      const ElementSet common = plane.lines_[k] & plane.lines_[l];
      if (common.Empty()) {
        if (mode == PlaneMode::kProjective) {
          throw NotProjectiveError(
              "lines " + plane.lines_[k].ToString() + " and " +
                  plane.lines_[l].ToString() + " are parallel",
              plane.lines_[k].ToString(), plane.lines_[l].ToString());
        }
        continue;
      }
      const auto p = static_cast<std::int32_t>(plane.PointIndex(*common.Min()));
      plane.meet_[k * nl + l] = p;
      plane.meet_[l * nl + k] = p;
    }
  }
  return plane;
}

bool Plane::HasPoint(Element p) const {
  return p < point_index_.size() && point_index_[p] >= 0;
}

std::size_t Plane::PointIndex(Element p) const {
  if (!HasPoint(p)) {
    throw InputError("point " + std::to_string(p) + " is not in the plane");
  }
  return static_cast<std::size_t>(point_index_[p]);
}

std::optional<std::size_t> Plane::LineIndex(const ElementSet& line) const {
  auto it = std::lower_bound(lines_.begin(), lines_.end(), line);
  if (it == lines_.end() || *it != line) return std::nullopt;
  return static_cast<std::size_t>(it - lines_.begin());
}

std::size_t Plane::RequireLine(const ElementSet& line) const {
  const std::optional<std::size_t> index = LineIndex(line);
  if (!index) throw InputError(line.ToString() + " is not a line of the plane");
  return *index;
}

const ElementSet& Plane::LineThrough(Element p, Element q) const {
  if (p == q) throw InputError("line_through needs two distinct points");
  const std::size_t np = points_.size();
  return lines_[line_through_[PointIndex(p) * np + PointIndex(q)]];
}

Element Plane::Meet(const ElementSet& l1, const ElementSet& l2) const {
  const std::size_t k = RequireLine(l1);
  const std::size_t l = RequireLine(l2);
  if (k == l) throw InputError("meet needs two distinct lines");
  const std::int32_t p = meet_[k * lines_.size() + l];
  if (p < 0) {
    throw NoIntersectionError("lines " + l1.ToString() + " and " +
                              l2.ToString() + " are parallel");
  }
  return points_[p];
}

std::size_t Plane::MinPointsPerLine() const {
  std::size_t least = points_.size();
  for (const ElementSet& l : lines_) least = std::min(least, l.Size());
  return least;
}

bool Plane::HasQuadrangle() const {
  // Four points, no three on a line.
  const std::size_t np = points_.size();
  auto collinear = [&](std::size_t a, std::size_t b, std::size_t c) {
    return lines_[line_through_[a * np + b]].Contains(points_[c]);
  };
  for (std::size_t a = 0; a < np; ++a) {
    for (std::size_t b = a + 1; b < np; ++b) {
      for (std::size_t c = b + 1; c < np; ++c) {
        if (collinear(a, b, c)) continue;
        for (std::size_t d = c + 1; d < np; ++d) {
          if (!collinear(a, b, d) && !collinear(a, c, d) &&
              !collinear(b, c, d)) {
            return true;
          }
        }
      }
    }
  }
  return false;
}

ConcurrencyResult Concurrency(const Plane& plane, const ElementSet& l1,
                              const ElementSet& l2, const ElementSet& l3) {
  if (l1 == l2 || l1 == l3 || l2 == l3) {
    throw InputError("concurrency needs three distinct lines");
  }
  const Element d1 = plane.Meet(l1, l2);
  const Element d2 = plane.Meet(l1, l3);
  const Element d3 = plane.Meet(l2, l3);
  ConcurrencyResult result;
  // If two pairwise meets agree, that point is on all three lines, which
  // forces the third meet to agree too.
  if (d1 == d2) {
    result.concurrent = true;
    result.common_point = d1;
  } else {
    result.pairwise_meets = std::array<Element, 3>{d1, d2, d3};
  }
  return result;
}

Collineation::Collineation(std::vector<Element> domain,
                           std::vector<Element> image)
    : domain_(std::move(domain)), image_(std::move(image)) {
  if (domain_.size() != image_.size() ||
      !std::is_sorted(domain_.begin(), domain_.end())) {
    throw InputError("collineation needs a sorted domain and equal-size image");
  }
  std::vector<Element> sorted = image_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != domain_) throw InputError("collineation is not a bijection");
}

Element Collineation::Apply(Element p) const {
  auto it = std::lower_bound(domain_.begin(), domain_.end(), p);
  if (it == domain_.end() || *it != p) {
    throw InputError("point " + std::to_string(p) + " outside collineation");
  }
  return image_[it - domain_.begin()];
}

ElementSet Collineation::Apply(const ElementSet& points) const {
  ElementSet out;
  for (Element p : points) out.Insert(Apply(p));
  return out;
}

Collineation Collineation::Compose(const Collineation& inner) const {
  std::vector<Element> image;
  image.reserve(domain_.size());
  for (Element p : inner.domain()) image.push_back(Apply(inner.Apply(p)));
  return Collineation(inner.domain(), std::move(image));
}

Collineation Collineation::Inverse() const {
  std::vector<Element> image(domain_.size());
  for (std::size_t i = 0; i < domain_.size(); ++i) {
    auto it = std::lower_bound(domain_.begin(), domain_.end(), image_[i]);
    image[it - domain_.begin()] = domain_[i];
  }
  return Collineation(domain_, std::move(image));
}

bool PreservesLines(const Plane& plane, const Collineation& c) {
  for (const ElementSet& line : plane.lines()) {
    if (!plane.LineIndex(c.Apply(line))) return false;
  }
  return true;
}

Collineation CollineationFrom(const Plane& plane, const Geometry& g,
                              std::span<const Element> ground_map) {
  const Matroid& source = g.source;
  const std::size_t n = source.ground_size();
  if (ground_map.size() != n) {
    throw InputError("ground map has " + std::to_string(ground_map.size()) +
                     " entries for a ground of " + std::to_string(n));
  }
  std::vector<bool> hit(n, false);
  for (Element x : ground_map) {
    if (x >= n || hit[x]) throw InputError("ground map is not a bijection");
    hit[x] = true;
  }
  const std::vector<ElementSet>& flats = source.Flats();
  const std::unordered_set<ElementSet, ElementSetHash> flat_set(flats.begin(),
                                                               flats.end());
  for (const ElementSet& f : flats) {
    ElementSet image;
    for (Element x : f) image.Insert(ground_map[x]);
    if (!flat_set.contains(image)) {
      throw NotAnAutomorphismError(
          "ground map sends flat " + f.ToString() + " to non-flat " +
              image.ToString(),
          f.ToString());
    }
  }
  std::vector<Element> image;
  image.reserve(plane.points().size());
  for (Element p : plane.points()) {
    const std::int32_t q = g.point_of.at(ground_map[p]);
    image.push_back(g.representatives.at(q));
  }
  Collineation c(plane.points(), std::move(image));
  if (!PreservesLines(plane, c)) {
    throw NotAnAutomorphismError("induced point map does not preserve lines",
                                 "");
  }
  return c;
}

}  // namespace pregeo
