// Copyright 2026 The projcauchy Authors.
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
//
// Spherical polygons on the upper-half sphere: solid angles via the
// interior-angle sum and via a cancellation-free triangle formula, plus
// uniform area sampling of spherical triangles and convex polygons.

#ifndef PROJCAUCHY_SPHERICAL_POLYGON_HPP
#define PROJCAUCHY_SPHERICAL_POLYGON_HPP

#include <cstddef>
#include <vector>

#include "projcauchy/plane.hpp"
#include "projcauchy/projection.hpp"
#include "projcauchy/rng.hpp"

namespace projcauchy {

// Triangles whose solid angle falls below this are treated as zero:
// integration reports 0 mass and sampling refuses them.
inline constexpr double kMinSolidAngle = 1e-15;

// An ordered list of at least 3 upper-half unit directions bounding a
// simple spherical polygon. Construction rejects coincident or antipodal
// consecutive vertices (within 1e-12), rejects self-intersecting boundaries
// and normalizes the winding to counter-clockwise as seen from outside the
// sphere (positive vertex triple products).
class SphericalPolygon {
 public:
  explicit SphericalPolygon(std::vector<UnitDirection> vertices);

  // Projects the vertices of an (already validated) plane polygon onto the
  // hemisphere. Skips the O(N^2) simplicity re-check: the central
  // projection maps great-circle arcs to straight lines bijectively, so a
  // simple plane polygon subtends a simple spherical one.
  static SphericalPolygon from_plane_polygon(const PlanePolygon& poly);

  const std::vector<UnitDirection>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool is_convex() const { return convex_; }

 private:
  struct Trusted {};
  SphericalPolygon(std::vector<UnitDirection> vertices, Trusted);
  void finish_construction();

  std::vector<UnitDirection> vertices_;
  bool convex_ = false;
};

// Interior angle at each vertex, in (0, 2pi); reflex vertices of
// non-convex polygons report angles above pi. For a convex polygon every
// angle is in (0, pi).
std::vector<double> interior_angles(const SphericalPolygon& poly);

// Solid angle by the interior-angle sum: sum(A_n) - (N - 2) pi.
double solid_angle_girard(const SphericalPolygon& poly);

// Solid angle of the counter-clockwise triangle (a, b, c) as
// 2 atan2(a . (b x c), 1 + a.b + b.c + c.a). Signed: clockwise input
// yields the negated value; degenerate input yields 0. Immune to the
// cancellation that plagues angle-sum formulas on slivers.
double solid_angle_triangle_stable(const UnitDirection& a,
                                   const UnitDirection& b,
                                   const UnitDirection& c);

// Solid angle of a polygon: the triangle case delegates to
// solid_angle_triangle_stable, larger polygons sum signed fan triangles
// anchored at the first vertex (valid for any simple polygon). Magnitude
// only.
double solid_angle_polygon(const SphericalPolygon& poly);

// Uniform (per unit solid angle) sample of the counter-clockwise spherical
// triangle (a, b, c). The map from the unit square is stratification
// preserving; u = (0, 0) lands on vertex b.
UnitDirection sample_spherical_triangle(const UnitDirection& a,
                                        const UnitDirection& b,
                                        const UnitDirection& c,
                                        const UniformPair& u);

// Uniform sample of a convex spherical polygon: u1 selects a fan triangle
// by its share of the total solid angle (half-open strata) and is rescaled
// within the stratum, then the triangle sampler runs. Non-convex polygons
// are rejected; integration still works for them, only sampling is
// restricted.
UnitDirection sample_spherical_polygon(const SphericalPolygon& poly,
                                       const UniformPair& u);

}  // namespace projcauchy

#endif  // PROJCAUCHY_SPHERICAL_POLYGON_HPP
