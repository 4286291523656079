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
// Planar primitives: points, simple polygons, triangulation. This layer has
// no knowledge of the sphere; the verification oracles depend on it alone.

#ifndef PROJCAUCHY_PLANE_HPP
#define PROJCAUCHY_PLANE_HPP

#include <array>
#include <cstddef>
#include <vector>

namespace projcauchy {

// Coordinates beyond this magnitude are rejected outright: squaring them
// would overflow, and they are far outside any practical domain.
inline constexpr double kMaxAbsCoordinate = 1e150;

// A point (x1, x2) of the plane; the third homogeneous coordinate is
// implicitly 1. Coordinates are always finite.
class PlanePoint {
 public:
  PlanePoint() = default;
  PlanePoint(double x1, double x2);

  double x1() const { return x1_; }
  double x2() const { return x2_; }

 private:
  double x1_ = 0.0;
  double x2_ = 0.0;
};

using PlaneTriangle = std::array<PlanePoint, 3>;

struct BoundingBox {
  double min1, min2, max1, max2;
};

// A simple polygon with at least 3 vertices. Construction validates
// simplicity, rejects zero-area input and normalizes the winding to
// counter-clockwise (the first vertex stays first).
class PlanePolygon {
 public:
  explicit PlanePolygon(std::vector<PlanePoint> vertices);

  const std::vector<PlanePoint>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }

  // Enclosed area, always positive.
  double area() const { return area_; }

  bool is_convex() const { return convex_; }

  // Half-plane membership with a tolerance relative to the polygon scale,
  // so boundary-grazing points count as inside. Non-convex polygons fall
  // back to a crossing test with the same boundary tolerance.
  bool contains(const PlanePoint& p, double tol = 1e-12) const;

  BoundingBox bounding_box() const;

  // Largest coordinate magnitude among the vertices, floored at 1.
  double scale() const { return scale_; }

 private:
  std::vector<PlanePoint> vertices_;
  double area_ = 0.0;
  double scale_ = 1.0;
  bool convex_ = false;
};

// Twice-signed-area conventions: positive for counter-clockwise.
double signed_area(const PlaneTriangle& t);

// Edge-midpoint split into four similar triangles, orientation preserved.
std::array<PlaneTriangle, 4> subdivide_triangle(const PlaneTriangle& t);

// Ear-clipping triangulation; returns size() - 2 triangles that partition
// the polygon, each counter-clockwise.
std::vector<PlaneTriangle> triangulate(const PlanePolygon& poly);

}  // namespace projcauchy

#endif  // PROJCAUCHY_PLANE_HPP
