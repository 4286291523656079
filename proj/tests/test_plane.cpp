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

#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "projcauchy/errors.hpp"
#include "projcauchy/plane.hpp"
#include "test_helpers.hpp"

using namespace projcauchy;
using namespace projcauchy::testing;

TEST_CASE("clockwise input is normalized, first vertex kept") {
  const PlanePolygon poly({{0.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}, {1.0, 0.0}});
  CHECK(poly.area() == doctest::Approx(1.0));
  CHECK(poly.vertices()[0].x1() == 0.0);
  CHECK(poly.vertices()[0].x2() == 0.0);
  // Reversed tail: next vertex after normalization is (1, 0).
  CHECK(poly.vertices()[1].x1() == 1.0);
  CHECK(poly.vertices()[1].x2() == 0.0);
  CHECK(poly.is_convex());
}

TEST_CASE("construction rejects defective vertex lists") {
  const std::vector<PlanePoint> two{{0.0, 0.0}, {1.0, 0.0}};
  CHECK_THROWS_AS(PlanePolygon{two}, std::invalid_argument);

  const std::vector<PlanePoint> repeated{{0.0, 0.0}, {0.0, 0.0}, {1.0, 1.0}};
  CHECK_THROWS_AS(PlanePolygon{repeated}, DegenerateGeometryError);

  const std::vector<PlanePoint> collinear{{0.0, 0.0}, {1.0, 1.0}, {2.0, 2.0}};
  CHECK_THROWS_AS(PlanePolygon{collinear}, DegenerateGeometryError);

  const std::vector<PlanePoint> crossed{
      {0.0, 0.0}, {2.0, 0.0}, {2.0, 1.0}, {1.0, -1.0}};
  CHECK_THROWS_AS(PlanePolygon{crossed}, std::invalid_argument);
}

TEST_CASE("containment with boundary tolerance") {
  const PlanePolygon tri({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}});
  CHECK(tri.contains({0.25, 0.25}));
  CHECK_FALSE(tri.contains({0.6, 0.6}));
  CHECK(tri.contains({0.5, 0.5}));              // on the hypotenuse
  CHECK(tri.contains({0.5, 0.5 + 1e-13}));      // grazing outside
  CHECK_FALSE(tri.contains({0.5, 0.5 + 1e-9}));

  const PlanePolygon ell({{0.0, 0.0},
                          {2.0, 0.0},
                          {2.0, 1.0},
                          {1.0, 1.0},
                          {1.0, 2.0},
                          {0.0, 2.0}});
  CHECK(ell.contains({1.5, 0.5}));
  CHECK(ell.contains({0.5, 1.5}));
  CHECK_FALSE(ell.contains({1.5, 1.5}));
  CHECK(ell.contains({1.0, 1.0}));  // the reflex corner itself
}

TEST_CASE("ear clipping partitions simple polygons") {
  const PlanePolygon square({{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}});
  const std::vector<PlaneTriangle> square_tris = triangulate(square);
  CHECK(square_tris.size() == 2);

  const PlanePolygon ell({{0.0, 0.0},
                          {2.0, 0.0},
                          {2.0, 1.0},
                          {1.0, 1.0},
                          {1.0, 2.0},
                          {0.0, 2.0}});
  const std::vector<PlaneTriangle> ell_tris = triangulate(ell);
  CHECK(ell_tris.size() == 4);
  double total = 0.0;
  for (const PlaneTriangle& t : ell_tris) {
    const double a = signed_area(t);
    CHECK(a > 0.0);  // counter-clockwise pieces
    total += a;
  }
  CHECK(total == doctest::Approx(ell.area()).epsilon(1e-12));

  SplitMix64 rng(12);
  std::vector<PlanePoint> gon;
  for (int k = 0; k < 20; ++k) {
    const double t = 2.0 * 3.14159265358979 * k / 20.0;
    const double r = 1.0 + 0.4 * rng.next_double();
    gon.emplace_back(r * std::cos(t), r * std::sin(t));
  }
  const PlanePolygon star(gon);
  const std::vector<PlaneTriangle> star_tris = triangulate(star);
  CHECK(star_tris.size() == 18);
  double star_total = 0.0;
  for (const PlaneTriangle& t : star_tris) star_total += signed_area(t);
  CHECK(star_total == doctest::Approx(star.area()).epsilon(1e-12));
}

TEST_CASE("midpoint subdivision preserves area and orientation") {
  const PlaneTriangle t{PlanePoint(0.2, -0.3), PlanePoint(1.7, 0.4),
                        PlanePoint(0.6, 1.9)};
  double total = 0.0;
  for (const PlaneTriangle& child : subdivide_triangle(t)) {
    const double a = signed_area(child);
    CHECK(a > 0.0);
    CHECK(a == doctest::Approx(signed_area(t) / 4.0).epsilon(1e-12));
    total += a;
  }
  CHECK(total == doctest::Approx(signed_area(t)).epsilon(1e-12));
}

TEST_CASE("bounding box covers the vertices") {
  const PlanePolygon tri({{-2.0, 1.0}, {3.0, -1.5}, {0.5, 4.0}});
  const BoundingBox box = tri.bounding_box();
  CHECK(box.min1 == -2.0);
  CHECK(box.min2 == -1.5);
  CHECK(box.max1 == 3.0);
  CHECK(box.max2 == 4.0);
}
