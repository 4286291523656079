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

#ifndef PROJCAUCHY_TESTS_TEST_HELPERS_HPP
#define PROJCAUCHY_TESTS_TEST_HELPERS_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "projcauchy/plane.hpp"
#include "projcauchy/projection.hpp"
#include "projcauchy/rng.hpp"
#include "projcauchy/vec3.hpp"

namespace projcauchy::testing {

// Frozen reference values, computed with the independent oracles (50-digit
// direct triangle formula and adaptive quadrature agree on all digits shown).
//
// Solid angle subtended by the plane triangle (0,0), (1,0), (0,1).
inline constexpr double kUnitTriangleSolidAngle = 0.33983690945412194;
// The same mass under the standard Cauchy density (solid angle / 2 pi).
inline constexpr double kUnitTriangleCauchyMass = 0.054086723984696365;
// Elliptic density at its mode for (a1,a2,b1,b2,rho) = (-1.9,-0.1,1.4,1.7,0.8).
inline constexpr double kEllipticModeDensity = 0.11145304138087909;

inline double uniform_in(SplitMix64& rng, double lo, double hi) {
  return lo + rng.next_double() * (hi - lo);
}

inline PlanePoint random_point(SplitMix64& rng, double lo, double hi) {
  return PlanePoint(uniform_in(rng, lo, hi), uniform_in(rng, lo, hi));
}

// Random counter-clockwise triangle with area at least min_area.
inline PlaneTriangle random_triangle(SplitMix64& rng, double lo, double hi,
                                     double min_area) {
  for (;;) {
    PlaneTriangle t{random_point(rng, lo, hi), random_point(rng, lo, hi),
                    random_point(rng, lo, hi)};
    const double area = signed_area(t);
    if (std::abs(area) < min_area) continue;
    if (area < 0.0) std::swap(t[1], t[2]);
    return t;
  }
}

inline std::vector<PlanePoint> to_vertices(const PlaneTriangle& t) {
  return {t[0], t[1], t[2]};
}

inline UnitDirection random_upper_direction(SplitMix64& rng,
                                            double min_w3 = 0.05) {
  for (;;) {
    const Vec3 v{uniform_in(rng, -1.0, 1.0), uniform_in(rng, -1.0, 1.0),
                 uniform_in(rng, min_w3, 1.0)};
    const double n = norm(v);
    if (n < 1e-3 || n > 1.0) continue;
    const Vec3 u = v / n;
    if (u.z < min_w3) continue;
    return UnitDirection(u.x, u.y, u.z);
  }
}

// Area distortion of plane_to_hemisphere by central differences: the norm
// of the cross product of the two finite-difference tangent vectors.
inline double finite_difference_jacobian(const PlanePoint& x,
                                         double h = 1e-5) {
  const auto dir = [](const PlanePoint& p) {
    return plane_to_hemisphere(p).vec();
  };
  const Vec3 t1 = (dir({x.x1() + h, x.x2()}) - dir({x.x1() - h, x.x2()})) /
                  (2.0 * h);
  const Vec3 t2 = (dir({x.x1(), x.x2() + h}) - dir({x.x1(), x.x2() - h})) /
                  (2.0 * h);
  return norm(cross(t1, t2));
}

// Two levels of midpoint subdivision: 16 triangle bins partitioning t.
inline std::vector<PlanePolygon> sixteen_bins(const PlaneTriangle& t) {
  std::vector<PlanePolygon> bins;
  bins.reserve(16);
  for (const PlaneTriangle& quarter : subdivide_triangle(t)) {
    for (const PlaneTriangle& bin : subdivide_triangle(quarter)) {
      bins.emplace_back(to_vertices(bin));
    }
  }
  return bins;
}

// Kolmogorov-Smirnov distance of a sample against Uniform[0, 1].
inline double ks_distance_uniform(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  double d = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double hi = (static_cast<double>(i) + 1.0) / n - values[i];
    const double lo = values[i] - static_cast<double>(i) / n;
    d = std::max({d, hi, lo});
  }
  return d;
}

}  // namespace projcauchy::testing

#endif  // PROJCAUCHY_TESTS_TEST_HELPERS_HPP
