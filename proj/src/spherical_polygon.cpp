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

#include "projcauchy/spherical_polygon.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "projcauchy/errors.hpp"

namespace projcauchy {

namespace {

constexpr double kPi = std::numbers::pi;

// Consecutive vertices closer (or more antipodal) than this are degenerate.
constexpr double kVertexSeparation = 1e-12;

Vec3 orthogonal_component(const Vec3& v, const Vec3& axis) {
  return v - dot(v, axis) * axis;
}

// Normals of the great-circle planes spanned by consecutive vertices.
// stable_cross keeps the normal direction accurate on short edges, which
// in turn makes the direction noise of a shared edge plane cancel between
// the two interior angles it participates in.
std::vector<Vec3> edge_planes(const std::vector<UnitDirection>& v) {
  const std::size_t n = v.size();
  std::vector<Vec3> planes(n);
  for (std::size_t i = 0; i < n; ++i) {
    planes[i] = stable_cross(v[i].vec(), v[(i + 1) % n].vec());
    if (norm(planes[i]) < 1e-300) {
      throw DegenerateGeometryError("spherical polygon has a degenerate edge");
    }
  }
  return planes;
}

double signed_plane_area(const std::vector<PlanePoint>& pts) {
  double twice = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const PlanePoint& a = pts[i];
    const PlanePoint& b = pts[(i + 1) % pts.size()];
    twice += a.x1() * b.x2() - a.x2() * b.x1();
  }
  return 0.5 * twice;
}

double solid_angle_triangle_raw(const Vec3& a, const Vec3& b, const Vec3& c) {
  const double num = triple(a, b, c);
  const double den = 1.0 + dot(a, b) + dot(b, c) + dot(c, a);
  if (num == 0.0 && den == 0.0) return 0.0;
  return 2.0 * std::atan2(num, den);
}

// Stratified map of the unit square onto the spherical triangle (a, b, c).
// u1 carves off the sub-triangle (a, b, c_hat) holding the fraction u1 of
// the solid angle, with c_hat on the arc a-c; u2 then picks the sample on
// the arc from b towards c_hat. Corner u = (0, 0) therefore lands on b.
Vec3 sample_triangle_raw(const Vec3& a, const Vec3& b, const Vec3& c,
                         double omega, double u1, double u2) {
  const Vec3 tangent_ab = normalized(orthogonal_component(b, a));
  const Vec3 tangent_ac = normalized(orthogonal_component(c, a));
  const double cos_alpha =
      std::clamp(dot(tangent_ab, tangent_ac), -1.0, 1.0);
  const double sin_alpha = norm(cross(tangent_ab, tangent_ac));
  const double alpha = std::atan2(sin_alpha, cos_alpha);

  const double area_hat = u1 * omega;
  const double s = std::sin(area_hat - alpha);
  const double t = std::cos(area_hat - alpha);
  const double u = t - cos_alpha;
  const double v = s + sin_alpha * dot(a, b);

  const double denom = (v * s + u * t) * sin_alpha;
  const double numer = (v * t - u * s) * cos_alpha - v;
  double q = denom == 0.0 ? 1.0 : numer / denom;
  if (!std::isfinite(q)) q = 1.0;
  q = std::clamp(q, -1.0, 1.0);

  const Vec3 c_hat = q * a + std::sqrt(std::max(0.0, 1.0 - q * q)) * tangent_ac;

  double z = 1.0 - u2 * (1.0 - dot(c_hat, b));
  z = std::clamp(z, -1.0, 1.0);
  const Vec3 perp = orthogonal_component(c_hat, b);
  const double perp_norm = norm(perp);
  if (perp_norm < 1e-18) return b;  // c_hat collapsed onto b
  const Vec3 w =
      z * b + (std::sqrt(std::max(0.0, 1.0 - z * z)) / perp_norm) * perp;
  // When c_hat and b are nearly antipodal the perpendicular component above
  // cancels badly and w picks up a spurious b component; renormalizing
  // restores the unit invariant without moving the sample meaningfully.
  return normalized(w);
}

}  // namespace

SphericalPolygon::SphericalPolygon(std::vector<UnitDirection> vertices,
                                   Trusted)
    : vertices_(std::move(vertices)) {
  finish_construction();
}

void SphericalPolygon::finish_construction() {
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3 a = vertices_[i].vec();
    const Vec3 b = vertices_[(i + 1) % n].vec();
    if (norm(a - b) < kVertexSeparation) {
      throw DegenerateGeometryError("consecutive vertices coincide");
    }
    if (norm(a + b) < kVertexSeparation) {
      throw DegenerateGeometryError("consecutive vertices are antipodal");
    }
  }
  convex_ = true;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3 a = vertices_[i].vec();
    const Vec3 b = vertices_[(i + 1) % n].vec();
    const Vec3 c = vertices_[(i + 2) % n].vec();
    const Vec3 edge = cross(a, b);
    if (dot(c, edge) < -1e-12 * norm(edge)) {
      convex_ = false;
      break;
    }
  }
}

SphericalPolygon::SphericalPolygon(std::vector<UnitDirection> vertices)
    : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) {
    throw std::invalid_argument("spherical polygon needs at least 3 vertices");
  }
  // The projected image decides orientation and simplicity: gnomonic
  // projection maps great circles to straight lines, so both properties
  // transfer exactly.
  std::vector<PlanePoint> projected;
  projected.reserve(vertices_.size());
  for (const UnitDirection& w : vertices_) {
    projected.push_back(hemisphere_to_plane(w));
  }
  if (signed_plane_area(projected) < 0.0) {
    std::reverse(vertices_.begin() + 1, vertices_.end());
    std::reverse(projected.begin() + 1, projected.end());
  }
  PlanePolygon validated(std::move(projected));  // throws if non-simple
  (void)validated;
  finish_construction();
}

SphericalPolygon SphericalPolygon::from_plane_polygon(const PlanePolygon& poly) {
  std::vector<UnitDirection> verts;
  verts.reserve(poly.size());
  for (const PlanePoint& p : poly.vertices()) {
    verts.push_back(plane_to_hemisphere(p));
  }
  return SphericalPolygon(std::move(verts), Trusted{});
}

std::vector<double> interior_angles(const SphericalPolygon& poly) {
  const auto& v = poly.vertices();
  const std::size_t n = v.size();
  const std::vector<Vec3> planes = edge_planes(v);

  std::vector<double> angles(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& before = planes[(i + n - 1) % n];
    const Vec3& after = planes[i];
    const Vec3 axis = cross(before, after);
    const double theta = std::atan2(norm(axis), dot(before, after));
    if (theta >= kPi * (1.0 - 1e-12)) {
      throw DegenerateGeometryError("spherical polygon folds back on itself");
    }
    // axis points along +/- the vertex; the sign separates convex corners
    // from reflex ones.
    angles[i] =
        dot(v[i].vec(), axis) >= 0.0 ? kPi - theta : kPi + theta;
  }
  return angles;
}

double solid_angle_girard(const SphericalPolygon& poly) {
  const std::vector<double> angles = interior_angles(poly);
  double sum = 0.0;
  for (double a : angles) sum += a;
  return sum - (static_cast<double>(poly.size()) - 2.0) * kPi;
}

double solid_angle_triangle_stable(const UnitDirection& a,
                                   const UnitDirection& b,
                                   const UnitDirection& c) {
  return solid_angle_triangle_raw(a.vec(), b.vec(), c.vec());
}

double solid_angle_polygon(const SphericalPolygon& poly) {
  const auto& v = poly.vertices();
  if (v.size() == 3) {
    return solid_angle_triangle_stable(v[0], v[1], v[2]);
  }
  const Vec3 anchor = v[0].vec();
  double sum = 0.0;
  for (std::size_t k = 1; k + 1 < v.size(); ++k) {
    sum += solid_angle_triangle_raw(anchor, v[k].vec(), v[k + 1].vec());
  }
  return std::abs(sum);
}

UnitDirection sample_spherical_triangle(const UnitDirection& a,
                                        const UnitDirection& b,
                                        const UnitDirection& c,
                                        const UniformPair& u) {
  const double omega = solid_angle_triangle_stable(a, b, c);
  if (omega < 0.0) {
    throw std::invalid_argument("triangle must be counter-clockwise");
  }
  if (omega < kMinSolidAngle) {
    throw DegenerateGeometryError("triangle solid angle below sampling floor");
  }
  const Vec3 w = sample_triangle_raw(a.vec(), b.vec(), c.vec(), omega, u.u1,
                                     u.u2);
  return UnitDirection(w.x, w.y, w.z);
}

UnitDirection sample_spherical_polygon(const SphericalPolygon& poly,
                                       const UniformPair& u) {
  if (!poly.is_convex()) {
    throw UnsupportedGeometryError(
        "uniform sampling requires a convex spherical polygon");
  }
  const auto& v = poly.vertices();
  const std::size_t fans = v.size() - 2;

  double total = 0.0;
  std::vector<double> cumulative(fans);
  for (std::size_t k = 0; k < fans; ++k) {
    const double w =
        solid_angle_triangle_raw(v[0].vec(), v[k + 1].vec(), v[k + 2].vec());
    total += std::max(w, 0.0);
    cumulative[k] = total;
  }
  if (total < kMinSolidAngle) {
    throw DegenerateGeometryError("polygon solid angle below sampling floor");
  }

  // Half-open strata [c_{k-1}, c_k): a u1 exactly on a boundary belongs to
  // the next stratum.
  std::size_t pick = fans - 1;
  double lo = 0.0;
  for (std::size_t k = 0; k < fans; ++k) {
    const double hi = cumulative[k] / total;
    if (u.u1 < hi) {
      pick = k;
      break;
    }
    lo = hi;
  }
  if (pick == fans - 1) lo = fans >= 2 ? cumulative[fans - 2] / total : 0.0;
  const double hi = cumulative[pick] / total;
  const double width = hi - lo;
  double rescaled = width > 0.0 ? (u.u1 - lo) / width : 0.0;
  rescaled = std::clamp(rescaled, 0.0, 1.0);

  const double omega =
      std::max(cumulative[pick] - (pick == 0 ? 0.0 : cumulative[pick - 1]),
               kMinSolidAngle);
  const Vec3 w = sample_triangle_raw(v[0].vec(), v[pick + 1].vec(),
                                     v[pick + 2].vec(), omega, rescaled, u.u2);
  return UnitDirection(w.x, w.y, w.z);
}

}  // namespace projcauchy
