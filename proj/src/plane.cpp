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

#include "projcauchy/plane.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "projcauchy/errors.hpp"

namespace projcauchy {

namespace {

double cross2(double ax, double ay, double bx, double by) {
  return ax * by - ay * bx;
}

// Twice the signed area of (a, b, c).
double orient2(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c) {
  return cross2(b.x1() - a.x1(), b.x2() - a.x2(), c.x1() - a.x1(),
                c.x2() - a.x2());
}

bool on_segment(const PlanePoint& a, const PlanePoint& b, const PlanePoint& p) {
  return std::min(a.x1(), b.x1()) <= p.x1() &&
         p.x1() <= std::max(a.x1(), b.x1()) &&
         std::min(a.x2(), b.x2()) <= p.x2() &&
         p.x2() <= std::max(a.x2(), b.x2());
}

// Any contact between the closed segments counts as an intersection.
bool segments_intersect(const PlanePoint& p1, const PlanePoint& p2,
                        const PlanePoint& q1, const PlanePoint& q2) {
  const double d1 = orient2(q1, q2, p1);
  const double d2 = orient2(q1, q2, p2);
  const double d3 = orient2(p1, p2, q1);
  const double d4 = orient2(p1, p2, q2);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
    return true;
  }
  if (d1 == 0 && on_segment(q1, q2, p1)) return true;
  if (d2 == 0 && on_segment(q1, q2, p2)) return true;
  if (d3 == 0 && on_segment(p1, p2, q1)) return true;
  if (d4 == 0 && on_segment(p1, p2, q2)) return true;
  return false;
}

double shoelace(const std::vector<PlanePoint>& v) {
  double twice_area = 0.0;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const PlanePoint& a = v[i];
    const PlanePoint& b = v[(i + 1) % n];
    twice_area += cross2(a.x1(), a.x2(), b.x1(), b.x2());
  }
  return 0.5 * twice_area;
}

}  // namespace

PlanePoint::PlanePoint(double x1, double x2) : x1_(x1), x2_(x2) {
  if (!std::isfinite(x1) || !std::isfinite(x2)) {
    throw std::invalid_argument("plane point coordinates must be finite");
  }
  if (std::abs(x1) > kMaxAbsCoordinate || std::abs(x2) > kMaxAbsCoordinate) {
    throw std::invalid_argument("plane point coordinate magnitude exceeds 1e150");
  }
}

PlanePolygon::PlanePolygon(std::vector<PlanePoint> vertices)
    : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 3) {
    throw std::invalid_argument("polygon needs at least 3 vertices");
  }

  scale_ = 1.0;
  for (const PlanePoint& v : vertices_) {
    scale_ = std::max({scale_, std::abs(v.x1()), std::abs(v.x2())});
  }

  for (std::size_t i = 0; i < n; ++i) {
    const PlanePoint& a = vertices_[i];
    const PlanePoint& b = vertices_[(i + 1) % n];
    const double d = std::hypot(b.x1() - a.x1(), b.x2() - a.x2());
    if (d < 1e-13 * scale_) {
      throw DegenerateGeometryError("polygon has a degenerate edge");
    }
  }

  const double area = shoelace(vertices_);
  if (std::abs(area) <= 1e-15 * scale_ * scale_) {
    throw DegenerateGeometryError("polygon encloses no area");
  }
  if (area < 0.0) {
    // Normalize to counter-clockwise; the first vertex stays first.
    std::reverse(vertices_.begin() + 1, vertices_.end());
  }
  area_ = std::abs(area);

  // Simplicity: no contact between non-adjacent edges.
  for (std::size_t i = 0; i < n; ++i) {
    const PlanePoint& p1 = vertices_[i];
    const PlanePoint& p2 = vertices_[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t jn = (j + 1) % n;
      if (j == i || j == (i + 1) % n || jn == i) continue;  // adjacent
      if (segments_intersect(p1, p2, vertices_[j], vertices_[jn])) {
        throw std::invalid_argument("polygon is self-intersecting");
      }
    }
  }

  convex_ = true;
  const double turn_tol = 1e-12 * scale_ * scale_;
  for (std::size_t i = 0; i < n; ++i) {
    const double turn = orient2(vertices_[i], vertices_[(i + 1) % n],
                                vertices_[(i + 2) % n]);
    if (turn < -turn_tol) {
      convex_ = false;
      break;
    }
  }
}

bool PlanePolygon::contains(const PlanePoint& p, double tol) const {
  const std::size_t n = vertices_.size();
  const double abs_tol = tol * scale_;
  if (convex_) {
    for (std::size_t i = 0; i < n; ++i) {
      const PlanePoint& a = vertices_[i];
      const PlanePoint& b = vertices_[(i + 1) % n];
      const double len = std::hypot(b.x1() - a.x1(), b.x2() - a.x2());
      if (orient2(a, b, p) < -abs_tol * len) return false;
    }
    return true;
  }

  // Boundary test first so the tolerance applies on every edge, then an
  // even-odd crossing count for the interior.
  for (std::size_t i = 0; i < n; ++i) {
    const PlanePoint& a = vertices_[i];
    const PlanePoint& b = vertices_[(i + 1) % n];
    const double ex = b.x1() - a.x1();
    const double ey = b.x2() - a.x2();
    const double len2 = ex * ex + ey * ey;
    double t = ((p.x1() - a.x1()) * ex + (p.x2() - a.x2()) * ey) / len2;
    t = std::clamp(t, 0.0, 1.0);
    const double dx = p.x1() - (a.x1() + t * ex);
    const double dy = p.x2() - (a.x2() + t * ey);
    if (std::hypot(dx, dy) <= abs_tol) return true;
  }
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const PlanePoint& a = vertices_[i];
    const PlanePoint& b = vertices_[(i + 1) % n];
    if ((a.x2() > p.x2()) != (b.x2() > p.x2())) {
      const double x_cross =
          a.x1() + (p.x2() - a.x2()) / (b.x2() - a.x2()) * (b.x1() - a.x1());
      if (p.x1() < x_cross) inside = !inside;
    }
  }
  return inside;
}

BoundingBox PlanePolygon::bounding_box() const {
  BoundingBox box{std::numeric_limits<double>::infinity(),
                  std::numeric_limits<double>::infinity(),
                  -std::numeric_limits<double>::infinity(),
                  -std::numeric_limits<double>::infinity()};
  for (const PlanePoint& v : vertices_) {
    box.min1 = std::min(box.min1, v.x1());
    box.min2 = std::min(box.min2, v.x2());
    box.max1 = std::max(box.max1, v.x1());
    box.max2 = std::max(box.max2, v.x2());
  }
  return box;
}

double signed_area(const PlaneTriangle& t) {
  return 0.5 * orient2(t[0], t[1], t[2]);
}

std::array<PlaneTriangle, 4> subdivide_triangle(const PlaneTriangle& t) {
  const auto mid = [](const PlanePoint& a, const PlanePoint& b) {
    return PlanePoint(0.5 * (a.x1() + b.x1()), 0.5 * (a.x2() + b.x2()));
  };
  const PlanePoint m01 = mid(t[0], t[1]);
  const PlanePoint m12 = mid(t[1], t[2]);
  const PlanePoint m20 = mid(t[2], t[0]);
  return {PlaneTriangle{t[0], m01, m20}, PlaneTriangle{m01, t[1], m12},
          PlaneTriangle{m20, m12, t[2]}, PlaneTriangle{m01, m12, m20}};
}

std::vector<PlaneTriangle> triangulate(const PlanePolygon& poly) {
  std::vector<std::size_t> idx(poly.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  const std::vector<PlanePoint>& v = poly.vertices();
  const double eps = 1e-14 * poly.scale() * poly.scale();

  std::vector<PlaneTriangle> out;
  out.reserve(poly.size() - 2);
  while (idx.size() > 3) {
    bool clipped = false;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      const std::size_t ip = idx[(i + idx.size() - 1) % idx.size()];
      const std::size_t ic = idx[i];
      const std::size_t in = idx[(i + 1) % idx.size()];
      if (orient2(v[ip], v[ic], v[in]) <= eps) continue;  // reflex or flat
      bool ear = true;
      for (std::size_t j : idx) {
        if (j == ip || j == ic || j == in) continue;
        if (orient2(v[ip], v[ic], v[j]) >= -eps &&
            orient2(v[ic], v[in], v[j]) >= -eps &&
            orient2(v[in], v[ip], v[j]) >= -eps) {
          ear = false;
          break;
        }
      }
      if (!ear) continue;
      out.push_back(PlaneTriangle{v[ip], v[ic], v[in]});
      idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(i));
      clipped = true;
      break;
    }
    if (!clipped) {
      throw DegenerateGeometryError("polygon triangulation found no ear");
    }
  }
  out.push_back(PlaneTriangle{v[idx[0]], v[idx[1]], v[idx[2]]});
  return out;
}

}  // namespace projcauchy
