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

#include "projcauchy/cauchy.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace projcauchy {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

LSCParams::LSCParams(double a1, double a2, double b1, double b2, double rho)
    : a1(a1), a2(a2), b1(b1), b2(b2), rho(rho) {
  if (!std::isfinite(a1) || !std::isfinite(a2) || !std::isfinite(b1) ||
      !std::isfinite(b2) || !std::isfinite(rho)) {
    throw std::invalid_argument("location-scale-correlation parameters must be finite");
  }
  if (!(b1 > 0.0) || !(b2 > 0.0)) {
    throw std::invalid_argument("scale parameters must be strictly positive");
  }
  if (!(rho > -1.0 && rho < 1.0)) {
    throw std::invalid_argument("correlation must lie strictly inside (-1, 1)");
  }
}

double LSCParams::sqrt_one_minus_rho2() const {
  return std::sqrt(1.0 - rho * rho);
}

double cauchy_std_pdf(const PlanePoint& x) {
  return projection_jacobian(x) / kTwoPi;
}

PlanePoint lsc_forward(const PlanePoint& x, const LSCParams& p) {
  return PlanePoint(
      p.b1 * x.x1() + p.a1,
      p.b2 * (p.rho * x.x1() + x.x2() * p.sqrt_one_minus_rho2()) + p.a2);
}

PlanePoint lsc_backward(const PlanePoint& x, const LSCParams& p) {
  const double d1 = x.x1() - p.a1;
  const double d2 = x.x2() - p.a2;
  return PlanePoint(d1 / p.b1, (p.b1 * d2 - p.rho * p.b2 * d1) /
                                   (p.b1 * p.b2 * p.sqrt_one_minus_rho2()));
}

double lsc_jacobian(const LSCParams& p) {
  return 1.0 / (p.b1 * p.b2 * p.sqrt_one_minus_rho2());
}

double cauchy_elliptic_pdf(const PlanePoint& x, const LSCParams& p) {
  return cauchy_std_pdf(lsc_backward(x, p)) * lsc_jacobian(p);
}

double cauchy_elliptic_pdf_closed_form(const PlanePoint& x,
                                       const LSCParams& p) {
  const double d1 = x.x1() - p.a1;
  const double d2 = x.x2() - p.a2;
  const double z = d1 * d1 / (p.b1 * p.b1) + d2 * d2 / (p.b2 * p.b2) -
                   2.0 * p.rho * d1 * d2 / (p.b1 * p.b2);
  const double one_minus_rho2 = 1.0 - p.rho * p.rho;
  return std::pow(1.0 + z / one_minus_rho2, -1.5) /
         (kTwoPi * p.b1 * p.b2 * p.sqrt_one_minus_rho2());
}

PlanePolygon lsc_forward(const PlanePolygon& poly, const LSCParams& p) {
  std::vector<PlanePoint> verts;
  verts.reserve(poly.size());
  for (const PlanePoint& v : poly.vertices()) verts.push_back(lsc_forward(v, p));
  return PlanePolygon(std::move(verts));
}

PlanePolygon lsc_backward(const PlanePolygon& poly, const LSCParams& p) {
  std::vector<PlanePoint> verts;
  verts.reserve(poly.size());
  for (const PlanePoint& v : poly.vertices()) verts.push_back(lsc_backward(v, p));
  return PlanePolygon(std::move(verts));
}

double integrate_cauchy_std(const PlanePolygon& poly) {
  return solid_angle_polygon(SphericalPolygon::from_plane_polygon(poly)) /
         kTwoPi;
}

PlanePoint simulate_cauchy_std(const PlanePolygon& poly,
                               const UniformPair& u) {
  const SphericalPolygon sphere = SphericalPolygon::from_plane_polygon(poly);
  return hemisphere_to_plane(sample_spherical_polygon(sphere, u));
}

double integrate_cauchy_elliptic(const PlanePolygon& poly,
                                 const LSCParams& p) {
  return integrate_cauchy_std(lsc_backward(poly, p));
}

PlanePoint simulate_cauchy_elliptic(const PlanePolygon& poly,
                                    const LSCParams& p,
                                    const UniformPair& u) {
  return lsc_forward(simulate_cauchy_std(lsc_backward(poly, p), u), p);
}

}  // namespace projcauchy
