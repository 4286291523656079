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
// Bivariate projective-Cauchy densities and their exact polygon operations.
// Integration over a polygon reduces to the solid angle its hemisphere
// image subtends (divided by 2 pi); simulation reduces to uniform sampling
// of that solid angle followed by projection back to the plane. The
// location-scale-correlation family is handled by warping polygons through
// the linear transform and reusing the standard-density machinery.

#ifndef PROJCAUCHY_CAUCHY_HPP
#define PROJCAUCHY_CAUCHY_HPP

#include "projcauchy/plane.hpp"
#include "projcauchy/projection.hpp"
#include "projcauchy/rng.hpp"
#include "projcauchy/spherical_polygon.hpp"

namespace projcauchy {

// Location-scale-correlation parameters (a1, a2, b1, b2, rho). Scales must
// be strictly positive and |rho| strictly below 1; the transform Jacobian
// diverges at the boundary, so validation rejects rather than clamps.
struct LSCParams {
  LSCParams(double a1, double a2, double b1, double b2, double rho);

  double a1, a2, b1, b2, rho;

  double sqrt_one_minus_rho2() const;
};

// Standard density f(x) = (1 / 2pi) (x1^2 + x2^2 + 1)^(-3/2); exactly the
// projection Jacobian divided by the hemisphere area.
double cauchy_std_pdf(const PlanePoint& x);

// Forward warp: (b1 x1 + a1, b2 [rho x1 + x2 sqrt(1 - rho^2)] + a2).
PlanePoint lsc_forward(const PlanePoint& x, const LSCParams& p);

// Exact inverse of lsc_forward.
PlanePoint lsc_backward(const PlanePoint& x, const LSCParams& p);

// Constant Jacobian of the backward warp, 1 / (b1 b2 sqrt(1 - rho^2)).
double lsc_jacobian(const LSCParams& p);

// Elliptic density as the warped standard density,
// f_std(lsc_backward(x)) * lsc_jacobian.
double cauchy_elliptic_pdf(const PlanePoint& x, const LSCParams& p);

// Same density in its quadratic closed form,
// (2 pi b1 b2 sqrt(1-rho^2))^-1 (1 + z / (1-rho^2))^(-3/2). Kept as an
// independent algebraic route; agrees with cauchy_elliptic_pdf to 1e-12
// relative.
double cauchy_elliptic_pdf_closed_form(const PlanePoint& x,
                                       const LSCParams& p);

// Vertex-wise warps. Both transforms are linear with positive determinant,
// so they preserve simplicity, orientation and convexity.
PlanePolygon lsc_forward(const PlanePolygon& poly, const LSCParams& p);
PlanePolygon lsc_backward(const PlanePolygon& poly, const LSCParams& p);

// Mass of the standard density over a simple polygon: the solid angle of
// the projected spherical polygon over 2 pi. Exact up to the solid-angle
// evaluation; no quadrature involved.
double integrate_cauchy_std(const PlanePolygon& poly);

// One draw of the standard density truncated to a convex polygon. The
// result always lies inside the polygon and, over many draws, follows
// f_std restricted to it and renormalized. integrate_cauchy_std(poly) is
// the truncation constant when an explicit normalization is needed.
PlanePoint simulate_cauchy_std(const PlanePolygon& poly,
                               const UniformPair& u);

// Mass of the elliptic density over a polygon: integrate the standard
// density over the backward-warped polygon.
double integrate_cauchy_elliptic(const PlanePolygon& poly,
                                 const LSCParams& p);

// One truncated elliptic draw: simulate on the backward-warped polygon and
// warp the sample forward. Requires the warped polygon to be convex.
PlanePoint simulate_cauchy_elliptic(const PlanePolygon& poly,
                                    const LSCParams& p,
                                    const UniformPair& u);

}  // namespace projcauchy

#endif  // PROJCAUCHY_CAUCHY_HPP
