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
// The gnomonic projection pair between the plane R^2 x {1} and the open
// upper-half unit sphere, together with its area Jacobian. Everything here
// is a pure function; all three operations are inverses/derivatives of the
// same central projection through the origin.

#ifndef PROJCAUCHY_PROJECTION_HPP
#define PROJCAUCHY_PROJECTION_HPP

#include "projcauchy/plane.hpp"
#include "projcauchy/vec3.hpp"

namespace projcauchy {

// A unit vector on the open upper-half sphere (w3 > 0). Construction
// renormalizes inputs whose norm is within 1e-9 of 1 and rejects anything
// further off; the stored norm is then 1 within 1e-12.
class UnitDirection {
 public:
  UnitDirection(double w1, double w2, double w3);

  double w1() const { return w1_; }
  double w2() const { return w2_; }
  double w3() const { return w3_; }

  Vec3 vec() const { return {w1_, w2_, w3_}; }

 private:
  double w1_, w2_, w3_;
};

// Central projection of a plane point onto the upper-half sphere:
// x -> (x1, x2, 1) / ||(x1, x2, 1)||.
UnitDirection plane_to_hemisphere(const PlanePoint& x);

// Inverse projection: w -> (w1/w3, w2/w3). Round-trips with
// plane_to_hemisphere to 1e-12 per component.
PlanePoint hemisphere_to_plane(const UnitDirection& w);

// Area distortion |d omega / d x| of the inverse projection,
// (x1^2 + x2^2 + 1)^(-3/2), strictly in (0, 1].
double projection_jacobian(const PlanePoint& x);

}  // namespace projcauchy

#endif  // PROJCAUCHY_PROJECTION_HPP
