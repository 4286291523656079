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

#include "projcauchy/projection.hpp"

#include <cmath>
#include <stdexcept>

namespace projcauchy {

UnitDirection::UnitDirection(double w1, double w2, double w3)
    : w1_(w1), w2_(w2), w3_(w3) {
  if (!std::isfinite(w1) || !std::isfinite(w2) || !std::isfinite(w3)) {
    throw std::invalid_argument("direction components must be finite");
  }
  const double n = std::sqrt(w1 * w1 + w2 * w2 + w3 * w3);
  if (std::abs(n - 1.0) > 1e-9) {
    throw std::invalid_argument("direction is not unit length");
  }
  // Renormalize accumulated drift; beyond 1e-9 it is a caller bug, not
  // drift, hence the rejection above.
  w1_ /= n;
  w2_ /= n;
  w3_ /= n;
  if (!(w3_ > 0.0)) {
    throw std::domain_error("direction lies outside the open upper hemisphere");
  }
}

UnitDirection plane_to_hemisphere(const PlanePoint& x) {
  const double n =
      std::sqrt(x.x1() * x.x1() + x.x2() * x.x2() + 1.0);
  return UnitDirection(x.x1() / n, x.x2() / n, 1.0 / n);
}

PlanePoint hemisphere_to_plane(const UnitDirection& w) {
  if (!(w.w3() > 0.0)) {
    throw std::domain_error("projection undefined at or below the equator");
  }
  return PlanePoint(w.w1() / w.w3(), w.w2() / w.w3());
}

double projection_jacobian(const PlanePoint& x) {
  const double s = x.x1() * x.x1() + x.x2() * x.x2() + 1.0;
  return std::pow(s, -1.5);
}

}  // namespace projcauchy
