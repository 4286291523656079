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
#include <limits>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "projcauchy/cauchy.hpp"
#include "projcauchy/projection.hpp"
#include "test_helpers.hpp"

using namespace projcauchy;
using namespace projcauchy::testing;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
}  // namespace

TEST_CASE("plane_to_hemisphere matches the closed form") {
  const UnitDirection origin = plane_to_hemisphere({0.0, 0.0});
  CHECK(origin.w1() == 0.0);
  CHECK(origin.w2() == 0.0);
  CHECK(origin.w3() == 1.0);

  const UnitDirection one = plane_to_hemisphere({1.0, 0.0});
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(one.w1() == doctest::Approx(inv_sqrt2).epsilon(1e-15));
  CHECK(one.w2() == 0.0);
  CHECK(one.w3() == doctest::Approx(inv_sqrt2).epsilon(1e-15));

  const UnitDirection p = plane_to_hemisphere({3.0, 4.0});
  const double inv_sqrt26 = 1.0 / std::sqrt(26.0);
  CHECK(p.w1() == doctest::Approx(3.0 * inv_sqrt26).epsilon(1e-15));
  CHECK(p.w2() == doctest::Approx(4.0 * inv_sqrt26).epsilon(1e-15));
  CHECK(p.w3() == doctest::Approx(inv_sqrt26).epsilon(1e-15));
}

TEST_CASE("plane points reject non-finite and oversized coordinates") {
  CHECK_THROWS_AS(PlanePoint(kInf, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(PlanePoint(0.0, kNan), std::invalid_argument);
  CHECK_THROWS_AS(PlanePoint(1e151, 0.0), std::invalid_argument);
  CHECK_NOTHROW(PlanePoint(1e149, -1e149));
}

TEST_CASE("hemisphere_to_plane inverts the projection") {
  const PlanePoint pole = hemisphere_to_plane(UnitDirection(0.0, 0.0, 1.0));
  CHECK(pole.x1() == 0.0);
  CHECK(pole.x2() == 0.0);

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const PlanePoint one =
      hemisphere_to_plane(UnitDirection(inv_sqrt2, 0.0, inv_sqrt2));
  CHECK(one.x1() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(one.x2() == 0.0);
}

TEST_CASE("unit directions validate norm and hemisphere") {
  CHECK_THROWS_AS(UnitDirection(1.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(UnitDirection(0.0, 0.0, -1.0), std::domain_error);
  CHECK_THROWS_AS(UnitDirection(1.0, 0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(UnitDirection(kNan, 0.0, 1.0), std::invalid_argument);
  // Drift within 1e-9 is renormalized.
  const UnitDirection d(0.0, 0.0, 1.0 + 5e-10);
  CHECK(d.w3() == 1.0);
}

TEST_CASE("round trip hemisphere -> plane -> hemisphere over seeded directions") {
  SplitMix64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const UnitDirection w = random_upper_direction(rng, 0.01);
    const UnitDirection back = plane_to_hemisphere(hemisphere_to_plane(w));
    CHECK(std::abs(back.w1() - w.w1()) <= 1e-12);
    CHECK(std::abs(back.w2() - w.w2()) <= 1e-12);
    CHECK(std::abs(back.w3() - w.w3()) <= 1e-12);
  }
}

TEST_CASE("round trip plane -> hemisphere -> plane, wide coordinate range") {
  SplitMix64 rng(77);
  for (int i = 0; i < 1000; ++i) {
    const double magnitude = std::pow(10.0, uniform_in(rng, -3.0, 6.0));
    const PlanePoint x(magnitude * uniform_in(rng, -1.0, 1.0),
                       magnitude * uniform_in(rng, -1.0, 1.0));
    const PlanePoint back = hemisphere_to_plane(plane_to_hemisphere(x));
    const double s1 = std::max(1.0, std::abs(x.x1()));
    const double s2 = std::max(1.0, std::abs(x.x2()));
    CHECK(std::abs(back.x1() - x.x1()) <= 1e-12 * s1);
    CHECK(std::abs(back.x2() - x.x2()) <= 1e-12 * s2);
  }
}

TEST_CASE("projected directions stay unit length up to 1e6") {
  SplitMix64 rng(5150);
  for (int i = 0; i < 1000; ++i) {
    const double magnitude = std::pow(10.0, uniform_in(rng, 0.0, 6.0));
    const UnitDirection w = plane_to_hemisphere(
        {magnitude * uniform_in(rng, -1.0, 1.0),
         magnitude * uniform_in(rng, -1.0, 1.0)});
    const double n =
        std::sqrt(w.w1() * w.w1() + w.w2() * w.w2() + w.w3() * w.w3());
    CHECK(std::abs(n - 1.0) <= 1e-12);
  }
}

TEST_CASE("projection_jacobian closed form") {
  CHECK(projection_jacobian({0.0, 0.0}) == 1.0);
  CHECK(projection_jacobian({1.0, 0.0}) ==
        doctest::Approx(std::pow(2.0, -1.5)).epsilon(1e-15));
  SplitMix64 rng(31);
  for (int i = 0; i < 100; ++i) {
    const PlanePoint x = random_point(rng, -5.0, 5.0);
    const double j = projection_jacobian(x);
    CHECK(j > 0.0);
    CHECK(j <= 1.0);
  }
}

TEST_CASE("jacobian equals the finite-difference area distortion") {
  SplitMix64 rng(404);
  for (int i = 0; i < 100; ++i) {
    const PlanePoint x = random_point(rng, -5.0, 5.0);
    const double expected = finite_difference_jacobian(x);
    const double actual = projection_jacobian(x);
    CHECK(std::abs(actual - expected) <= 1e-5 * expected);
  }
}

TEST_CASE("density is the jacobian over the hemisphere area") {
  SplitMix64 rng(88);
  constexpr double two_pi = 2.0 * std::numbers::pi;
  for (int i = 0; i < 100; ++i) {
    const PlanePoint x = random_point(rng, -20.0, 20.0);
    const double lhs = two_pi * cauchy_std_pdf(x);
    const double rhs = projection_jacobian(x);
    CHECK(std::abs(lhs - rhs) <= 1e-14 * rhs);
  }
}
