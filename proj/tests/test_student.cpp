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
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "projcauchy/errors.hpp"
#include "projcauchy/oracles.hpp"
#include "projcauchy/student.hpp"
#include "test_helpers.hpp"

using namespace projcauchy;
using namespace projcauchy::testing;

namespace {

constexpr double kPi = std::numbers::pi;

PlanePolygon unit_triangle() {
  return PlanePolygon({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}});
}

// Adaptive Simpson on [lo, hi]; test-side 1D oracle for radial integrals.
double simpson(const std::function<double(double)>& f, double lo, double hi,
               double tol, int depth = 0) {
  const double mid = 0.5 * (lo + hi);
  const double h = hi - lo;
  const double flo = f(lo), fmid = f(mid), fhi = f(hi);
  const double whole = h / 6.0 * (flo + 4.0 * fmid + fhi);
  const double lmid = 0.5 * (lo + mid), rmid = 0.5 * (mid + hi);
  const double left = h / 12.0 * (flo + 4.0 * f(lmid) + fmid);
  const double right = h / 12.0 * (fmid + 4.0 * f(rmid) + fhi);
  if (depth > 40 || std::abs(left + right - whole) < 15.0 * tol) {
    return left + right + (left + right - whole) / 15.0;
  }
  return simpson(f, lo, mid, tol / 2, depth + 1) +
         simpson(f, mid, hi, tol / 2, depth + 1);
}

}  // namespace

TEST_CASE("degrees of freedom must be a positive integer") {
  CHECK_THROWS_AS(StudentDof(0), std::invalid_argument);
  CHECK_THROWS_AS(StudentDof(-3), std::invalid_argument);
  CHECK(StudentDof(1).value == 1);
}

TEST_CASE("nu = 1 density is the Cauchy density") {
  SplitMix64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const PlanePoint x = random_point(rng, -20.0, 20.0);
    const double s = student_pdf(x, StudentDof(1));
    const double c = cauchy_std_pdf(x);
    CHECK(std::abs(s - c) <= 1e-15 * c);
  }
}

TEST_CASE("density normalization against the radial integral") {
  // For each nu, int_0^inf r (1+r^2)^(-(nu+2)/2) dr = 1/nu; the tail beyond
  // R contributes exactly (1/nu) (1+R^2)^(-nu/2).
  for (int nu : {1, 2, 3, 5, 8}) {
    const double r_cut = 10.0;
    const double radial = simpson(
        [nu](double r) {
          return r * std::pow(1.0 + r * r, -0.5 * (nu + 2.0));
        },
        0.0, r_cut, 1e-13);
    const double tail =
        std::pow(1.0 + r_cut * r_cut, -0.5 * nu) / nu;
    CHECK(std::abs(radial + tail - 1.0 / nu) <= 1e-9);
    // Total plane mass: density scale 2 pi pdf(0,0) times the radial
    // integral must be 1.
    const double mass =
        2.0 * kPi * student_pdf({0.0, 0.0}, StudentDof(nu)) * (radial + tail);
    CHECK(std::abs(mass - 1.0) <= 1e-8);
    CHECK(student_pdf({0.0, 0.0}, StudentDof(nu)) ==
          doctest::Approx(nu / (2.0 * kPi)).epsilon(1e-15));
  }
}

TEST_CASE("density closed-form spot value") {
  CHECK(student_pdf({1.0, 1.0}, StudentDof(2)) ==
        doctest::Approx(1.0 / (9.0 * kPi)).epsilon(1e-14));
}

TEST_CASE("nu = 1 estimator is exact, constant and variance free") {
  const PlanePolygon tri = unit_triangle();
  const double exact = integrate_cauchy_std(tri);
  for (std::int64_t n : {std::int64_t{1}, std::int64_t{10}, std::int64_t{1000}}) {
    const StudentMcResult r = integrate_student_mc(tri, StudentDof(1), n, 99);
    CHECK(r.value == exact);  // bit-for-bit: the weight is identically one
    CHECK(r.standard_error == 0.0);
    CHECK(r.samples == n);
  }
  const PlanePolygon square({{-2.0, -1.0}, {3.0, -1.0}, {3.0, 2.0}, {-2.0, 2.0}});
  CHECK(integrate_student_mc(square, StudentDof(1), 64, 1).value ==
        integrate_cauchy_std(square));
}

TEST_CASE("estimator matches quadrature for nu = 3 on the unit triangle") {
  const PlanePolygon tri = unit_triangle();
  const QuadratureResult quad = quadrature_integrate(
      [](const PlanePoint& x) { return student_pdf(x, StudentDof(3)); }, tri,
      1e-10);
  const StudentMcResult mc =
      integrate_student_mc(tri, StudentDof(3), 1000000, 42);
  CHECK(std::abs(mc.value - quad.value) <= 3.0 * mc.standard_error);
  CHECK(std::abs(mc.value - quad.value) <= 1e-3);
}

TEST_CASE("nu = 5 over a large square recovers full mass") {
  const PlanePolygon square({{-1e3, -1e3}, {1e3, -1e3}, {1e3, 1e3}, {-1e3, 1e3}});
  const StudentMcResult mc =
      integrate_student_mc(square, StudentDof(5), 1000000, 42);
  CHECK(std::abs(mc.value - 1.0) <= 3.0 * mc.standard_error);
}

TEST_CASE("estimates are unbiased across seeds") {
  const PlanePolygon tri = unit_triangle();
  for (int nu : {2, 3, 5}) {
    const QuadratureResult quad = quadrature_integrate(
        [nu](const PlanePoint& x) { return student_pdf(x, StudentDof(nu)); },
        tri, 1e-10);
    double sum = 0.0;
    double se2_sum = 0.0;
    const int runs = 50;
    for (int seed = 0; seed < runs; ++seed) {
      const StudentMcResult r = integrate_student_mc(
          tri, StudentDof(nu), 10000, static_cast<std::uint64_t>(seed));
      sum += r.value;
      se2_sum += r.standard_error * r.standard_error;
    }
    const double mean = sum / runs;
    const double pooled_se = std::sqrt(se2_sum) / runs;
    CHECK(std::abs(mean - quad.value) <= 4.0 * pooled_se);
  }
}

TEST_CASE("enlarging the domain never shrinks the converged estimate") {
  const std::vector<PlanePolygon> nested{
      PlanePolygon({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}}),
      PlanePolygon({{-0.5, -0.5}, {2.0, -0.5}, {-0.5, 2.0}}),
      PlanePolygon({{-2.0, -2.0}, {6.0, -2.0}, {-2.0, 6.0}}),
  };
  const StudentDof nu(3);
  double previous = 0.0;
  double previous_se = 0.0;
  for (const PlanePolygon& poly : nested) {
    const StudentMcResult r = integrate_student_mc(poly, nu, 1000000, 7);
    const double slack =
        3.0 * std::sqrt(r.standard_error * r.standard_error +
                        previous_se * previous_se);
    CHECK(r.value - previous >= -slack);
    previous = r.value;
    previous_se = r.standard_error;
  }
}

TEST_CASE("fixed seed and worker count reproduce results exactly") {
  const PlanePolygon tri = unit_triangle();
  const StudentDof nu(4);
  const StudentMcResult a = integrate_student_mc(tri, nu, 20000, 1234, 1);
  const StudentMcResult b = integrate_student_mc(tri, nu, 20000, 1234, 1);
  CHECK(a.value == b.value);
  CHECK(a.standard_error == b.standard_error);

  const StudentMcResult c = integrate_student_mc(tri, nu, 20000, 1234, 4);
  const StudentMcResult d = integrate_student_mc(tri, nu, 20000, 1234, 4);
  CHECK(c.value == d.value);
  // Different partitioning draws different streams but estimates agree
  // statistically.
  CHECK(std::abs(c.value - a.value) <=
        5.0 * (a.standard_error + c.standard_error));
}

TEST_CASE("estimator validates its inputs") {
  const PlanePolygon tri = unit_triangle();
  CHECK_THROWS_AS(integrate_student_mc(tri, StudentDof(2), 0, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(integrate_student_mc(tri, StudentDof(2), 10, 1, 0),
                  std::invalid_argument);
  const PlanePolygon ell({{0.0, 0.0},
                          {2.0, 0.0},
                          {2.0, 1.0},
                          {1.0, 1.0},
                          {1.0, 2.0},
                          {0.0, 2.0}});
  CHECK_THROWS_AS(integrate_student_mc(ell, StudentDof(2), 10, 1),
                  UnsupportedGeometryError);
}
