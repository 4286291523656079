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
// Brute-force verification oracles: adaptive plane quadrature over
// polygons, rejection sampling and a binned chi-square test. These are
// deliberately independent of the solid-angle machinery -- this header
// pulls in only the planar layer and the generator, never the projection
// or spherical code -- so they can sit on the other side of every
// dual-route check.

#ifndef PROJCAUCHY_ORACLES_HPP
#define PROJCAUCHY_ORACLES_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "projcauchy/plane.hpp"
#include "projcauchy/rng.hpp"

namespace projcauchy {

using DensityFn = std::function<double(const PlanePoint&)>;

struct QuadratureResult {
  double value;
  double error_estimate;  // empirical bound on |value - truth|, >= 0
  std::int64_t evaluations;
};

// Thrown when the evaluation budget runs out before the tolerance is met;
// carries the best estimate reached.
class BudgetExceededError : public std::runtime_error {
 public:
  BudgetExceededError(const std::string& message, QuadratureResult best)
      : std::runtime_error(message), best_estimate(best) {}

  QuadratureResult best_estimate;
};

// Integrates f over the polygon to absolute tolerance tol. The polygon is
// ear-clipped into triangles (so the boundary is represented exactly) and
// each triangle is refined adaptively with an embedded degree-5 cubature
// pair, always splitting the region with the largest error estimate.
QuadratureResult quadrature_integrate(
    const DensityFn& f, const PlanePolygon& poly, double tol,
    std::int64_t max_evaluations = 10'000'000);

// n draws of the density f restricted to the polygon, by accept/reject
// against a uniform proposal on the bounding box. bound must dominate f on
// the polygon; any observed violation aborts with InvalidBoundError, and an
// acceptance rate below 1e-6 aborts with ImpracticalBoundError.
std::vector<PlanePoint> rejection_sample(const DensityFn& f,
                                         const PlanePolygon& poly,
                                         double bound, std::uint64_t seed,
                                         std::int64_t n);

struct GofReport {
  double statistic;
  int dof;
  double p_value;
  // (expected, observed) per bin; observed counts sum to the sample count.
  std::vector<std::pair<double, std::int64_t>> bin_counts;
};

// Pearson chi-square of binned samples against expected masses (renormalized
// internally). The bins must partition the sampling domain; every bin must
// expect at least 5 counts or InvalidBinningError is thrown. Samples that
// graze bin boundaries are assigned to the least-violated bin so that no
// count is dropped.
GofReport chi_square_gof(const std::vector<PlanePoint>& samples,
                         const std::vector<PlanePolygon>& bins,
                         const std::vector<double>& masses);

// Upper regularized incomplete gamma Q(a, x), the chi-square upper tail
// probability for a = dof/2, x = statistic/2. Series/continued-fraction
// evaluation, about 1e-12 relative accuracy.
double regularized_gamma_q(double a, double x);

}  // namespace projcauchy

#endif  // PROJCAUCHY_ORACLES_HPP
