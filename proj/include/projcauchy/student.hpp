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
// Student-nu extension. Weighting the uniform directional measure by a
// power of the height w3 produces the bivariate Student family on the
// plane: substituting d omega = (x1^2+x2^2+1)^(-3/2) dx into the kernel
// (x1^2+x2^2+1)^(-(2+nu)/2) dx leaves the directional weight w3^(nu-1),
// so polygon masses become Omega * E[w3^(nu-1)] under uniform sampling of
// the subtended solid angle. nu = 1 recovers the Cauchy case with weight
// identically 1 (zero-variance, exact).

#ifndef PROJCAUCHY_STUDENT_HPP
#define PROJCAUCHY_STUDENT_HPP

#include <cstdint>

#include "projcauchy/cauchy.hpp"
#include "projcauchy/plane.hpp"

namespace projcauchy {

// Integer degrees of freedom, nu >= 1.
struct StudentDof {
  explicit StudentDof(int nu);
  int value;
};

// Normalized unit-scale density (nu / 2pi) (x1^2 + x2^2 + 1)^(-(2+nu)/2).
// nu = 1 equals cauchy_std_pdf exactly.
double student_pdf(const PlanePoint& x, StudentDof nu);

struct StudentMcResult {
  double value;           // (nu / 2pi) * Omega * mean(w3^(nu-1))
  double standard_error;  // sample standard error of the estimate
  std::int64_t samples;
};

// Monte Carlo mass of the Student density over a convex polygon, using n
// uniform draws on the subtended solid angle. Deterministic for a fixed
// (seed, workers) pair: sample indices are partitioned into contiguous
// chunks, chunk k runs on SplitMix64::stream(seed, k), and the chunk
// accumulators are combined in index order regardless of scheduling.
StudentMcResult integrate_student_mc(const PlanePolygon& poly, StudentDof nu,
                                     std::int64_t n, std::uint64_t seed,
                                     int workers = 1);

}  // namespace projcauchy

#endif  // PROJCAUCHY_STUDENT_HPP
