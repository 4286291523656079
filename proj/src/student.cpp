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

#include "projcauchy/student.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

#include "projcauchy/errors.hpp"
#include "projcauchy/rng.hpp"
#include "projcauchy/spherical_polygon.hpp"

namespace projcauchy {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// x^e by repeated squaring; e = 0 gives exactly 1.0.
double ipow(double x, int e) {
  double result = 1.0;
  double base = x;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

struct ChunkSums {
  double weight_sum = 0.0;
  double weight_sq_sum = 0.0;
};

ChunkSums run_chunk(const SphericalPolygon& sphere, int weight_exponent,
                    std::int64_t count, SplitMix64 rng) {
  ChunkSums sums;
  for (std::int64_t i = 0; i < count; ++i) {
    const UniformPair u = rng.next_pair();
    const UnitDirection w = sample_spherical_polygon(sphere, u);
    const double weight = ipow(w.w3(), weight_exponent);
    sums.weight_sum += weight;
    sums.weight_sq_sum += weight * weight;
  }
  return sums;
}

}  // namespace

StudentDof::StudentDof(int nu) : value(nu) {
  if (nu < 1) {
    throw std::invalid_argument("degrees of freedom must be at least 1");
  }
}

double student_pdf(const PlanePoint& x, StudentDof nu) {
  const double s = x.x1() * x.x1() + x.x2() * x.x2() + 1.0;
  return static_cast<double>(nu.value) / kTwoPi *
         std::pow(s, -0.5 * (2.0 + nu.value));
}

StudentMcResult integrate_student_mc(const PlanePolygon& poly, StudentDof nu,
                                     std::int64_t n, std::uint64_t seed,
                                     int workers) {
  if (n < 1) throw std::invalid_argument("sample count must be at least 1");
  if (workers < 1) throw std::invalid_argument("worker count must be at least 1");
  if (static_cast<std::int64_t>(workers) > n) {
    workers = static_cast<int>(n);
  }

  const SphericalPolygon sphere = SphericalPolygon::from_plane_polygon(poly);
  if (!sphere.is_convex()) {
    throw UnsupportedGeometryError(
        "Monte Carlo integration requires a convex polygon");
  }
  const double omega = solid_angle_polygon(sphere);
  const double base = omega / kTwoPi;
  const int weight_exponent = nu.value - 1;

  // Chunk k of the sample indices runs on stream k of the seed; combining
  // the chunk sums in index order keeps the result independent of thread
  // scheduling.
  std::vector<std::int64_t> counts(workers, n / workers);
  for (std::int64_t k = 0; k < n % workers; ++k) counts[k] += 1;

  std::vector<ChunkSums> sums(workers);
  if (workers == 1) {
    sums[0] = run_chunk(sphere, weight_exponent, counts[0],
                        SplitMix64::stream(seed, 0));
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int k = 0; k < workers; ++k) {
      threads.emplace_back([&, k] {
        sums[k] = run_chunk(sphere, weight_exponent, counts[k],
                            SplitMix64::stream(seed, k));
      });
    }
    for (std::thread& t : threads) t.join();
  }

  double weight_sum = 0.0;
  double weight_sq_sum = 0.0;
  for (const ChunkSums& c : sums) {
    weight_sum += c.weight_sum;
    weight_sq_sum += c.weight_sq_sum;
  }

  const double count = static_cast<double>(n);
  const double mean = weight_sum / count;
  const double value = base * nu.value * mean;

  double standard_error = 0.0;
  if (n >= 2) {
    const double variance = std::max(
        0.0, (weight_sq_sum - weight_sum * weight_sum / count) / (count - 1.0));
    standard_error =
        base * nu.value * std::sqrt(variance / count);
  }
  return StudentMcResult{value, standard_error, n};
}

}  // namespace projcauchy
