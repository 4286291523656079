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

#include "projcauchy/oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <deque>
#include <limits>

#include "projcauchy/errors.hpp"

namespace projcauchy {

namespace {

// Degree-5 symmetric 7-point rule on the triangle (Radon). Barycentric
// abscissae and weights; weights sum to one and scale by the triangle area.
struct RulePoint {
  double l1, l2, l3, w;
};

const std::array<RulePoint, 7>& rule_points() {
  static const std::array<RulePoint, 7> pts = [] {
    const double s15 = std::sqrt(15.0);
    const double a1 = (9.0 + 2.0 * s15) / 21.0;
    const double b1 = (6.0 - s15) / 21.0;
    const double w1 = (155.0 - s15) / 1200.0;
    const double a2 = (9.0 - 2.0 * s15) / 21.0;
    const double b2 = (6.0 + s15) / 21.0;
    const double w2 = (155.0 + s15) / 1200.0;
    return std::array<RulePoint, 7>{
        RulePoint{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 9.0 / 40.0},
        RulePoint{a1, b1, b1, w1}, RulePoint{b1, a1, b1, w1},
        RulePoint{b1, b1, a1, w1}, RulePoint{a2, b2, b2, w2},
        RulePoint{b2, a2, b2, w2}, RulePoint{b2, b2, a2, w2}};
  }();
  return pts;
}

double apply_rule(const DensityFn& f, const PlaneTriangle& t) {
  const double area = std::abs(signed_area(t));
  double sum = 0.0;
  for (const RulePoint& p : rule_points()) {
    const PlanePoint x(p.l1 * t[0].x1() + p.l2 * t[1].x1() + p.l3 * t[2].x1(),
                       p.l1 * t[0].x2() + p.l2 * t[1].x2() + p.l3 * t[2].x2());
    sum += p.w * f(x);
  }
  return area * sum;
}

// One refinement region: a triangle whose value is the four-child rule sum
// and whose error estimate is the (conservative) difference against its own
// single-rule value. Child rule values are kept so a later refinement can
// reuse them as the children's coarse estimates.
struct Region {
  PlaneTriangle tri;
  double value;
  double err;
  std::array<PlaneTriangle, 4> children;
  std::array<double, 4> child_rule;
  bool active = true;
};

Region make_region(const DensityFn& f, const PlaneTriangle& tri,
                   double coarse, std::int64_t& evaluations) {
  Region r;
  r.tri = tri;
  r.children = subdivide_triangle(tri);
  double fine = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    r.child_rule[i] = apply_rule(f, r.children[i]);
    fine += r.child_rule[i];
  }
  evaluations += 28;
  r.value = fine;
  r.err = std::abs(fine - coarse);
  return r;
}

// Index of the bin containing the sample; when tolerance-based containment
// fails on every bin (boundary grazing between bins), fall back to the bin
// whose worst half-plane violation is smallest so no sample is dropped.
std::size_t assign_bin(const PlanePoint& p,
                       const std::vector<PlanePolygon>& bins) {
  for (std::size_t i = 0; i < bins.size(); ++i) {
    if (bins[i].contains(p)) return i;
  }
  std::size_t best = 0;
  double best_score = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < bins.size(); ++i) {
    const auto& v = bins[i].vertices();
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < v.size(); ++k) {
      const PlanePoint& a = v[k];
      const PlanePoint& b = v[(k + 1) % v.size()];
      const double ex = b.x1() - a.x1();
      const double ey = b.x2() - a.x2();
      const double len = std::hypot(ex, ey);
      const double s =
          (ex * (p.x2() - a.x2()) - ey * (p.x1() - a.x1())) / len;
      worst = std::min(worst, s);
    }
    if (worst > best_score) {
      best_score = worst;
      best = i;
    }
  }
  return best;
}

// Lower regularized incomplete gamma by power series (x < a + 1).
double gamma_p_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  double ap = a;
  for (int i = 0; i < 10000; ++i) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper regularized incomplete gamma by Lentz continued fraction
// (x >= a + 1).
double gamma_q_cf(double a, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 10000; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double regularized_gamma_q(double a, double x) {
  if (!(a > 0.0) || x < 0.0 || !std::isfinite(a) || !std::isfinite(x)) {
    throw std::invalid_argument("regularized_gamma_q requires a > 0, x >= 0");
  }
  if (x == 0.0) return 1.0;
  double q;
  if (x < a + 1.0) {
    q = 1.0 - gamma_p_series(a, x);
  } else {
    q = gamma_q_cf(a, x);
  }
  return std::clamp(q, 0.0, 1.0);
}

QuadratureResult quadrature_integrate(const DensityFn& f,
                                      const PlanePolygon& poly, double tol,
                                      std::int64_t max_evaluations) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");

  std::int64_t evaluations = 0;
  std::deque<Region> regions;
  double total_err = 0.0;

  for (const PlaneTriangle& tri : triangulate(poly)) {
    const double coarse = apply_rule(f, tri);
    evaluations += 7;
    regions.push_back(make_region(f, tri, coarse, evaluations));
    total_err += regions.back().err;
  }

  // (err, region index) max-heap over the active regions.
  std::vector<std::pair<double, std::size_t>> heap;
  heap.reserve(regions.size());
  for (std::size_t i = 0; i < regions.size(); ++i) {
    heap.emplace_back(regions[i].err, i);
  }
  std::make_heap(heap.begin(), heap.end());

  const auto result_now = [&] {
    double value = 0.0;
    double err = 0.0;
    for (const Region& r : regions) {
      if (!r.active) continue;
      value += r.value;
      err += r.err;
    }
    return QuadratureResult{value, err, evaluations};
  };

  while (total_err > tol) {
    if (heap.empty()) break;
    if (evaluations + 112 > max_evaluations) {
      throw BudgetExceededError("quadrature evaluation budget exhausted",
                                result_now());
    }
    std::pop_heap(heap.begin(), heap.end());
    const std::size_t worst = heap.back().second;
    heap.pop_back();

    Region& r = regions[worst];
    r.active = false;
    total_err -= r.err;
    for (std::size_t i = 0; i < 4; ++i) {
      regions.push_back(
          make_region(f, r.children[i], r.child_rule[i], evaluations));
      total_err += regions.back().err;
      heap.emplace_back(regions.back().err, regions.size() - 1);
      std::push_heap(heap.begin(), heap.end());
    }
  }
  return result_now();
}

std::vector<PlanePoint> rejection_sample(const DensityFn& f,
                                         const PlanePolygon& poly,
                                         double bound, std::uint64_t seed,
                                         std::int64_t n) {
  if (n < 1) throw std::invalid_argument("sample count must be at least 1");
  if (!(bound > 0.0) || !std::isfinite(bound)) {
    throw std::invalid_argument("density bound must be positive and finite");
  }

  const BoundingBox box = poly.bounding_box();
  const double span1 = box.max1 - box.min1;
  const double span2 = box.max2 - box.min2;

  SplitMix64 rng(seed);
  std::vector<PlanePoint> out;
  out.reserve(static_cast<std::size_t>(n));

  std::int64_t proposals = 0;
  constexpr std::int64_t kRateCheckAfter = 1'000'000;
  constexpr std::int64_t kHardCap = 1'000'000'000;
  while (static_cast<std::int64_t>(out.size()) < n) {
    ++proposals;
    if ((proposals >= kRateCheckAfter &&
         static_cast<double>(out.size()) <
             1e-6 * static_cast<double>(proposals)) ||
        proposals > kHardCap) {
      throw ImpracticalBoundError(
          "rejection sampling acceptance rate below 1e-6");
    }
    const PlanePoint candidate(box.min1 + rng.next_double() * span1,
                               box.min2 + rng.next_double() * span2);
    const double accept = rng.next_double();
    if (!poly.contains(candidate)) continue;
    const double density = f(candidate);
    if (density > bound * (1.0 + 1e-12)) {
      throw InvalidBoundError("observed density above the supplied bound");
    }
    if (accept * bound < density) out.push_back(candidate);
  }
  return out;
}

GofReport chi_square_gof(const std::vector<PlanePoint>& samples,
                         const std::vector<PlanePolygon>& bins,
                         const std::vector<double>& masses) {
  if (bins.size() < 2) {
    throw std::invalid_argument("chi-square needs at least 2 bins");
  }
  if (bins.size() != masses.size()) {
    throw std::invalid_argument("one mass per bin required");
  }
  double total_mass = 0.0;
  for (double m : masses) {
    if (!(m > 0.0) || !std::isfinite(m)) {
      throw std::invalid_argument("bin masses must be positive and finite");
    }
    total_mass += m;
  }

  const double n = static_cast<double>(samples.size());
  std::vector<double> expected(bins.size());
  for (std::size_t i = 0; i < bins.size(); ++i) {
    expected[i] = n * masses[i] / total_mass;
    if (expected[i] < 5.0) {
      throw InvalidBinningError("a bin expects fewer than 5 counts");
    }
  }

  std::vector<std::int64_t> observed(bins.size(), 0);
  for (const PlanePoint& p : samples) {
    observed[assign_bin(p, bins)] += 1;
  }

  double statistic = 0.0;
  GofReport report;
  report.bin_counts.reserve(bins.size());
  for (std::size_t i = 0; i < bins.size(); ++i) {
    const double diff = static_cast<double>(observed[i]) - expected[i];
    statistic += diff * diff / expected[i];
    report.bin_counts.emplace_back(expected[i], observed[i]);
  }
  report.statistic = statistic;
  report.dof = static_cast<int>(bins.size()) - 1;
  report.p_value = regularized_gamma_q(0.5 * report.dof, 0.5 * statistic);
  return report;
}

}  // namespace projcauchy
