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

#include "projcauchy/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace projcauchy {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

UniformPair::UniformPair(double u1, double u2) : u1(u1), u2(u2) {
  if (!(u1 >= 0.0 && u1 < 1.0) || !(u2 >= 0.0 && u2 < 1.0)) {
    throw std::invalid_argument("uniform pair components must lie in [0, 1)");
  }
}

std::uint64_t SplitMix64::next() {
  state_ += kGamma;
  return mix64(state_);
}

double SplitMix64::next_double() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

UniformPair SplitMix64::next_pair() {
  const double u1 = next_double();
  const double u2 = next_double();
  return UniformPair(u1, u2);
}

SplitMix64 SplitMix64::stream(std::uint64_t seed, std::uint64_t stream_index) {
  return SplitMix64(mix64(seed + (stream_index + 1) * kGamma));
}

}  // namespace projcauchy
