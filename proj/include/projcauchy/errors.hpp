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

#ifndef PROJCAUCHY_ERRORS_HPP
#define PROJCAUCHY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace projcauchy {

// Base class for geometric failures. Parameter validation uses
// std::invalid_argument and std::domain_error directly.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Zero-measure or otherwise collapsed geometry (coincident vertices,
// zero-area polygons, triangles below the solid-angle floor).
class DegenerateGeometryError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

// Geometry that is valid but outside what an operation supports,
// e.g. uniform sampling of a non-convex polygon.
class UnsupportedGeometryError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

// Rejection sampling observed a density value above the caller-supplied
// bound.
class InvalidBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rejection sampling acceptance rate collapsed; the bound is unusable.
class ImpracticalBoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A goodness-of-fit binning violates the expected-count floor.
class InvalidBinningError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace projcauchy

#endif  // PROJCAUCHY_ERRORS_HPP
