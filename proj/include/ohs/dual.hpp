// Copyright 2026 The Authors.
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

// Hitting set / set cover duality: object centers become points and points
// become reflected objects. p lies in shape(c) exactly when c lies in
// (-shape)(p).

#pragma once

#include <Eigen/Core>

#include <span>
#include <vector>

#include "ohs/geometry.hpp"

namespace ohs {

struct DualInstance {
  Shape shape = Shape::disk();
  std::vector<Point> points;
  std::vector<PlacedObject> objects;
};

DualInstance dualize(std::span<const Point> points, std::span<const PlacedObject> objects,
                     const Shape& shape);

using IncidenceMatrix = Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic>;

/// Rows are points, columns are objects.
IncidenceMatrix incidence(std::span<const Point> points, std::span<const PlacedObject> objects,
                          double tol = kDefaultTolerance);

}  // namespace ohs
