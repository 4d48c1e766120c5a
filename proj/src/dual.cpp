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

#include "ohs/dual.hpp"

namespace ohs {

DualInstance dualize(std::span<const Point> points, std::span<const PlacedObject> objects,
                     const Shape& shape) {
  DualInstance out;
  out.shape = reflect(shape);
  out.points.reserve(objects.size());
  for (const PlacedObject& obj : objects) {
    if (!(obj.shape == shape)) {
      throw Error(ErrorCode::kInvalidArgument, "dualize: object is not a translate of the shape");
    }
    out.points.push_back(obj.center);
  }
  out.objects.reserve(points.size());
  for (const Point& p : points) out.objects.push_back({out.shape, p});
  return out;
}

IncidenceMatrix incidence(std::span<const Point> points, std::span<const PlacedObject> objects,
                          double tol) {
  IncidenceMatrix m(static_cast<Eigen::Index>(points.size()),
                    static_cast<Eigen::Index>(objects.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < objects.size(); ++j) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          contains(objects[j], points[i], tol);
    }
  }
  return m;
}

}  // namespace ohs
