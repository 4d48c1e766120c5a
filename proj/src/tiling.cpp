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

#include "ohs/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace ohs {

TilingParams tiling_params(const Shape& shape) {
  if (shape.is_disk()) return {0.75, 11.0 / 4.0, 14};
  const int k = shape.sides();
  const double c = std::cos(std::numbers::pi / k);
  if (k == 4) return {0.5, 5.0 / 2.0, 25};
  if (k == 5 || k == 6) return {0.25, 9.0 / (4.0 * c), 119};
  return {0.5, 5.0 / (2.0 * c), 34};
}

Grid::Grid(double tile_side, Point offset) : tile_side_(tile_side), offset_(std::move(offset)) {
  if (!(tile_side_ > 0)) throw Error(ErrorCode::kInvalidArgument, "grid: tile side must be > 0");
}

TileIndex Grid::tile_of(const Point& p) const {
  return {static_cast<std::int64_t>(std::floor((p.x() - offset_.x()) / tile_side_)),
          static_cast<std::int64_t>(std::floor((p.y() - offset_.y()) / tile_side_))};
}

Box Grid::tile_box(TileIndex tile) const {
  const Point lo = offset_ + tile_side_ * Point(static_cast<double>(tile.i),
                                                 static_cast<double>(tile.j));
  return Box(lo, lo + Point::Constant(tile_side_));
}

Point Grid::tile_center(TileIndex tile) const { return tile_box(tile).center(); }

double Grid::clearance(const Point& p) const {
  double best = std::numeric_limits<double>::infinity();
  for (int axis = 0; axis < 2; ++axis) {
    const double r = std::fmod(p[axis] - offset_[axis], tile_side_);
    const double u = r < 0 ? r + tile_side_ : r;
    best = std::min({best, u, tile_side_ - u});
  }
  return best;
}

namespace {

// Position on [0, side) of a grid line placed mid-way in the widest gap
// between the residues of `coords`.
double widest_gap_line(std::vector<double> residues, double side) {
  if (residues.empty()) return 0.0;
  std::sort(residues.begin(), residues.end());
  residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
  double best_gap = residues.front() + side - residues.back();
  double best_start = residues.back();
  for (std::size_t i = 0; i + 1 < residues.size(); ++i) {
    const double gap = residues[i + 1] - residues[i];
    if (gap > best_gap) {
      best_gap = gap;
      best_start = residues[i];
    }
  }
  double line = std::fmod(best_start + best_gap / 2.0, side);
  if (line < 0) line += side;
  return line;
}

}  // namespace

Grid build_grid(std::span<const Point> points, const Shape& shape) {
  const double side = tiling_params(shape).tile_side;
  std::array<std::vector<double>, 2> residues;
  for (const Point& p : points) {
    if (!p.allFinite()) throw Error(ErrorCode::kInvalidInput, "build_grid: non-finite coordinate");
    for (int axis = 0; axis < 2; ++axis) {
      double r = std::fmod(p[axis], side);
      if (r < 0) r += side;
      if (r >= side) r = 0;
      residues[axis].push_back(r);
    }
  }
  return Grid(side, Point(widest_gap_line(residues[0], side), widest_gap_line(residues[1], side)));
}

bool meets_tile(const Grid& grid, TileIndex tile, const PlacedObject& obj) {
  const Box box = grid.tile_box(tile);
  if (obj.shape.is_disk()) return box.squaredExteriorDistance(obj.center) < 1.0;

  // Separating axes: the polygon's edge normals plus the two coordinate axes.
  // Touching projections count as separated, which leaves only interior overlap.
  const auto corners = obj.corners();
  auto separated_along = [&](const Vector& axis) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const Point& c : corners) {
      lo = std::min(lo, axis.dot(c));
      hi = std::max(hi, axis.dot(c));
    }
    double blo = std::numeric_limits<double>::infinity();
    double bhi = -blo;
    for (int corner = 0; corner < 4; ++corner) {
      const double v = axis.dot(box.corner(static_cast<Box::CornerType>(corner)));
      blo = std::min(blo, v);
      bhi = std::max(bhi, v);
    }
    return hi <= blo || bhi <= lo;
  };
  if (separated_along(Vector::UnitX()) || separated_along(Vector::UnitY())) return false;
  for (const Vector& n : obj.shape.normals()) {
    if (separated_along(n)) return false;
  }
  return true;
}

std::vector<TileIndex> tiles_intersected(const Grid& grid, const PlacedObject& obj) {
  const Box bounds = obj.bounds();
  const TileIndex lo = grid.tile_of(bounds.min());
  const TileIndex hi = grid.tile_of(bounds.max());
  std::vector<TileIndex> out;
  for (std::int64_t i = lo.i; i <= hi.i; ++i) {
    for (std::int64_t j = lo.j; j <= hi.j; ++j) {
      if (meets_tile(grid, {i, j}, obj)) out.push_back({i, j});
    }
  }
  return out;
}

SuperSquare super_square(const Grid& grid, TileIndex tile, const Shape& shape) {
  const double side = tiling_params(shape).super_side;
  const Point c = grid.tile_center(tile);
  const double q = side / 4.0;
  return {tile, c, side,
          {Point(c.x() - q, c.y() + q), Point(c.x() + q, c.y() + q), Point(c.x() - q, c.y() - q),
           Point(c.x() + q, c.y() - q)}};
}

std::array<Point, 4> quadrant_centers(const Grid& grid, TileIndex tile, const Shape& shape) {
  return super_square(grid, tile, shape).quadrant_centers;
}

int tau_of(const Grid& grid, TileIndex tile, const PlacedObject& obj, double tol) {
  const auto centers = quadrant_centers(grid, tile, obj.shape);
  for (int tau = 1; tau <= 4; ++tau) {
    if (contains(obj, centers[static_cast<std::size_t>(tau - 1)], tol)) return tau;
  }
  throw Error(ErrorCode::kBrokenInvariant,
              "tau_of: object contains no quadrant center of its tile");
}

bool Cone::contains(const Point& x, double tol) const {
  const Vector v = x - apex;
  return cross(lower_ray, v) >= -tol && cross(v, upper_ray) >= -tol;
}

bool Cone::intersects_segment(const Point& a, const Point& b, double tol) const {
  // Clip the segment a + t (b - a), t in [0, 1], against both half-planes.
  double t0 = 0.0;
  double t1 = 1.0;
  const Vector d = b - a;
  auto clip = [&](double value_at_a, double slope) {
    // keep t with value_at_a + t * slope >= -tol
    if (slope == 0.0) return value_at_a >= -tol;
    const double t = (-tol - value_at_a) / slope;
    if (slope > 0) {
      t0 = std::max(t0, t);
    } else {
      t1 = std::min(t1, t);
    }
    return t0 <= t1;
  };
  return clip(cross(lower_ray, Vector(a - apex)), cross(lower_ray, d)) &&
         clip(cross(Vector(a - apex), upper_ray), cross(d, upper_ray));
}

Cone cone_of(const Grid& grid, TileIndex tile, int tau, const Shape& shape) {
  if (tau < 1 || tau > 4) throw Error(ErrorCode::kInvalidArgument, "cone_of: tau must be in 1..4");
  const Point apex = quadrant_centers(grid, tile, shape)[static_cast<std::size_t>(tau - 1)];
  const Box box = grid.tile_box(tile);
  const Vector axis = (box.center() - apex).normalized();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  Vector lo_ray = axis;
  Vector hi_ray = axis;
  for (int corner = 0; corner < 4; ++corner) {
    const Vector v = (box.corner(static_cast<Box::CornerType>(corner)) - apex).normalized();
    const double angle = std::atan2(cross(axis, v), axis.dot(v));
    if (angle < lo) {
      lo = angle;
      lo_ray = v;
    }
    if (angle > hi) {
      hi = angle;
      hi_ray = v;
    }
  }
  const double opening = std::acos(std::clamp(lo_ray.dot(hi_ray), -1.0, 1.0));
  return {apex, lo_ray, hi_ray, opening};
}

}  // namespace ohs
