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

// Square-tile partition of the plane, super-squares around tiles, quadrant
// centers o_1..o_4 and the cones they span over a tile.

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ohs/geometry.hpp"

namespace ohs {

struct TileIndex {
  std::int64_t i = 0;
  std::int64_t j = 0;

  friend auto operator<=>(const TileIndex&, const TileIndex&) = default;
};

struct TileIndexHash {
  std::size_t operator()(const TileIndex& t) const noexcept {
    const auto a = static_cast<std::uint64_t>(t.i);
    const auto b = static_cast<std::uint64_t>(t.j);
    return std::hash<std::uint64_t>{}(a * 0x9E3779B97F4A7C15ULL ^ (b + 0x632BE59BD9B4E019ULL));
  }
};

/// Per-shape constants: tile side, super-square side, and the bound on how
/// many tiles one translate can meet.
struct TilingParams {
  double tile_side;
  double super_side;
  int max_tiles;
};

TilingParams tiling_params(const Shape& shape);

class Grid {
 public:
  Grid(double tile_side, Point offset);

  double tile_side() const { return tile_side_; }
  const Point& offset() const { return offset_; }

  /// Tiles are half-open: [x0, x0 + side) x [y0, y0 + side).
  TileIndex tile_of(const Point& p) const;
  Box tile_box(TileIndex tile) const;
  Point tile_center(TileIndex tile) const;
  /// Distance from p to the nearest grid line.
  double clearance(const Point& p) const;

 private:
  double tile_side_;
  Point offset_;
};

/// Grid of the shape's tile side whose lines avoid every point. Per axis the
/// lines go through the middle of the widest gap between point residues.
Grid build_grid(std::span<const Point> points, const Shape& shape);

/// True when the object meets the interior of the tile.
bool meets_tile(const Grid& grid, TileIndex tile, const PlacedObject& obj);

/// All tiles whose interior the object meets, in lexicographic order.
std::vector<TileIndex> tiles_intersected(const Grid& grid, const PlacedObject& obj);

struct SuperSquare {
  TileIndex tile;
  Point center;
  double side;
  /// Index tau - 1: upper-left, upper-right, lower-left, lower-right.
  std::array<Point, 4> quadrant_centers;
};

SuperSquare super_square(const Grid& grid, TileIndex tile, const Shape& shape);
std::array<Point, 4> quadrant_centers(const Grid& grid, TileIndex tile, const Shape& shape);

/// Smallest tau in 1..4 whose quadrant center lies in the object.
int tau_of(const Grid& grid, TileIndex tile, const PlacedObject& obj,
           double tol = kDefaultTolerance);

/// Convex cone with apex o_tau spanned by the tile.
struct Cone {
  Point apex;
  Vector lower_ray;  // unit, clockwise boundary
  Vector upper_ray;  // unit, counterclockwise boundary
  double opening_angle;

  bool contains(const Point& x, double tol = kDefaultTolerance) const;
  bool intersects_segment(const Point& a, const Point& b, double tol = kDefaultTolerance) const;
};

Cone cone_of(const Grid& grid, TileIndex tile, int tau, const Shape& shape);

}  // namespace ohs
