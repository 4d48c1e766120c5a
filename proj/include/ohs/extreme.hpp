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

// Extreme points of a tile with respect to a quadrant center o_tau.
//
// A tile point p is extreme for (tile, tau) when some unit translate has p on
// its boundary, holds o_tau, and holds no other point of the tile. The
// centers c with p on the boundary of shape(c) form the boundary of the
// reflected shape placed at p; we parametrize that curve exactly, clip it to
// the reflected shape placed at o_tau, and then search the clipped pieces for
// a center lying strictly inside p's convex-distance Voronoi cell.

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ohs/geometry.hpp"
#include "ohs/tiling.hpp"

namespace ohs {

struct ExtremeOptions {
  /// Uniform samples per clipped locus piece before local refinement.
  int samples = 4096;
  /// Strict Voronoi-interior margin.
  double cell_margin = 1e-9;
  /// Membership slack for o_tau.
  double tol = kDefaultTolerance;
  /// Parameter tolerance of the local refinement.
  double refine_tol = 1e-12;
};

/// d(c, p) < d(c, q) - margin for every q in `others`.
bool in_strict_cell(const Point& c, const Point& p, std::span<const Point> others,
                    const Shape& shape, double margin = 1e-9);

/// Part of the curve {c : d(c, p) = 1}: a unit-circle arc around `origin`
/// for disks, a straight segment for polygons.
struct LocusPiece {
  bool arc = false;
  Point origin;
  double angle_from = 0.0;
  double angle_to = 0.0;
  Point from;
  Point to;

  /// s runs over [0, 1].
  Point at(double s) const;
  double length() const;
};

/// The locus of centers with p on the boundary, restricted to centers whose
/// object contains o (within tol).
std::vector<LocusPiece> candidate_locus(const Point& p, const Point& o, const Shape& shape,
                                        double tol = kDefaultTolerance);

/// A center c certifying that p is extreme for apex o, if one is found.
std::optional<Point> extreme_witness(const Point& p, std::span<const Point> others,
                                     const Point& o, const Shape& shape,
                                     const ExtremeOptions& options = {});

/// `tile_points` must be the points of the tile; p must be one of them.
bool is_extreme(const Point& p, TileIndex tile, int tau, std::span<const Point> tile_points,
                const Shape& shape, const Grid& grid, const ExtremeOptions& options = {});

/// Direction angle of p - o in [0, 2 pi).
double theta(const Point& o, const Point& p);

struct ExtremeStructure {
  TileIndex tile;
  int tau = 1;
  /// Extreme points sorted by theta.
  std::vector<Point> points;
  std::vector<double> thetas;
  /// Position of each extreme point in the `tile_points` it was built from.
  std::vector<std::size_t> source;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
};

ExtremeStructure build_extreme_structure(TileIndex tile, int tau,
                                         std::span<const Point> tile_points, const Shape& shape,
                                         const Grid& grid, const ExtremeOptions& options = {});

}  // namespace ohs
