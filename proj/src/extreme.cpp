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

#include "ohs/extreme.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace ohs {

bool in_strict_cell(const Point& c, const Point& p, std::span<const Point> others,
                    const Shape& shape, double margin) {
  const double dp = convex_distance(shape, c, p);
  for (const Point& q : others) {
    if (!(dp < convex_distance(shape, c, q) - margin)) return false;
  }
  return true;
}

Point LocusPiece::at(double s) const {
  if (arc) {
    const double t = angle_from + s * (angle_to - angle_from);
    return origin + Point(std::cos(t), std::sin(t));
  }
  return from + s * (to - from);
}

double LocusPiece::length() const {
  return arc ? angle_to - angle_from : (to - from).norm();
}

std::vector<LocusPiece> candidate_locus(const Point& p, const Point& o, const Shape& shape,
                                        double tol) {
  std::vector<LocusPiece> pieces;
  const double reach = 1.0 + tol;

  if (shape.is_disk()) {
    const Vector e = p - o;
    const double dist = e.norm();
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    if (dist == 0.0) {
      pieces.push_back({true, p, 0.0, kTwoPi, {}, {}});
      return pieces;
    }
    // |e + u(t)| <= reach  <=>  cos(t - phi) <= rhs
    const double rhs = (reach * reach - 1.0 - dist * dist) / (2.0 * dist);
    if (rhs < -1.0) return pieces;
    if (rhs >= 1.0) {
      pieces.push_back({true, p, 0.0, kTwoPi, {}, {}});
      return pieces;
    }
    const double phi = std::atan2(e.y(), e.x());
    const double a = std::acos(rhs);
    pieces.push_back({true, p, phi + a, phi + kTwoPi - a, {}, {}});
    return pieces;
  }

  // Boundary of the reflected polygon at p, clipped edge by edge against the
  // reflected polygon at o: c is kept when n . (o - c) <= reach for all n.
  const auto verts = shape.vertices();
  const auto normals = shape.normals();
  const std::size_t k = verts.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Point a = p - verts[i];
    const Point b = p - verts[(i + 1) % k];
    const Vector d = b - a;
    double s0 = 0.0;
    double s1 = 1.0;
    bool empty = false;
    for (const Vector& n : normals) {
      // n.(o - a) - s n.d <= reach
      const double base = n.dot(Vector(o - a)) - reach;
      const double slope = -n.dot(d);
      if (slope == 0.0) {
        if (base > 0.0) empty = true;
      } else if (slope > 0.0) {
        s1 = std::min(s1, -base / slope);
      } else {
        s0 = std::max(s0, -base / slope);
      }
      if (empty || s0 > s1) {
        empty = true;
        break;
      }
    }
    if (empty) continue;
    pieces.push_back({false, {}, 0.0, 0.0, a + s0 * d, a + s1 * d});
  }
  return pieces;
}

namespace {

// Slack of the strict Voronoi condition at c; positive means c is inside.
double cell_slack(const Point& c, const Point& p, std::span<const Point> others,
                  const Shape& shape, double margin) {
  double nearest = std::numeric_limits<double>::infinity();
  for (const Point& q : others) nearest = std::min(nearest, convex_distance(shape, c, q));
  return nearest - convex_distance(shape, c, p) - margin;
}

constexpr int kMaxRefinements = 32;

}  // namespace

std::optional<Point> extreme_witness(const Point& p, std::span<const Point> others,
                                     const Point& o, const Shape& shape,
                                     const ExtremeOptions& options) {
  const auto pieces = candidate_locus(p, o, shape, options.tol);
  if (pieces.empty()) return std::nullopt;
  if (others.empty()) return pieces.front().at(0.5);

  auto slack = [&](const LocusPiece& piece, double s) {
    return cell_slack(piece.at(s), p, others, shape, options.cell_margin);
  };

  const int n = std::max(options.samples, 2);
  std::vector<double> values(static_cast<std::size_t>(n));
  for (const LocusPiece& piece : pieces) {
    if (piece.length() <= 0.0) {
      if (slack(piece, 0.0) > 0.0) return piece.at(0.0);
      continue;
    }
    const double step = 1.0 / (n - 1);
    for (int i = 0; i < n; ++i) {
      const double v = slack(piece, i * step);
      if (v > 0.0) return piece.at(i * step);
      values[static_cast<std::size_t>(i)] = v;
    }

    // No sample landed inside; the cell may still cut a sliver between two
    // samples. Refine around every sampled local maximum, best first.
    std::vector<int> peaks;
    for (int i = 0; i < n; ++i) {
      const double left = i > 0 ? values[static_cast<std::size_t>(i - 1)]
                                : -std::numeric_limits<double>::infinity();
      const double right = i + 1 < n ? values[static_cast<std::size_t>(i + 1)]
                                     : -std::numeric_limits<double>::infinity();
      const double v = values[static_cast<std::size_t>(i)];
      if (v >= left && v >= right && (v > left || v > right)) peaks.push_back(i);
    }
    std::sort(peaks.begin(), peaks.end(), [&](int a, int b) {
      return values[static_cast<std::size_t>(a)] > values[static_cast<std::size_t>(b)];
    });
    if (peaks.size() > kMaxRefinements) peaks.resize(kMaxRefinements);

    const double tol = options.refine_tol / std::max(piece.length(), 1.0);
    const double golden = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int peak : peaks) {
      double lo = std::max(0, peak - 1) * step;
      double hi = std::min(n - 1, peak + 1) * step;
      double x1 = hi - golden * (hi - lo);
      double x2 = lo + golden * (hi - lo);
      double f1 = slack(piece, x1);
      double f2 = slack(piece, x2);
      while (hi - lo > tol) {
        if (f1 > 0.0) return piece.at(x1);
        if (f2 > 0.0) return piece.at(x2);
        if (f1 < f2) {
          lo = x1;
          x1 = x2;
          f1 = f2;
          x2 = lo + golden * (hi - lo);
          f2 = slack(piece, x2);
        } else {
          hi = x2;
          x2 = x1;
          f2 = f1;
          x1 = hi - golden * (hi - lo);
          f1 = slack(piece, x1);
        }
      }
      if (f1 > 0.0) return piece.at(x1);
      if (f2 > 0.0) return piece.at(x2);
    }
  }
  return std::nullopt;
}

bool is_extreme(const Point& p, TileIndex tile, int tau, std::span<const Point> tile_points,
                const Shape& shape, const Grid& grid, const ExtremeOptions& options) {
  if (grid.tile_of(p) != tile) {
    throw Error(ErrorCode::kInvalidInput, "is_extreme: point lies outside its tile");
  }
  if (tau < 1 || tau > 4) throw Error(ErrorCode::kInvalidArgument, "is_extreme: tau must be in 1..4");
  std::vector<Point> others;
  others.reserve(tile_points.size());
  for (const Point& q : tile_points) {
    if (q != p) others.push_back(q);
  }
  const Point o = quadrant_centers(grid, tile, shape)[static_cast<std::size_t>(tau - 1)];
  return extreme_witness(p, others, o, shape, options).has_value();
}

double theta(const Point& o, const Point& p) {
  if (p == o) throw Error(ErrorCode::kInvalidArgument, "theta: point coincides with apex");
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  double t = std::atan2(p.y() - o.y(), p.x() - o.x());
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

ExtremeStructure build_extreme_structure(TileIndex tile, int tau,
                                         std::span<const Point> tile_points, const Shape& shape,
                                         const Grid& grid, const ExtremeOptions& options) {
  ExtremeStructure out;
  out.tile = tile;
  out.tau = tau;
  const Point o = quadrant_centers(grid, tile, shape)[static_cast<std::size_t>(tau - 1)];

  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < tile_points.size(); ++i) {
    if (is_extreme(tile_points[i], tile, tau, tile_points, shape, grid, options)) {
      chosen.push_back(i);
    }
  }
  std::vector<double> angles(chosen.size());
  for (std::size_t i = 0; i < chosen.size(); ++i) angles[i] = theta(o, tile_points[chosen[i]]);
  std::vector<std::size_t> order(chosen.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return angles[a] < angles[b] || (angles[a] == angles[b] && chosen[a] < chosen[b]);
  });
  for (std::size_t idx : order) {
    if (!out.thetas.empty() && angles[idx] - out.thetas.back() <= 1e-12) {
      throw Error(ErrorCode::kDegenerateConfiguration,
                  "build_extreme_structure: two extreme points share a direction from o_tau");
    }
    out.points.push_back(tile_points[chosen[idx]]);
    out.thetas.push_back(angles[idx]);
    out.source.push_back(chosen[idx]);
  }
  return out;
}

}  // namespace ohs
