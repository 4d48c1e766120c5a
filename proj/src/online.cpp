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

#include "ohs/online.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>

namespace ohs {

const char* to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::kAlreadyStabbed: return "already-stabbed";
    case Outcome::kAdded: return "added";
    case Outcome::kInfeasible: return "infeasible";
  }
  return "unknown";
}

namespace {

std::vector<Point> dedup(std::span<const Point> points, std::vector<std::string>& warnings) {
  std::vector<Point> out;
  std::set<std::pair<double, double>> seen;
  for (const Point& p : points) {
    if (!p.allFinite()) throw Error(ErrorCode::kInvalidInput, "point set: non-finite coordinate");
    if (seen.emplace(p.x(), p.y()).second) {
      out.push_back(p);
    } else {
      std::ostringstream msg;
      msg.precision(17);
      msg << "duplicate point (" << p.x() << ", " << p.y() << ") dropped";
      warnings.push_back(msg.str());
    }
  }
  return out;
}

}  // namespace

HittingState::HittingState(std::span<const Point> points, Shape shape, EngineOptions options)
    : shape_(std::move(shape)),
      options_(options),
      warnings_(),
      points_(dedup(points, warnings_)),
      grid_(build_grid(points_, shape_)) {
  if (points_.empty()) throw Error(ErrorCode::kInvalidInput, "point set is empty");
  for (std::size_t id = 0; id < points_.size(); ++id) {
    tiles_[grid_.tile_of(points_[id])].push_back(id);
  }
}

bool HittingState::is_stabbed(const PlacedObject& obj) const {
  return std::any_of(hits_.begin(), hits_.end(),
                     [&](std::size_t id) { return contains(obj, points_[id], options_.tol); });
}

std::span<const std::size_t> HittingState::tile_point_ids(TileIndex tile) const {
  const auto it = tiles_.find(tile);
  if (it == tiles_.end()) return {};
  return it->second;
}

const HittingState::Slot& HittingState::slot(TileIndex tile, int tau) {
  const auto key = std::make_pair(tile, tau);
  if (auto it = slots_.find(key); it != slots_.end()) return it->second;

  const auto ids = tile_point_ids(tile);
  std::vector<Point> tile_points;
  tile_points.reserve(ids.size());
  for (std::size_t id : ids) tile_points.push_back(points_[id]);

  Slot slot;
  slot.structure = build_extreme_structure(tile, tau, tile_points, shape_, grid_, options_.extreme);
  slot.ranking = ruler_ranking(slot.structure.size());
  for (std::size_t pos : slot.structure.source) slot.ids.push_back(ids[pos]);
  return slots_.emplace(key, std::move(slot)).first->second;
}

const Decision& HittingState::process(const PlacedObject& obj) {
  if (!(obj.shape == shape_)) {
    throw Error(ErrorCode::kInvalidArgument, "process: object is not a translate of the state's shape");
  }
  Decision decision;
  decision.index = log_.size();
  decision.center = obj.center;

  if (is_stabbed(obj)) {
    decision.outcome = Outcome::kAlreadyStabbed;
    log_.push_back(std::move(decision));
    return log_.back();
  }

  // Points of the object grouped by tile, tiles in lexicographic order.
  Box bounds = obj.bounds();
  bounds.min().array() -= options_.tol;
  bounds.max().array() += options_.tol;
  const TileIndex lo = grid_.tile_of(bounds.min());
  const TileIndex hi = grid_.tile_of(bounds.max());
  std::vector<std::pair<TileIndex, std::vector<std::size_t>>> groups;
  for (std::int64_t i = lo.i; i <= hi.i; ++i) {
    for (std::int64_t j = lo.j; j <= hi.j; ++j) {
      std::vector<std::size_t> members;
      for (std::size_t id : tile_point_ids({i, j})) {
        if (contains(obj, points_[id], options_.tol)) members.push_back(id);
      }
      if (!members.empty()) groups.emplace_back(TileIndex{i, j}, std::move(members));
    }
  }
  if (groups.empty()) {
    decision.outcome = Outcome::kInfeasible;
    log_.push_back(std::move(decision));
    return log_.back();
  }

  decision.outcome = Outcome::kAdded;
  for (auto& [tile, members] : groups) {
    const int tau = tau_of(grid_, tile, obj, options_.tol);
    slot(tile, tau);
    Slot& s = slots_.at({tile, tau});

    std::vector<std::size_t> inside;
    for (std::size_t pos = 0; pos < s.structure.size(); ++pos) {
      if (contains(obj, s.structure.points[pos], options_.tol)) inside.push_back(pos);
    }
    if (inside.empty()) {
      throw Error(ErrorCode::kBrokenInvariant,
                  "process: object holds tile points but no extreme point of its type");
    }

    Placement placement;
    placement.tile = tile;
    placement.tau = tau;
    placement.tile_members = std::move(members);
    placement.first = inside.front();
    placement.last = inside.back();
    placement.contiguous = inside.back() - inside.front() + 1 == inside.size();

    MaxColor best{inside.front(), s.ranking.colors[inside.front()]};
    if (placement.contiguous) {
      best = max_color_in_interval(s.ranking, placement.first, placement.last);
    } else {
      for (std::size_t pos : inside) {
        if (s.ranking.colors[pos] > best.color) best = {pos, s.ranking.colors[pos]};
      }
    }
    placement.point_id = s.ids[best.position];
    placement.point = points_[placement.point_id];
    placement.color = best.color;
    s.placed_colors.insert(best.color);
    hits_.push_back(placement.point_id);
    decision.placements.push_back(std::move(placement));
  }
  log_.push_back(std::move(decision));
  return log_.back();
}

std::vector<Point> HittingState::solution() const {
  std::vector<Point> out;
  out.reserve(hits_.size());
  for (std::size_t id : hits_) out.push_back(points_[id]);
  return out;
}

long long competitive_bound(const Shape& shape, std::size_t n) {
  const auto two_n = static_cast<std::uint64_t>(2 * std::max<std::size_t>(n, 1));
  const int floor_log = std::bit_width(two_n) - 1;
  return 4LL * tiling_params(shape).max_tiles * floor_log;
}

}  // namespace ohs
