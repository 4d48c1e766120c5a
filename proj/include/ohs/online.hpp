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

// Online hitting set engine. Only the point set is known up front; objects
// arrive one at a time and every chosen point stays chosen.
//
// On an unstabbed arrival the engine visits each tile holding points of the
// object, finds the object's type tau for that tile, and adds the
// highest-ranked extreme point of (tile, tau) that the object contains.

#pragma once

#include <map>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ohs/extreme.hpp"
#include "ohs/geometry.hpp"
#include "ohs/ranking.hpp"
#include "ohs/tiling.hpp"

namespace ohs {

enum class Outcome { kAlreadyStabbed, kAdded, kInfeasible };

const char* to_string(Outcome outcome);

struct Placement {
  TileIndex tile;
  int tau = 1;
  std::size_t point_id = 0;
  Point point;
  int color = 0;
  /// Ids of the tile's points that lie in the object.
  std::vector<std::size_t> tile_members;
  /// Range of theta positions of the extreme points inside the object.
  std::size_t first = 0;
  std::size_t last = 0;
  bool contiguous = true;
};

struct Decision {
  std::size_t index = 0;
  Point center;
  Outcome outcome = Outcome::kAlreadyStabbed;
  std::vector<Placement> placements;
};

struct EngineOptions {
  double tol = kDefaultTolerance;
  ExtremeOptions extreme;
};

class HittingState {
 public:
  /// Per (tile, tau) data, built the first time an object touches it.
  struct Slot {
    ExtremeStructure structure;
    Ranking ranking;
    /// Global point id of each structure vertex.
    std::vector<std::size_t> ids;
    std::set<int> placed_colors;
  };

  HittingState(std::span<const Point> points, Shape shape, EngineOptions options = {});

  const Shape& shape() const { return shape_; }
  const Grid& grid() const { return grid_; }
  /// Deduplicated point set; ids index into it.
  std::span<const Point> points() const { return points_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  const EngineOptions& options() const { return options_; }

  bool is_stabbed(const PlacedObject& obj) const;
  const Decision& process(const PlacedObject& obj);

  /// Chosen points in insertion order.
  std::vector<Point> solution() const;
  std::span<const std::size_t> solution_ids() const { return hits_; }
  const std::vector<Decision>& log() const { return log_; }

  const Slot& slot(TileIndex tile, int tau);
  std::span<const std::size_t> tile_point_ids(TileIndex tile) const;
  /// Slots built so far.
  const std::map<std::pair<TileIndex, int>, Slot>& slots() const { return slots_; }

 private:
  Shape shape_;
  EngineOptions options_;
  std::vector<std::string> warnings_;
  std::vector<Point> points_;
  Grid grid_;
  std::unordered_map<TileIndex, std::vector<std::size_t>, TileIndexHash> tiles_;
  std::map<std::pair<TileIndex, int>, Slot> slots_;
  std::vector<std::size_t> hits_;
  std::vector<Decision> log_;
};

/// Competitive-ratio constant 4 * m_sigma * floor(log2(2n)).
long long competitive_bound(const Shape& shape, std::size_t n);

}  // namespace ohs
