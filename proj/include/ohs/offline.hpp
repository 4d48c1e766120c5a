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

// Offline minimum hitting set on the abstract range space induced by a point
// set and a family of placed objects. Exact branch-and-bound at desk scale,
// plus the greedy baseline.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ohs/geometry.hpp"

namespace ohs {

inline constexpr std::size_t kMaxExactSets = 64;
inline constexpr std::size_t kMaxExactUniverse = 128;

struct SetSystem {
  std::size_t universe_size = 0;
  /// Distinct nonempty sets of point ids, each sorted ascending.
  std::vector<std::vector<std::size_t>> sets;
  /// How many input ranges collapsed onto sets[i].
  std::vector<std::size_t> multiplicity;
  /// Per input range: index into sets, or empty when the range holds no point.
  std::vector<std::optional<std::size_t>> range_to_set;
  /// Input ranges that hold no point.
  std::vector<std::size_t> infeasible;

  bool has_infeasible() const { return !infeasible.empty(); }
  /// Same system with the infeasible flags cleared.
  SetSystem without_infeasible() const;
};

/// Builds a set system from abstract ranges; empty ranges are flagged.
SetSystem make_set_system(std::size_t universe_size,
                          const std::vector<std::vector<std::size_t>>& ranges);

/// sets[i] = ids of points inside objects[i].
SetSystem to_set_system(std::span<const Point> points, std::span<const PlacedObject> objects,
                        double tol = kDefaultTolerance);

bool hits_all(const SetSystem& system, std::span<const std::size_t> chosen);

/// Minimum-cardinality hitting set, ids ascending. Throws kTooLarge beyond
/// kMaxExactSets distinct sets or kMaxExactUniverse points, kInfeasible when
/// a range is empty.
std::vector<std::size_t> exact_min_hitting_set(const SetSystem& system);

/// Repeatedly takes the point in the most unhit sets (lowest id on ties).
std::vector<std::size_t> greedy_hitting_set(const SetSystem& system);

}  // namespace ohs
