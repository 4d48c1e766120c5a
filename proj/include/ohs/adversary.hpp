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

// Lower-bound game. n = 2^m collinear points; for every level i in 0..m and
// j in 1..2^i a translate holding exactly the j-th block of 2^(m-i)
// consecutive points. The referee presents the root, then always descends to
// a child holding none of the responder's points.

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ohs/geometry.hpp"
#include "ohs/online.hpp"

namespace ohs {

struct CarrierLine {
  Point origin;
  Vector direction;  // unit
};

/// Carrier used when no origin is given; off every symmetry axis of the grid.
inline const Point kDefaultCarrierOrigin{0.31, 0.17};
inline constexpr double kCarrierSpan = 0.2;

struct AdversaryInstance {
  Shape shape = Shape::disk();
  int levels = 0;
  double spacing = 0.0;
  CarrierLine line;
  std::vector<Point> points;
  /// Level-major: object (i, j) sits at index 2^i - 1 + (j - 1).
  std::vector<PlacedObject> objects;

  static std::size_t object_index(int level, std::size_t j);
  /// Inclusive 0-based point range of object (level, j), j 1-based.
  std::pair<std::size_t, std::size_t> interval(int level, std::size_t j) const;
  const PlacedObject& object(int level, std::size_t j) const {
    return objects[object_index(level, j)];
  }
};

/// Carrier direction: +x for disks, the diagonal a_0 a_2 for polygons.
Vector carrier_direction(const Shape& shape);

/// A translate holding exactly points first..last of the row
/// origin + t * spacing * direction, t = 0, 1, ...; the boundary crosses the
/// carrier half a spacing beyond each end.
PlacedObject interval_object(const Shape& shape, const CarrierLine& line, double spacing,
                             std::size_t first, std::size_t last);

AdversaryInstance build_instance(const Shape& shape, int m,
                                 std::optional<Point> origin = std::nullopt);

class Responder {
 public:
  virtual ~Responder() = default;
  /// Points newly placed to hit obj; placements are irreversible.
  virtual std::vector<Point> receive(const PlacedObject& obj) = 0;
  virtual std::string name() const = 0;
};

/// Hits each unstabbed object with its lowest-index point.
class FirstPointResponder : public Responder {
 public:
  explicit FirstPointResponder(std::vector<Point> points, double tol = kDefaultTolerance);
  std::vector<Point> receive(const PlacedObject& obj) override;
  std::string name() const override { return "first-point"; }

 private:
  std::vector<Point> points_;
  std::vector<Point> placed_;
  double tol_;
};

/// Wraps the online engine.
class EngineResponder : public Responder {
 public:
  EngineResponder(std::span<const Point> points, const Shape& shape, EngineOptions options = {});
  std::vector<Point> receive(const PlacedObject& obj) override;
  std::string name() const override { return "algorithm1"; }
  const HittingState& state() const { return state_; }

 private:
  HittingState state_;
};

struct Round {
  int level = 0;
  std::size_t j = 1;
  std::size_t object_id = 0;
  std::vector<Point> placed;
};

struct GameTranscript {
  int levels = 0;
  std::vector<Round> rounds;
  /// Rounds in which the responder placed at least one point.
  int forced = 0;
  std::size_t points_placed = 0;
  /// Exact offline optimum over the presented objects.
  std::size_t opt_size = 0;
  /// Both children of the last object already held placed points.
  bool truncated = false;
  /// Round counts of the two readings of the game: m and m + 1.
  int narrated_rounds = 0;
  int stated_rounds = 0;
};

GameTranscript play(const AdversaryInstance& instance, Responder& responder,
                    double tol = kDefaultTolerance);

}  // namespace ohs
