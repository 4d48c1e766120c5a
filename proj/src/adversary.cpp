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

#include "ohs/adversary.hpp"

#include <algorithm>
#include <cmath>

#include "ohs/offline.hpp"

namespace ohs {

std::size_t AdversaryInstance::object_index(int level, std::size_t j) {
  return (std::size_t{1} << level) - 1 + (j - 1);
}

std::pair<std::size_t, std::size_t> AdversaryInstance::interval(int level, std::size_t j) const {
  const std::size_t block = std::size_t{1} << (levels - level);
  return {(j - 1) * block, j * block - 1};
}

Vector carrier_direction(const Shape& shape) {
  if (shape.is_disk()) return Vector::UnitX();
  const auto v = shape.vertices();
  return (v[2] - v[0]).normalized();
}

namespace {

// Chord of the object centered at base + h * normal on the carrier, in
// carrier coordinates relative to the center's projection.
std::pair<double, double> chord(const Shape& shape, const Vector& dir, const Vector& normal,
                                double h) {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  // carrier point relative to center: s * dir - h * normal
  for (const Vector& n : shape.normals()) {
    const double slope = n.dot(dir);
    const double limit = 1.0 + h * n.dot(normal);
    if (slope > 0) {
      hi = std::min(hi, limit / slope);
    } else if (slope < 0) {
      lo = std::max(lo, limit / slope);
    } else if (limit < 0) {
      return {0.0, -1.0};
    }
  }
  return {lo, hi};
}

}  // namespace

PlacedObject interval_object(const Shape& shape, const CarrierLine& line, double spacing,
                             std::size_t first, std::size_t last) {
  if (last < first) throw Error(ErrorCode::kInvalidArgument, "interval_object: empty interval");
  const Vector& u = line.direction;
  const Vector normal = perp<double>(u);
  const double mid = 0.5 * static_cast<double>(first + last) * spacing;
  const double half = 0.5 * static_cast<double>(last - first) * spacing + 0.5 * spacing;

  if (shape.is_disk()) {
    if (half >= 1.0) throw Error(ErrorCode::kInvalidArgument, "interval_object: interval too long");
    const Point center = line.origin + mid * u - std::sqrt(1.0 - half * half) * normal;
    return {shape, center};
  }

  // Offsets h along the normal for which the carrier meets the object form
  // [-max v.n, -min v.n]; the chord length is concave in h. Search on the far
  // side for the offset whose chord is exactly 2 * half.
  double far = 0.0;
  for (const Vector& v : shape.vertices()) far = std::max(far, -v.dot(normal));
  auto length = [&](double h) {
    const auto [a, b] = chord(shape, u, normal, h);
    return b - a;
  };
  if (length(0.0) < 2.0 * half) {
    throw Error(ErrorCode::kInvalidArgument, "interval_object: interval too long");
  }
  double lo = 0.0;
  double hi = far;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double h = 0.5 * (lo + hi);
    (length(h) >= 2.0 * half ? lo : hi) = h;
  }
  const auto [a, b] = chord(shape, u, normal, lo);
  const double s = mid - 0.5 * (a + b);
  return {shape, line.origin + s * u + lo * normal};
}

AdversaryInstance build_instance(const Shape& shape, int m, std::optional<Point> origin) {
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "build_instance: need m >= 1");
  if (m > 20) throw Error(ErrorCode::kTooLarge, "build_instance: m too large");
  AdversaryInstance inst;
  inst.shape = shape;
  inst.levels = m;
  inst.line = {origin.value_or(kDefaultCarrierOrigin), carrier_direction(shape)};
  const std::size_t n = std::size_t{1} << m;

  double spacing = kCarrierSpan / static_cast<double>(n - 1);
  for (int attempt = 0; attempt <= 20; ++attempt, spacing /= 2.0) {
    inst.spacing = spacing;
    inst.points.clear();
    inst.objects.clear();
    for (std::size_t t = 0; t < n; ++t) {
      inst.points.push_back(inst.line.origin + static_cast<double>(t) * spacing * inst.line.direction);
    }
    bool exact = true;
    for (int level = 0; level <= m && exact; ++level) {
      for (std::size_t j = 1; j <= (std::size_t{1} << level) && exact; ++j) {
        const auto [first, last] = inst.interval(level, j);
        PlacedObject obj = interval_object(shape, inst.line, spacing, first, last);
        for (std::size_t t = 0; t < n; ++t) {
          if (contains(obj, inst.points[t]) != (t >= first && t <= last)) {
            exact = false;
            break;
          }
        }
        inst.objects.push_back(std::move(obj));
      }
    }
    if (exact) return inst;
  }
  throw Error(ErrorCode::kInvalidInput, "build_instance: could not realize every interval exactly");
}

FirstPointResponder::FirstPointResponder(std::vector<Point> points, double tol)
    : points_(std::move(points)), tol_(tol) {}

std::vector<Point> FirstPointResponder::receive(const PlacedObject& obj) {
  for (const Point& h : placed_) {
    if (contains(obj, h, tol_)) return {};
  }
  for (const Point& p : points_) {
    if (contains(obj, p, tol_)) {
      placed_.push_back(p);
      return {p};
    }
  }
  return {};
}

EngineResponder::EngineResponder(std::span<const Point> points, const Shape& shape,
                                 EngineOptions options)
    : state_(points, shape, options) {}

std::vector<Point> EngineResponder::receive(const PlacedObject& obj) {
  std::vector<Point> out;
  for (const Placement& p : state_.process(obj).placements) out.push_back(p.point);
  return out;
}

GameTranscript play(const AdversaryInstance& instance, Responder& responder, double tol) {
  GameTranscript t;
  t.levels = instance.levels;
  t.narrated_rounds = instance.levels;
  t.stated_rounds = instance.levels + 1;

  std::vector<Point> placed;
  std::vector<PlacedObject> presented;
  auto present = [&](int level, std::size_t j) {
    const std::size_t id = AdversaryInstance::object_index(level, j);
    const PlacedObject& obj = instance.objects[id];
    Round round{level, j, id, responder.receive(obj)};
    for (const Point& p : round.placed) {
      if (std::find(instance.points.begin(), instance.points.end(), p) == instance.points.end()) {
        throw Error(ErrorCode::kProtocolViolation,
                    "play: responder " + responder.name() + " placed a point outside the instance");
      }
      placed.push_back(p);
    }
    if (!round.placed.empty()) ++t.forced;
    t.points_placed += round.placed.size();
    presented.push_back(obj);
    t.rounds.push_back(std::move(round));
  };
  auto untouched = [&](const PlacedObject& obj) {
    return std::none_of(placed.begin(), placed.end(),
                        [&](const Point& h) { return contains(obj, h, tol); });
  };

  std::size_t j = 1;
  present(0, j);
  for (int level = 1; level <= instance.levels; ++level) {
    const std::size_t left = 2 * j - 1;
    const std::size_t right = 2 * j;
    if (untouched(instance.object(level, left))) {
      j = left;
    } else if (untouched(instance.object(level, right))) {
      j = right;
    } else {
      t.truncated = true;
      break;
    }
    present(level, j);
  }

  t.opt_size = exact_min_hitting_set(to_set_system(instance.points, presented, tol)).size();
  return t;
}

}  // namespace ohs
