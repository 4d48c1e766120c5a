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

// Unit disks and regular unit k-gons (inradius 1), the convex distance they
// induce, point reflection, and boundary/boundary intersection structure.
//
// Everything here is templated on the scalar type; the rest of the library
// instantiates it with double through the aliases at the bottom.

#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ohs/error.hpp"

namespace ohs {

template <typename Scalar>
using Vector2 = Eigen::Matrix<Scalar, 2, 1>;

template <typename Scalar>
using Box2 = Eigen::AlignedBox<Scalar, 2>;

/// Slack used for membership in closed objects.
inline constexpr double kDefaultTolerance = 1e-9;

template <typename Scalar>
inline Scalar cross(const Vector2<Scalar>& a, const Vector2<Scalar>& b) {
  return a.x() * b.y() - a.y() * b.x();
}

/// Counterclockwise quarter turn.
template <typename Scalar>
inline Vector2<Scalar> perp(const Vector2<Scalar>& v) {
  return Vector2<Scalar>(-v.y(), v.x());
}

template <typename Scalar>
struct PolygonParams {
  Scalar circumradius;
  Scalar side;
  std::vector<Vector2<Scalar>> vertices;
};

/// Regular k-gon with inradius 1 in canonical orientation: bottom edge
/// horizontal, vertices counterclockwise starting at the bottom-left corner.
template <typename Scalar>
PolygonParams<Scalar> polygon_params(int k) {
  if (k < 4) {
    throw Error(ErrorCode::kInvalidShape,
                "regular polygon needs k >= 4, got " + std::to_string(k));
  }
  using std::cos;
  using std::sin;
  const Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar half = pi / Scalar(k);
  PolygonParams<Scalar> out;
  out.circumradius = Scalar(1) / cos(half);
  out.side = Scalar(2) * out.circumradius * sin(half);
  out.vertices.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    if (k % 2 == 0 && i >= k / 2) {
      // Exact central symmetry for even k.
      out.vertices.push_back(-out.vertices[static_cast<std::size_t>(i - k / 2)]);
      continue;
    }
    const Scalar a = -pi / Scalar(2) - half + Scalar(2) * pi * Scalar(i) / Scalar(k);
    out.vertices.emplace_back(out.circumradius * cos(a), out.circumradius * sin(a));
  }
  return out;
}

enum class ShapeKind { kDisk, kPolygon };

/// The generator object. Copies share their vertex tables.
template <typename Scalar>
class BasicShape {
 public:
  using Vec = Vector2<Scalar>;

  static BasicShape disk() { return BasicShape(ShapeKind::kDisk, 0, false); }
  static BasicShape polygon(int k) { return BasicShape(ShapeKind::kPolygon, k, false); }

  ShapeKind kind() const { return kind_; }
  bool is_disk() const { return kind_ == ShapeKind::kDisk; }
  /// Number of sides; 0 for the disk.
  int sides() const { return sides_; }
  /// True for the point reflection of an odd polygon (flat top).
  bool reflected() const { return reflected_; }

  Scalar inradius() const { return Scalar(1); }
  Scalar circumradius() const { return is_disk() ? Scalar(1) : tables_->circumradius; }
  std::optional<Scalar> side_length() const {
    if (is_disk()) return std::nullopt;
    return tables_->side;
  }

  /// Vertex offsets from the center, counterclockwise. Empty for the disk.
  std::span<const Vec> vertices() const {
    if (is_disk()) return {};
    return tables_->vertices;
  }
  /// normals()[i] is the outward unit normal of edge (vertices()[i], vertices()[i+1]).
  std::span<const Vec> normals() const {
    if (is_disk()) return {};
    return tables_->normals;
  }

  /// Smallest lambda >= 0 with v inside lambda * shape.
  Scalar gauge(const Vec& v) const {
    if (is_disk()) return v.norm();
    Scalar g(0);
    for (const Vec& n : tables_->normals) g = std::max(g, n.dot(v));
    return g;
  }

  /// Point reflection through the center. Disks and even polygons are
  /// centrally symmetric and come back unchanged.
  BasicShape reflect() const {
    if (is_disk() || sides_ % 2 == 0) return *this;
    return BasicShape(kind_, sides_, !reflected_);
  }

  Box2<Scalar> bounds() const {
    Box2<Scalar> box;
    if (is_disk()) {
      box.extend(Vec(-1, -1));
      box.extend(Vec(1, 1));
    } else {
      for (const Vec& v : tables_->vertices) box.extend(v);
    }
    return box;
  }

  friend bool operator==(const BasicShape& a, const BasicShape& b) {
    return a.kind_ == b.kind_ && a.sides_ == b.sides_ && a.reflected_ == b.reflected_;
  }

 private:
  struct Tables {
    Scalar circumradius;
    Scalar side;
    std::vector<Vec> vertices;
    std::vector<Vec> normals;
  };

  BasicShape(ShapeKind kind, int sides, bool reflected)
      : kind_(kind), sides_(sides), reflected_(reflected) {
    if (kind_ == ShapeKind::kDisk) return;
    auto params = polygon_params<Scalar>(sides_);
    auto tables = std::make_shared<Tables>();
    tables->circumradius = params.circumradius;
    tables->side = params.side;
    tables->vertices = std::move(params.vertices);
    const Scalar pi = std::numbers::pi_v<Scalar>;
    for (int i = 0; i < sides_; ++i) {
      if (sides_ % 2 == 0 && i >= sides_ / 2) {
        tables->normals.push_back(-tables->normals[static_cast<std::size_t>(i - sides_ / 2)]);
        continue;
      }
      const Scalar a = -pi / Scalar(2) + Scalar(2) * pi * Scalar(i) / Scalar(sides_);
      tables->normals.emplace_back(std::cos(a), std::sin(a));
    }
    if (reflected_) {
      for (Vec& v : tables->vertices) v = -v;
      for (Vec& n : tables->normals) n = -n;
    }
    tables_ = std::move(tables);
  }

  ShapeKind kind_;
  int sides_;
  bool reflected_;
  std::shared_ptr<const Tables> tables_;
};

/// Distance from the center to the boundary along `direction`.
template <typename Scalar>
Scalar support_radius(const BasicShape<Scalar>& shape, const Vector2<Scalar>& direction) {
  const Scalar len = direction.norm();
  if (!(len > Scalar(0))) {
    throw Error(ErrorCode::kInvalidArgument, "support_radius: zero direction");
  }
  return len / shape.gauge(direction);
}

/// d_shape(from, to): the scale at which the shape centered at `from` first
/// reaches `to`. Not symmetric unless the shape is centrally symmetric.
template <typename Scalar>
Scalar convex_distance(const BasicShape<Scalar>& shape, const Vector2<Scalar>& from,
                       const Vector2<Scalar>& to) {
  return shape.gauge(to - from);
}

template <typename Scalar>
BasicShape<Scalar> reflect(const BasicShape<Scalar>& shape) {
  return shape.reflect();
}

/// A translate of the generator.
template <typename Scalar>
struct BasicPlacedObject {
  BasicShape<Scalar> shape;
  Vector2<Scalar> center;

  std::vector<Vector2<Scalar>> corners() const {
    std::vector<Vector2<Scalar>> out;
    for (const auto& v : shape.vertices()) out.push_back(center + v);
    return out;
  }

  Box2<Scalar> bounds() const {
    Box2<Scalar> box = shape.bounds();
    return box.translate(center);
  }
};

template <typename Scalar>
bool contains(const BasicPlacedObject<Scalar>& obj, const Vector2<Scalar>& p,
              Scalar tol = Scalar(kDefaultTolerance)) {
  return convex_distance(obj.shape, obj.center, p) <= Scalar(1) + tol;
}

template <typename Scalar>
struct BoundaryComponents {
  int count = 0;
  /// One point per component; the midpoint when the component is a shared edge.
  std::vector<Vector2<Scalar>> representatives;
};

namespace detail {

template <typename Scalar>
struct Piece {
  Vector2<Scalar> a;
  Vector2<Scalar> b;
  bool segment = false;
};

template <typename Scalar>
std::optional<Piece<Scalar>> intersect_segments(const Vector2<Scalar>& p0,
                                                 const Vector2<Scalar>& p1,
                                                 const Vector2<Scalar>& q0,
                                                 const Vector2<Scalar>& q1, Scalar tol) {
  using std::abs;
  const Vector2<Scalar> r = p1 - p0;
  const Vector2<Scalar> w = q1 - q0;
  const Vector2<Scalar> qp = q0 - p0;
  const Scalar rr = r.norm();
  const Scalar ww = w.norm();
  const Scalar denom = cross(r, w);
  if (abs(denom) <= tol * rr * ww) {
    if (abs(cross(qp, r)) > tol * rr) return std::nullopt;
    Scalar t0 = qp.dot(r) / (rr * rr);
    Scalar t1 = (q1 - p0).dot(r) / (rr * rr);
    if (t0 > t1) std::swap(t0, t1);
    const Scalar lo = std::max(Scalar(0), t0);
    const Scalar hi = std::min(Scalar(1), t1);
    if (hi < lo - tol / rr) return std::nullopt;
    const Vector2<Scalar> a = p0 + lo * r;
    const Vector2<Scalar> b = p0 + std::max(lo, hi) * r;
    if ((b - a).norm() <= tol) {
      const Vector2<Scalar> m = (a + b) / Scalar(2);
      return Piece<Scalar>{m, m, false};
    }
    return Piece<Scalar>{a, b, true};
  }
  Scalar s = cross(qp, w) / denom;
  const Scalar u = cross(qp, r) / denom;
  const Scalar es = tol / rr;
  const Scalar eu = tol / ww;
  if (s < -es || s > Scalar(1) + es || u < -eu || u > Scalar(1) + eu) return std::nullopt;
  s = std::clamp(s, Scalar(0), Scalar(1));
  const Vector2<Scalar> x = p0 + s * r;
  return Piece<Scalar>{x, x, false};
}

template <typename Scalar>
Scalar point_segment_distance(const Vector2<Scalar>& x, const Vector2<Scalar>& a,
                              const Vector2<Scalar>& b) {
  const Vector2<Scalar> ab = b - a;
  const Scalar len2 = ab.squaredNorm();
  if (len2 == Scalar(0)) return (x - a).norm();
  const Scalar t = std::clamp((x - a).dot(ab) / len2, Scalar(0), Scalar(1));
  return (x - (a + t * ab)).norm();
}

template <typename Scalar>
Scalar piece_distance(const Piece<Scalar>& p, const Piece<Scalar>& q) {
  return std::min({point_segment_distance(p.a, q.a, q.b), point_segment_distance(p.b, q.a, q.b),
                   point_segment_distance(q.a, p.a, p.b), point_segment_distance(q.b, p.a, p.b)});
}

}  // namespace detail

/// Connected components of the intersection of the two boundaries. Pieces
/// closer than 1e-9 are merged into one component.
template <typename Scalar>
BoundaryComponents<Scalar> boundary_components(const BasicPlacedObject<Scalar>& a,
                                               const BasicPlacedObject<Scalar>& b,
                                               Scalar tol = Scalar(kDefaultTolerance)) {
  if (!(a.shape == b.shape)) {
    throw Error(ErrorCode::kInvalidArgument, "boundary_components: objects differ in shape");
  }
  const Vector2<Scalar> d = b.center - a.center;
  const Scalar dist = d.norm();
  if (dist <= tol) {
    throw Error(ErrorCode::kDegeneratePair, "boundary_components: identical centers");
  }

  BoundaryComponents<Scalar> out;
  if (a.shape.is_disk()) {
    if (dist > Scalar(2) + tol) return out;
    const Vector2<Scalar> mid = a.center + d / Scalar(2);
    if (dist >= Scalar(2) - tol) {
      out.count = 1;
      out.representatives.push_back(mid);
      return out;
    }
    const Scalar half = dist / Scalar(2);
    const Vector2<Scalar> offset = perp<Scalar>(d / dist) * std::sqrt(Scalar(1) - half * half);
    out.count = 2;
    out.representatives = {mid + offset, mid - offset};
    return out;
  }

  const auto pa = a.corners();
  const auto pb = b.corners();
  const std::size_t k = pa.size();
  std::vector<detail::Piece<Scalar>> pieces;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (auto piece = detail::intersect_segments(pa[i], pa[(i + 1) % k], pb[j],
                                                  pb[(j + 1) % k], tol)) {
        pieces.push_back(*piece);
      }
    }
  }

  std::vector<std::size_t> parent(pieces.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const Scalar merge = Scalar(kDefaultTolerance);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      if (detail::piece_distance(pieces[i], pieces[j]) <= merge) parent[find(i)] = find(j);
    }
  }

  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const std::size_t r = find(i);
    if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
  }
  out.count = static_cast<int>(roots.size());
  for (std::size_t r : roots) {
    std::optional<std::size_t> best_segment;
    std::optional<std::size_t> first_point;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (find(i) != r) continue;
      if (pieces[i].segment) {
        if (!best_segment || (pieces[i].b - pieces[i].a).norm() >
                                 (pieces[*best_segment].b - pieces[*best_segment].a).norm()) {
          best_segment = i;
        }
      } else if (!first_point) {
        first_point = i;
      }
    }
    if (best_segment) {
      out.representatives.push_back((pieces[*best_segment].a + pieces[*best_segment].b) /
                                    Scalar(2));
    } else {
      out.representatives.push_back(pieces[*first_point].a);
    }
  }
  return out;
}

using Point = Vector2<double>;
using Vector = Vector2<double>;
using Box = Box2<double>;
using Shape = BasicShape<double>;
using PlacedObject = BasicPlacedObject<double>;

}  // namespace ohs
