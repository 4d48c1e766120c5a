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

#include "ohs/render.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace ohs {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s(buf);
  if (s == "-0.000") s = "0.000";
  return s;
}

class Canvas {
 public:
  Canvas(const Box& view, double scale) : view_(view), scale_(scale) {}

  double x(double wx) const { return (wx - view_.min().x()) * scale_; }
  double y(double wy) const { return (view_.max().y() - wy) * scale_; }
  double width() const { return view_.sizes().x() * scale_; }
  double height() const { return view_.sizes().y() * scale_; }
  double scale() const { return scale_; }

  std::string pt(const Point& p) const { return num(x(p.x())) + "," + num(y(p.y())); }

 private:
  Box view_;
  double scale_;
};

void polygon(std::ostream& out, const Canvas& cv, std::span<const Point> pts,
             const char* style) {
  out << "<polygon points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) out << (i ? " " : "") << cv.pt(pts[i]);
  out << "\" " << style << "/>\n";
}

void circle(std::ostream& out, const Canvas& cv, const Point& c, double r_px, const char* style) {
  out << "<circle cx=\"" << num(cv.x(c.x())) << "\" cy=\"" << num(cv.y(c.y())) << "\" r=\""
      << num(r_px) << "\" " << style << "/>\n";
}

void object(std::ostream& out, const Canvas& cv, const PlacedObject& obj, const char* style) {
  if (obj.shape.is_disk()) {
    circle(out, cv, obj.center, cv.scale(), style);
    return;
  }
  const auto corners = obj.corners();
  polygon(out, cv, corners, style);
}

}  // namespace

std::string render_svg(const Instance& instance, std::span<const PlacedObject> stream,
                       const RenderOptions& options) {
  HittingState state(instance.points, instance.shape, options.engine);
  for (const PlacedObject& obj : stream) state.process(obj);

  Box view;
  for (const Point& p : state.points()) view.extend(p);
  for (const PlacedObject& obj : stream) view.extend(obj.bounds());
  if (options.show_tiles || options.show_cones) {
    for (const auto& [key, slot] : state.slots()) {
      view.extend(super_square(state.grid(), key.first, instance.shape).center);
      for (const Point& o : quadrant_centers(state.grid(), key.first, instance.shape)) view.extend(o);
    }
  }
  view.min().array() -= options.margin;
  view.max().array() += options.margin;
  const Canvas cv(view, options.scale);
  const Grid& grid = state.grid();

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(cv.width())
      << "\" height=\"" << num(cv.height()) << "\" viewBox=\"0 0 " << num(cv.width()) << " "
      << num(cv.height()) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  out << "<g id=\"grid\" stroke=\"#cccccc\" stroke-width=\"0.5\">\n";
  const double side = grid.tile_side();
  const TileIndex lo = grid.tile_of(view.min());
  const TileIndex hi = grid.tile_of(view.max());
  for (std::int64_t i = lo.i; i <= hi.i + 1; ++i) {
    const double gx = grid.offset().x() + side * static_cast<double>(i);
    out << "<line x1=\"" << num(cv.x(gx)) << "\" y1=\"0.000\" x2=\"" << num(cv.x(gx))
        << "\" y2=\"" << num(cv.height()) << "\"/>\n";
  }
  for (std::int64_t j = lo.j; j <= hi.j + 1; ++j) {
    const double gy = grid.offset().y() + side * static_cast<double>(j);
    out << "<line x1=\"0.000\" y1=\"" << num(cv.y(gy)) << "\" x2=\"" << num(cv.width())
        << "\" y2=\"" << num(cv.y(gy)) << "\"/>\n";
  }
  out << "</g>\n";

  if (options.show_tiles) {
    std::set<TileIndex> tiles;
    for (const auto& [key, slot] : state.slots()) tiles.insert(key.first);
    out << "<g id=\"tiles\">\n";
    for (const TileIndex& t : tiles) {
      const SuperSquare sq = super_square(grid, t, instance.shape);
      const double h = sq.side / 2.0;
      const std::array<Point, 4> corners = {sq.center + Point(-h, -h), sq.center + Point(h, -h),
                                            sq.center + Point(h, h), sq.center + Point(-h, h)};
      polygon(out, cv, corners, "fill=\"none\" stroke=\"#9999ff\" stroke-dasharray=\"4 3\"");
      const Box box = grid.tile_box(t);
      const std::array<Point, 4> tile = {box.corner(Box::BottomLeft), box.corner(Box::BottomRight),
                                         box.corner(Box::TopRight), box.corner(Box::TopLeft)};
      polygon(out, cv, tile, "fill=\"#eef\" stroke=\"#6666cc\"");
      for (const Point& o : sq.quadrant_centers) circle(out, cv, o, 3.0, "fill=\"#6666cc\"");
    }
    out << "</g>\n";
  }

  if (options.show_cones) {
    out << "<g id=\"cones\" fill=\"#ffcc66\" fill-opacity=\"0.25\" stroke=\"#cc9933\">\n";
    for (const auto& [key, slot] : state.slots()) {
      const Cone cone = cone_of(grid, key.first, key.second, instance.shape);
      const double reach = 2.0 * super_square(grid, key.first, instance.shape).side;
      const std::array<Point, 3> tri = {cone.apex, cone.apex + reach * cone.lower_ray,
                                        cone.apex + reach * cone.upper_ray};
      polygon(out, cv, tri, "");
    }
    out << "</g>\n";
  }

  if (!stream.empty()) {
    out << "<g id=\"objects\" fill=\"none\" stroke=\"#888888\">\n";
    for (const PlacedObject& obj : stream) object(out, cv, obj, "");
    out << "</g>\n";
  }

  out << "<g id=\"points\" fill=\"black\">\n";
  for (const Point& p : state.points()) circle(out, cv, p, 2.0, "");
  out << "</g>\n";

  if (options.show_extreme) {
    out << "<g id=\"extreme\" fill=\"none\" stroke=\"#cc3333\">\n";
    for (const auto& [key, slot] : state.slots()) {
      for (const Point& p : slot.structure.points) circle(out, cv, p, 4.0, "");
    }
    out << "</g>\n";
  }

  if (options.show_hits) {
    out << "<g id=\"hits\" fill=\"#22aa22\">\n";
    for (std::size_t id : state.solution_ids()) circle(out, cv, state.points()[id], 3.5, "");
    out << "</g>\n";
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace ohs
