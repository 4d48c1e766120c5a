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

#include "ohs/io.hpp"

#include <fstream>
#include <sstream>

namespace ohs {

namespace {

Error parse_error(const std::string& what) { return Error(ErrorCode::kParse, what); }

Point point_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw parse_error(where + ": expected [x, y]");
  }
  Point p(j[0].get<double>(), j[1].get<double>());
  if (!p.allFinite()) throw parse_error(where + ": non-finite coordinate");
  return p;
}

}  // namespace

Json to_json(const Shape& shape) {
  Json j;
  if (shape.is_disk()) {
    j["kind"] = "disk";
    return j;
  }
  j["kind"] = "kgon";
  j["k"] = shape.sides();
  if (shape.reflected()) j["reflected"] = true;
  return j;
}

Shape shape_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw parse_error("shape: expected {\"kind\": ...}");
  }
  const auto kind = j["kind"].get<std::string>();
  if (kind == "disk") return Shape::disk();
  if (kind != "kgon") throw parse_error("shape: unknown kind '" + kind + "'");
  if (!j.contains("k") || !j["k"].is_number_integer()) throw parse_error("shape: kgon needs integer k");
  Shape shape = Shape::polygon(j["k"].get<int>());
  if (j.contains("reflected") && j["reflected"].is_boolean() && j["reflected"].get<bool>()) {
    shape = shape.reflect();
  }
  return shape;
}

Json to_json(const Point& p) { return Json::array({p.x(), p.y()}); }

std::string format_instance(const Instance& instance) {
  Json j;
  j["shape"] = to_json(instance.shape);
  j["points"] = Json::array();
  for (const Point& p : instance.points) j["points"].push_back(to_json(p));
  return j.dump() + "\n";
}

Instance parse_instance(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw parse_error(std::string("instance: ") + e.what());
  }
  if (!j.is_object() || !j.contains("shape") || !j.contains("points") || !j["points"].is_array()) {
    throw parse_error("instance: expected {\"shape\": ..., \"points\": [...]}");
  }
  Instance out;
  out.shape = shape_from_json(j["shape"]);
  for (std::size_t i = 0; i < j["points"].size(); ++i) {
    out.points.push_back(point_from_json(j["points"][i], "instance point " + std::to_string(i)));
  }
  return out;
}

std::string format_stream(std::span<const PlacedObject> objects) {
  std::string out;
  for (const PlacedObject& obj : objects) {
    Json j;
    j["center"] = to_json(obj.center);
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::vector<PlacedObject> parse_stream(std::istream& in, const Shape& shape) {
  std::vector<PlacedObject> out;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = "stream line " + std::to_string(number);
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw parse_error(where + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("center")) throw parse_error(where + ": expected {\"center\": [x, y]}");
    out.push_back({shape, point_from_json(j["center"], where)});
  }
  return out;
}

std::vector<PlacedObject> parse_stream(std::string_view text, const Shape& shape) {
  std::istringstream in{std::string(text)};
  return parse_stream(in, shape);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path.string());
  out << contents;
}

Instance read_instance(const std::filesystem::path& path) { return parse_instance(read_file(path)); }

std::vector<PlacedObject> read_stream(const std::filesystem::path& path, const Shape& shape) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open " + path.string());
  return parse_stream(in, shape);
}

}  // namespace ohs
