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

// File formats.
//
//   instance  {"shape": {"kind": "disk"} | {"kind": "kgon", "k": K}, "points": [[x, y], ...]}
//   stream    one JSON object per line: {"center": [x, y]}
//
// A reflected odd polygon (produced by dualization) carries "reflected": true.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ohs/geometry.hpp"

namespace ohs {

using Json = nlohmann::ordered_json;

struct Instance {
  Shape shape = Shape::disk();
  std::vector<Point> points;
};

Json to_json(const Shape& shape);
Shape shape_from_json(const Json& j);
Json to_json(const Point& p);

std::string format_instance(const Instance& instance);
Instance parse_instance(std::string_view text);

/// Each object on its own line, newline terminated.
std::string format_stream(std::span<const PlacedObject> objects);
/// Blank lines are skipped; errors name the 1-based line number.
std::vector<PlacedObject> parse_stream(std::istream& in, const Shape& shape);
std::vector<PlacedObject> parse_stream(std::string_view text, const Shape& shape);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

Instance read_instance(const std::filesystem::path& path);
std::vector<PlacedObject> read_stream(const std::filesystem::path& path, const Shape& shape);

}  // namespace ohs
