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

// SVG 1.1 scene rendering. Output depends only on the inputs and flags.

#pragma once

#include <span>
#include <string>

#include "ohs/io.hpp"
#include "ohs/online.hpp"

namespace ohs {

struct RenderOptions {
  bool show_tiles = false;
  bool show_cones = false;
  bool show_extreme = false;
  bool show_hits = false;
  /// Pixels per unit.
  double scale = 120.0;
  double margin = 0.25;
  EngineOptions engine;
};

/// Runs the stream through the engine and draws points, the grid, the
/// objects and any requested layers.
std::string render_svg(const Instance& instance, std::span<const PlacedObject> stream,
                       const RenderOptions& options = {});

}  // namespace ohs
