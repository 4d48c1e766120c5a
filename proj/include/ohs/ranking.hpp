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

// Vertex rankings of path graphs: two vertices of equal color always have a
// strictly higher color somewhere between them.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ohs/extreme.hpp"

namespace ohs {

struct Ranking {
  /// colors[i] >= 1 is the color of the i-th path vertex.
  std::vector<int> colors;

  std::size_t size() const { return colors.size(); }
  int max_color() const;
};

/// Ruler sequence: colors[i] = 1 + (number of trailing zero bits of i + 1).
Ranking ruler_ranking(std::size_t n);

bool verify_ranking(std::span<const int> colors);
inline bool verify_ranking(const Ranking& ranking) { return verify_ranking(ranking.colors); }

struct MaxColor {
  std::size_t position;
  int color;
};

/// The unique maximum-color position in [lo, hi].
MaxColor max_color_in_interval(const Ranking& ranking, std::size_t lo, std::size_t hi);

struct RankedVertex {
  Point vertex;
  std::size_t position;
  int color;
};

RankedVertex max_color_in_interval(const ExtremeStructure& structure, const Ranking& ranking,
                                   std::size_t lo, std::size_t hi);

}  // namespace ohs
