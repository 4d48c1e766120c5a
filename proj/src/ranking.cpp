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

#include "ohs/ranking.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace ohs {

int Ranking::max_color() const {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end());
}

Ranking ruler_ranking(std::size_t n) {
  Ranking out;
  out.colors.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    out.colors.push_back(1 + std::countr_zero(static_cast<std::uint64_t>(i)));
  }
  return out;
}

bool verify_ranking(std::span<const int> colors) {
  // Scanning right from i, the first vertex whose color is >= colors[i]
  // must be strictly greater.
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (colors[i] < 1) return false;
    for (std::size_t j = i + 1; j < colors.size(); ++j) {
      if (colors[j] == colors[i]) return false;
      if (colors[j] > colors[i]) break;
    }
  }
  return true;
}

MaxColor max_color_in_interval(const Ranking& ranking, std::size_t lo, std::size_t hi) {
  if (lo > hi || hi >= ranking.size()) {
    throw Error(ErrorCode::kInvalidArgument, "max_color_in_interval: empty or out-of-range interval");
  }
  MaxColor best{lo, ranking.colors[lo]};
  for (std::size_t i = lo + 1; i <= hi; ++i) {
    if (ranking.colors[i] > best.color) best = {i, ranking.colors[i]};
  }
  return best;
}

RankedVertex max_color_in_interval(const ExtremeStructure& structure, const Ranking& ranking,
                                   std::size_t lo, std::size_t hi) {
  if (structure.size() != ranking.size()) {
    throw Error(ErrorCode::kInvalidArgument, "max_color_in_interval: ranking does not match structure");
  }
  const MaxColor m = max_color_in_interval(ranking, lo, hi);
  return {structure.points[m.position], m.position, m.color};
}

}  // namespace ohs
