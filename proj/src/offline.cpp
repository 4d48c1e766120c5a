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

#include "ohs/offline.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>

namespace ohs {

SetSystem SetSystem::without_infeasible() const {
  SetSystem copy = *this;
  copy.infeasible.clear();
  return copy;
}

SetSystem make_set_system(std::size_t universe_size,
                          const std::vector<std::vector<std::size_t>>& ranges) {
  SetSystem out;
  out.universe_size = universe_size;
  std::map<std::vector<std::size_t>, std::size_t> seen;
  for (std::size_t r = 0; r < ranges.size(); ++r) {
    std::vector<std::size_t> ids = ranges[r];
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (std::size_t id : ids) {
      if (id >= universe_size) {
        throw Error(ErrorCode::kInvalidArgument, "make_set_system: point id out of range");
      }
    }
    if (ids.empty()) {
      out.infeasible.push_back(r);
      out.range_to_set.push_back(std::nullopt);
      continue;
    }
    auto [it, inserted] = seen.try_emplace(ids, out.sets.size());
    if (inserted) {
      out.sets.push_back(ids);
      out.multiplicity.push_back(0);
    }
    ++out.multiplicity[it->second];
    out.range_to_set.push_back(it->second);
  }
  return out;
}

SetSystem to_set_system(std::span<const Point> points, std::span<const PlacedObject> objects,
                        double tol) {
  std::vector<std::vector<std::size_t>> ranges(objects.size());
  for (std::size_t r = 0; r < objects.size(); ++r) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (contains(objects[r], points[i], tol)) ranges[r].push_back(i);
    }
  }
  return make_set_system(points.size(), ranges);
}

bool hits_all(const SetSystem& system, std::span<const std::size_t> chosen) {
  for (const auto& set : system.sets) {
    const bool hit = std::any_of(set.begin(), set.end(), [&](std::size_t id) {
      return std::find(chosen.begin(), chosen.end(), id) != chosen.end();
    });
    if (!hit) return false;
  }
  return true;
}

std::vector<std::size_t> greedy_hitting_set(const SetSystem& system) {
  if (system.has_infeasible()) {
    throw Error(ErrorCode::kInfeasible, "greedy_hitting_set: a range holds no point");
  }
  std::vector<bool> hit(system.sets.size(), false);
  std::size_t remaining = system.sets.size();
  std::vector<std::size_t> chosen;
  while (remaining > 0) {
    std::vector<std::size_t> count(system.universe_size, 0);
    for (std::size_t s = 0; s < system.sets.size(); ++s) {
      if (hit[s]) continue;
      for (std::size_t id : system.sets[s]) ++count[id];
    }
    const auto best = static_cast<std::size_t>(
        std::max_element(count.begin(), count.end()) - count.begin());
    chosen.push_back(best);
    for (std::size_t s = 0; s < system.sets.size(); ++s) {
      if (!hit[s] && std::binary_search(system.sets[s].begin(), system.sets[s].end(), best)) {
        hit[s] = true;
        --remaining;
      }
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

namespace {

class BranchAndBound {
 public:
  explicit BranchAndBound(const SetSystem& system) : system_(system) {
    cover_.assign(system.universe_size, 0);
    for (std::size_t s = 0; s < system.sets.size(); ++s) {
      for (std::size_t id : system.sets[s]) cover_[id] |= std::uint64_t{1} << s;
    }
  }

  std::vector<std::size_t> solve(std::vector<std::size_t> upper_bound) {
    best_ = std::move(upper_bound);
    const std::size_t n = system_.sets.size();
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::vector<std::size_t> chosen;
    search(all, chosen);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  void search(std::uint64_t uncovered, std::vector<std::size_t>& chosen) {
    if (uncovered == 0) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    int max_degree = 0;
    for (std::uint64_t mask : cover_) max_degree = std::max(max_degree, std::popcount(mask & uncovered));
    const int open = std::popcount(uncovered);
    const std::size_t lower = static_cast<std::size_t>((open + max_degree - 1) / max_degree);
    if (chosen.size() + lower >= best_.size()) return;

    // Branch on the smallest uncovered set; one of its points must be chosen.
    std::size_t pick = 0;
    std::size_t pick_size = static_cast<std::size_t>(-1);
    for (std::uint64_t rest = uncovered; rest != 0; rest &= rest - 1) {
      const auto s = static_cast<std::size_t>(std::countr_zero(rest));
      if (system_.sets[s].size() < pick_size) {
        pick = s;
        pick_size = system_.sets[s].size();
      }
    }
    for (std::size_t id : system_.sets[pick]) {
      chosen.push_back(id);
      search(uncovered & ~cover_[id], chosen);
      chosen.pop_back();
    }
  }

  const SetSystem& system_;
  std::vector<std::uint64_t> cover_;
  std::vector<std::size_t> best_;
};

}  // namespace

std::vector<std::size_t> exact_min_hitting_set(const SetSystem& system) {
  if (system.sets.size() > kMaxExactSets || system.universe_size > kMaxExactUniverse) {
    throw Error(ErrorCode::kTooLarge, "exact_min_hitting_set: instance exceeds " +
                                          std::to_string(kMaxExactSets) + " sets / " +
                                          std::to_string(kMaxExactUniverse) + " points");
  }
  if (system.has_infeasible()) {
    throw Error(ErrorCode::kInfeasible, "exact_min_hitting_set: a range holds no point");
  }
  if (system.sets.empty()) return {};
  return BranchAndBound(system).solve(greedy_hitting_set(system));
}

}  // namespace ohs
