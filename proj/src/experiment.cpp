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

#include "ohs/experiment.hpp"

#include <chrono>
#include <random>

#include "ohs/offline.hpp"

namespace ohs {

struct UniformSource::State {
  std::mt19937_64 engine;
};

UniformSource::UniformSource(std::uint64_t seed) : state_(std::make_shared<State>()) {
  state_->engine.seed(seed);
}

double UniformSource::next() {
  return static_cast<double>(state_->engine() >> 11) * 0x1.0p-53;
}

RandomScene generate_random(const Shape& shape, std::size_t n_points, std::size_t n_objects,
                            std::uint64_t seed, double span) {
  if (n_points == 0) throw Error(ErrorCode::kInvalidArgument, "generate_random: need at least one point");
  if (!(span > 0)) throw Error(ErrorCode::kInvalidArgument, "generate_random: span must be > 0");
  UniformSource rng(seed);
  RandomScene scene;
  scene.instance.shape = shape;
  for (std::size_t i = 0; i < n_points; ++i) {
    const double x = rng.uniform(0.0, span);
    const double y = rng.uniform(0.0, span);
    scene.instance.points.emplace_back(x, y);
  }
  const double r = shape.circumradius();
  for (std::size_t i = 0; i < n_objects; ++i) {
    const double x = rng.uniform(-r, span + r);
    const double y = rng.uniform(-r, span + r);
    scene.stream.push_back({shape, Point(x, y)});
  }
  return scene;
}

const char* to_string(OptStatus status) {
  switch (status) {
    case OptStatus::kExact: return "exact";
    case OptStatus::kGreedy: return "greedy";
    case OptStatus::kTooLarge: return "too-large";
    case OptStatus::kSkipped: return "skipped";
  }
  return "unknown";
}

RunReport run_stream(const Instance& instance, std::span<const PlacedObject> stream,
                     const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  HittingState state(instance.points, instance.shape, options.engine);
  for (const PlacedObject& obj : stream) state.process(obj);

  RunReport report;
  report.shape = instance.shape;
  report.n_points = state.points().size();
  report.n_objects = stream.size();
  report.alg_size = state.solution_ids().size();
  report.m_sigma = tiling_params(instance.shape).max_tiles;
  report.bound = competitive_bound(instance.shape, report.n_points);
  report.decisions = state.log();
  report.solution.assign(state.solution_ids().begin(), state.solution_ids().end());
  report.warnings = state.warnings();
  for (const Decision& d : report.decisions) {
    if (d.outcome == Outcome::kInfeasible) ++report.infeasible;
  }

  if (options.compute_opt) {
    const SetSystem system = to_set_system(state.points(), stream, options.engine.tol).without_infeasible();
    try {
      report.opt_size = exact_min_hitting_set(system).size();
      report.opt_status = OptStatus::kExact;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kTooLarge) throw;
      if (options.greedy_fallback) {
        report.opt_size = greedy_hitting_set(system).size();
        report.opt_status = OptStatus::kGreedy;
      } else {
        report.opt_status = OptStatus::kTooLarge;
      }
    }
    if (report.opt_size && *report.opt_size > 0) {
      report.ratio = static_cast<double>(report.alg_size) / static_cast<double>(*report.opt_size);
    }
  }
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Json to_json(const Decision& decision) {
  Json j;
  j["index"] = decision.index;
  j["center"] = to_json(decision.center);
  j["outcome"] = to_string(decision.outcome);
  j["placements"] = Json::array();
  for (const Placement& p : decision.placements) {
    Json pj;
    pj["tile"] = Json::array({p.tile.i, p.tile.j});
    pj["tau"] = p.tau;
    pj["point_id"] = p.point_id;
    pj["point"] = to_json(p.point);
    pj["color"] = p.color;
    pj["tile_members"] = p.tile_members;
    pj["extreme_range"] = Json::array({p.first, p.last});
    pj["contiguous"] = p.contiguous;
    j["placements"].push_back(std::move(pj));
  }
  return j;
}

Json to_json(const RunReport& report) {
  Json j;
  j["shape"] = to_json(report.shape);
  j["n_points"] = report.n_points;
  j["n_objects"] = report.n_objects;
  j["alg_size"] = report.alg_size;
  j["opt_size"] = report.opt_size ? Json(*report.opt_size) : Json(nullptr);
  j["opt_status"] = to_string(report.opt_status);
  j["ratio"] = report.ratio ? Json(*report.ratio) : Json(nullptr);
  j["bound"] = report.bound;
  j["m_sigma"] = report.m_sigma;
  j["infeasible"] = report.infeasible;
  j["solution"] = report.solution;
  j["warnings"] = report.warnings;
  j["decisions"] = Json::array();
  for (const Decision& d : report.decisions) j["decisions"].push_back(to_json(d));
  j["wall_time_ms"] = report.wall_time_ms;
  return j;
}

Json to_json(const GameTranscript& transcript, const AdversaryInstance& instance) {
  Json j;
  j["shape"] = to_json(instance.shape);
  j["levels"] = transcript.levels;
  j["n_points"] = instance.points.size();
  j["rounds"] = Json::array();
  for (const Round& r : transcript.rounds) {
    Json rj;
    rj["level"] = r.level;
    rj["j"] = r.j;
    rj["object_id"] = r.object_id;
    rj["center"] = to_json(instance.objects[r.object_id].center);
    rj["placed"] = Json::array();
    for (const Point& p : r.placed) rj["placed"].push_back(to_json(p));
    j["rounds"].push_back(std::move(rj));
  }
  j["forced"] = transcript.forced;
  j["points_placed"] = transcript.points_placed;
  j["opt_size"] = transcript.opt_size;
  j["truncated"] = transcript.truncated;
  j["narrated_rounds"] = transcript.narrated_rounds;
  j["stated_rounds"] = transcript.stated_rounds;
  return j;
}

}  // namespace ohs
