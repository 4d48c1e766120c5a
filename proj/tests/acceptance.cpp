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

// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ohs/adversary.hpp"
#include "ohs/dual.hpp"
#include "ohs/experiment.hpp"
#include "ohs/extreme.hpp"
#include "ohs/offline.hpp"
#include "ohs/online.hpp"
#include "ohs/ranking.hpp"
#include "ohs/tiling.hpp"
#include "oracles.hpp"

namespace {

using ohs::Point;
using ohs::Shape;

struct Result {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  std::function<Result()> run;
};

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Independent constants per shape.
int expected_m_sigma(const Shape& s) {
  if (s.is_disk()) return 14;
  if (s.sides() == 4) return 25;
  if (s.sides() == 5 || s.sides() == 6) return 119;
  return 34;
}

Result lower_bound() {
  const auto start = std::chrono::steady_clock::now();
  Result r;
  int games = 0;
  for (const Shape& shape : {Shape::disk(), Shape::polygon(4), Shape::polygon(5), Shape::polygon(6)}) {
    for (int m = 3; m <= 6; ++m) {
      const auto instance = ohs::build_instance(shape, m);
      ohs::FirstPointResponder responder(instance.points);
      const auto t = ohs::play(instance, responder);
      ++games;
      const double ratio = static_cast<double>(t.points_placed) / static_cast<double>(t.opt_size);
      const double target = std::log2(static_cast<double>(instance.points.size())) + 1.0;
      if (t.forced != m + 1 || t.points_placed != static_cast<std::size_t>(m + 1) ||
          t.opt_size != 1 || ratio != target) {
        r.pass = false;
        r.detail += oracle::name(shape) + " m=" + std::to_string(m) + " forced " +
                    std::to_string(t.forced) + " opt " + std::to_string(t.opt_size) + "; ";
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 5.0) r.pass = false;
  std::ostringstream out;
  out << games << " games, forced = m+1 and OPT = 1 in all, " << secs << " s";
  if (!r.pass) out << "; " << r.detail;
  r.detail = out.str();
  return r;
}

struct RandomRun {
  Shape shape;
  ohs::RunReport report;
  std::size_t stab_violations = 0;
};

const std::vector<RandomRun>& random_runs() {
  static const std::vector<RandomRun> runs = [] {
    std::vector<RandomRun> out;
    for (const Shape& shape : oracle::all_shapes()) {
      for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        std::mt19937_64 sizes(seed * 7919);
        const auto n = static_cast<std::size_t>(20 + sizes() % 41);
        const auto m = static_cast<std::size_t>(20 + sizes() % 21);
        const auto scene = ohs::generate_random(shape, n, m, seed, 3.0);
        RandomRun run{shape, ohs::run_stream(scene.instance, scene.stream), 0};
        ohs::HittingState state(scene.instance.points, shape);
        for (const auto& obj : scene.stream) state.process(obj);
        const auto system = ohs::to_set_system(state.points(), scene.stream);
        for (std::size_t i = 0; i < scene.stream.size(); ++i) {
          if (system.range_to_set[i] && !state.is_stabbed(scene.stream[i])) ++run.stab_violations;
        }
        out.push_back(std::move(run));
      }
    }
    return out;
  }();
  return runs;
}

Result upper_bound() {
  Result r;
  std::size_t violations = 0;
  std::size_t unstabbed = 0;
  double worst = 0.0;
  std::size_t exact = 0;
  for (const auto& run : random_runs()) {
    const auto& rep = run.report;
    if (rep.opt_status != ohs::OptStatus::kExact) continue;
    ++exact;
    const long long bound = 4LL * expected_m_sigma(run.shape) *
                            static_cast<long long>(std::floor(std::log2(2.0 * rep.n_points)));
    if (rep.bound != bound) ++violations;
    if (static_cast<long long>(rep.alg_size) > bound * static_cast<long long>(*rep.opt_size)) {
      ++violations;
    }
    if (rep.ratio) worst = std::max(worst, *rep.ratio);
    unstabbed += run.stab_violations;
  }
  r.pass = violations == 0 && unstabbed == 0 && exact == random_runs().size();
  std::ostringstream out;
  out << random_runs().size() << " runs (" << exact << " exact OPT), bound violations "
      << violations << ", unstabbed feasible objects " << unstabbed << ", worst ratio " << worst;
  r.detail = out.str();
  return r;
}

Result tile_counts() {
  Result r;
  std::ostringstream out;
  std::mt19937_64 rng(3);
  std::vector<Shape> shapes = oracle::all_shapes();
  shapes.push_back(Shape::polygon(12));
  for (const Shape& shape : shapes) {
    const double side = ohs::tiling_params(shape).tile_side;
    const ohs::Grid grid(side, Point(0, 0));
    std::size_t worst = 0;
    for (int trial = 0; trial < 10000; ++trial) {
      const Point c(uniform(rng, 0, side), uniform(rng, 0, side));
      worst = std::max(worst, ohs::tiles_intersected(grid, {shape, c}).size());
    }
    const auto limit = static_cast<std::size_t>(expected_m_sigma(shape));
    if (worst > limit) r.pass = false;
    if (out.tellp() > 0) out << " ";
    out << oracle::name(shape) << " " << worst << "/" << limit;
  }
  const Shape square = Shape::polygon(4);
  const ohs::Grid grid(0.5, Point(0, 0));
  const std::size_t at_center = ohs::tiles_intersected(grid, {square, Point(0.25, 0.25)}).size();
  const std::size_t at_corner = ohs::tiles_intersected(grid, {square, Point(0.0, 0.0)}).size();
  if (at_center != 25) r.pass = false;
  out << "; k=4 witness: tile-center translate meets " << at_center
      << ", tile-corner translate meets " << at_corner;
  r.detail = out.str();
  return r;
}

std::vector<Point> random_tile(std::mt19937_64& rng, double side, std::size_t n) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i) {
    pts.emplace_back(uniform(rng, 1e-3, side - 1e-3), uniform(rng, 1e-3, side - 1e-3));
  }
  return pts;
}

Result interval_property() {
  Result r;
  std::ostringstream out;
  std::mt19937_64 rng(4);
  constexpr int kTrials = 1000;
  constexpr int kObjectsPerTile = 20;
  for (const Shape& shape : oracle::all_shapes()) {
    const double side = ohs::tiling_params(shape).tile_side;
    const ohs::Grid grid(side, Point(0, 0));
    const ohs::TileIndex tile{0, 0};
    const auto sq = ohs::super_square(grid, tile, shape);
    int bad = 0;
    int empty = 0;
    int regenerated = 0;
    std::vector<Point> pts;
    std::map<int, ohs::ExtremeStructure> structures;
    int current = -1;
    for (int trial = 0; trial < kTrials;) {
      if (trial / kObjectsPerTile != current) {
        current = trial / kObjectsPerTile;
        pts = random_tile(rng, side, 8);
        structures.clear();
      }
      const Point c = sq.center + Point(uniform(rng, -sq.side / 2, sq.side / 2),
                                        uniform(rng, -sq.side / 2, sq.side / 2));
      const ohs::PlacedObject obj{shape, c};
      bool holds = false;
      bool near = false;
      for (const Point& p : pts) {
        const double d = ohs::convex_distance(shape, c, p);
        holds = holds || d <= 1.0;
        near = near || std::abs(d - 1.0) < 1e-6;
      }
      if (!holds) continue;
      if (near) {
        ++regenerated;
        continue;
      }
      const int tau = ohs::tau_of(grid, tile, obj);
      auto it = structures.find(tau);
      if (it == structures.end()) {
        it = structures.emplace(tau, ohs::build_extreme_structure(tile, tau, pts, shape, grid)).first;
      }
      const auto& v = it->second;
      std::vector<std::size_t> inside;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (ohs::contains(obj, v.points[i])) inside.push_back(i);
      }
      if (inside.empty()) {
        ++empty;
      } else if (inside.back() - inside.front() + 1 != inside.size()) {
        ++bad;
      }
      ++trial;
    }
    if (bad != 0 || empty != 0) r.pass = false;
    if (out.tellp() > 0) out << "; ";
    out << oracle::name(shape) << " non-contiguous " << bad << " empty " << empty
        << " regenerated " << regenerated;
  }
  r.detail = out.str();
  return r;
}

Result extreme_oracle() {
  Result r;
  std::mt19937_64 rng(5);
  const auto shapes = oracle::all_shapes();
  constexpr double kMargin = 1e-9;
  constexpr double kTol = 1e-9;
  constexpr double kSlack = 1e-6;
  int tiles = 0;
  int regenerated = 0;
  std::size_t checked = 0;
  std::size_t extreme = 0;
  std::size_t mismatches = 0;
  std::size_t grid_only = 0;
  while (tiles < 200) {
    const Shape& shape = shapes[static_cast<std::size_t>(tiles) % shapes.size()];
    const double side = ohs::tiling_params(shape).tile_side;
    const ohs::Grid grid(side, Point(0, 0));
    const ohs::TileIndex tile{0, 0};
    const auto pts = random_tile(rng, side, 1 + rng() % 8);
    const auto centers = ohs::quadrant_centers(grid, tile, shape);

    struct Row {
      bool exact;
      bool sampler;
      bool dense;
    };
    std::vector<Row> rows;
    bool tangent = false;
    for (int tau = 1; tau <= 4 && !tangent; ++tau) {
      const Point o = centers[static_cast<std::size_t>(tau - 1)];
      for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<Point> others;
        for (std::size_t j = 0; j < pts.size(); ++j) {
          if (j != i) others.push_back(pts[j]);
        }
        const auto verdict = oracle::extreme_verdict(pts[i], others, o, shape, kMargin, kTol, kSlack);
        if (verdict == oracle::Verdict::kNearTangent) {
          tangent = true;
          break;
        }
        rows.push_back({verdict == oracle::Verdict::kExtreme,
                        ohs::is_extreme(pts[i], tile, tau, pts, shape, grid),
                        oracle::extreme_grid(pts[i], others, o, shape, kMargin, kTol, 48)});
      }
    }
    if (tangent) {
      ++regenerated;
      continue;
    }
    ++tiles;
    for (const Row& row : rows) {
      ++checked;
      extreme += row.exact;
      if (row.exact != row.sampler) ++mismatches;
      if (row.dense && !row.sampler) ++grid_only;
    }
  }
  r.pass = mismatches == 0 && grid_only == 0;
  std::ostringstream out;
  out << tiles << " tiles, " << checked << " (point, tau) checks, " << extreme
      << " extreme; mismatches vs exact oracle " << mismatches << ", dense-grid hits missed "
      << grid_only << ", regenerated " << regenerated;
  r.detail = out.str();
  return r;
}

Result distinct_colors() {
  Result r;
  std::size_t placements = 0;
  std::size_t violations = 0;
  for (const auto& run : random_runs()) {
    std::map<std::pair<ohs::TileIndex, int>, std::set<int>> seen;
    for (const auto& d : run.report.decisions) {
      for (const auto& p : d.placements) {
        ++placements;
        if (!seen[{p.tile, p.tau}].insert(p.color).second) ++violations;
      }
    }
  }
  r.pass = violations == 0;
  r.detail = std::to_string(placements) + " placements replayed, " + std::to_string(violations) +
             " repeated colors within a (tile, tau)";
  return r;
}

Result cone_angles() {
  Result r;
  std::mt19937_64 rng(7);
  const double target = std::acos(21.0 / 29.0);
  double worst_disk = 0.0;
  double worst_kgon = 0.0;
  double k4_error = 0.0;
  std::vector<Shape> shapes = {Shape::disk()};
  for (int k = 4; k <= 16; ++k) {
    shapes.push_back(Shape::polygon(k));
    if (k % 2 == 1) shapes.push_back(Shape::polygon(k).reflect());
  }
  for (const Shape& shape : shapes) {
    const double side = ohs::tiling_params(shape).tile_side;
    const ohs::Grid grid(side, Point(uniform(rng, 0, side), uniform(rng, 0, side)));
    const ohs::TileIndex tile{static_cast<std::int64_t>(rng() % 9) - 4,
                              static_cast<std::int64_t>(rng() % 9) - 4};
    for (int tau = 1; tau <= 4; ++tau) {
      const double a = ohs::cone_of(grid, tile, tau, shape).opening_angle;
      if (shape.is_disk()) {
        worst_disk = std::max(worst_disk, a);
        if (!(a < std::numbers::pi / 2)) r.pass = false;
      } else {
        worst_kgon = std::max(worst_kgon, a);
        if (!(a < std::numbers::pi / 4)) r.pass = false;
      }
      if (!shape.is_disk() && shape.sides() == 4) {
        k4_error = std::max(k4_error, std::abs(a - target));
      }
    }
  }
  if (!(k4_error <= 1e-12)) r.pass = false;
  std::ostringstream out;
  out << "disk max " << worst_disk << " rad, polygons max " << worst_kgon
      << " rad, k=4 deviation from arccos(21/29) " << k4_error;
  r.detail = out.str();
  return r;
}

Result reflection_property() {
  Result r;
  std::mt19937_64 rng(8);
  std::vector<Shape> shapes = oracle::all_shapes();
  for (int k : {9, 11, 12}) shapes.push_back(Shape::polygon(k));
  for (int k : {5, 7, 9}) shapes.push_back(Shape::polygon(k).reflect());
  double worst = 0.0;
  double worst_oracle = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const Shape& s = shapes[static_cast<std::size_t>(i) % shapes.size()];
    const Point x(uniform(rng, -3, 3), uniform(rng, -3, 3));
    const Point y(uniform(rng, -3, 3), uniform(rng, -3, 3));
    const double d = ohs::convex_distance(s, x, y);
    worst = std::max(worst, std::abs(d - ohs::convex_distance(ohs::reflect(s), y, x)));
    worst_oracle = std::max(worst_oracle,
                            std::abs(d - oracle::Body::of(s).gauge(y - x)) / std::max(1.0, d));
  }
  double params = 0.0;
  for (int k = 4; k <= 64; ++k) {
    const Shape s = Shape::polygon(k);
    const double half = std::numbers::pi / k;
    params = std::max(params, std::abs(s.circumradius() - 1.0 / std::cos(half)));
    params = std::max(params, std::abs(*s.side_length() - 2.0 * std::tan(half)));
    const auto ref = oracle::polygon_vertices(k);
    const auto v = s.vertices();
    for (int i = 0; i < k; ++i) {
      const Point a = v[static_cast<std::size_t>(i)];
      const Point b = v[static_cast<std::size_t>((i + 1) % k)];
      params = std::max(params, (a - ref[static_cast<std::size_t>(i)]).norm());
      params = std::max(params, std::abs(a.norm() - 1.0 / std::cos(half)));
      params = std::max(params, std::abs((a - b).norm() - 2.0 * std::tan(half)));
      params = std::max(params, std::abs(((a + b) / 2).norm() - 1.0));
    }
  }
  r.pass = worst <= 1e-9 && worst_oracle <= 1e-9 && params <= 1e-12;
  std::ostringstream out;
  out << "1e5 triples: max |d(x,y) - d_reflected(y,x)| " << worst
      << ", max relative gap to ray-cast gauge " << worst_oracle
      << "; polygon closed forms max error " << params << " (k = 4..64)";
  r.detail = out.str();
  return r;
}

Result ruler() {
  Result r;
  std::size_t failures = 0;
  for (std::size_t n = 1; n <= 1024; ++n) {
    const auto ranking = ohs::ruler_ranking(n);
    const int expected = static_cast<int>(std::floor(std::log2(static_cast<double>(n)))) + 1;
    if (!ohs::verify_ranking(ranking) || ranking.max_color() != expected) ++failures;
    if (n <= 64 && !oracle::ranking_valid(ranking.colors)) ++failures;
  }
  std::mt19937_64 rng(9);
  std::size_t disagreements = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    std::vector<int> colors(1 + rng() % 64);
    for (int& c : colors) c = 1 + static_cast<int>(rng() % 4);
    if (ohs::verify_ranking(colors) != oracle::ranking_valid(colors)) ++disagreements;
  }
  r.pass = failures == 0 && disagreements == 0;
  r.detail = "n = 1..1024: " + std::to_string(failures) +
             " failures; random colorings n <= 64 vs brute force: " +
             std::to_string(disagreements) + " disagreements";
  return r;
}

Result duality() {
  Result r;
  std::size_t instances = 0;
  std::size_t bad = 0;
  std::size_t incidences = 0;
  for (const Shape& shape : oracle::all_shapes()) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const auto scene = ohs::generate_random(shape, 30, 25, 1000 + seed, 2.5);
      const auto& pts = scene.instance.points;
      const auto primal = ohs::incidence(pts, scene.stream);
      const auto dual = ohs::dualize(pts, scene.stream, shape);
      const auto twice = ohs::dualize(dual.points, dual.objects, dual.shape);
      ++instances;
      incidences += static_cast<std::size_t>(primal.count());
      if (ohs::incidence(dual.points, dual.objects) != primal.transpose()) ++bad;
      if (!(twice.shape == shape) || ohs::incidence(twice.points, twice.objects) != primal) ++bad;
    }
  }
  r.pass = bad == 0;
  r.detail = std::to_string(instances) + " instances, " + std::to_string(incidences) +
             " incidences, " + std::to_string(bad) + " mismatches";
  return r;
}

Result disk_constant() {
  Result r;
  std::size_t bad = 0;
  std::size_t checks = 0;
  for (std::size_t n = 1; n <= 130; ++n) {
    ohs::Instance inst{Shape::disk(), {}};
    for (std::size_t i = 0; i < n; ++i) inst.points.emplace_back(0.37 * i, 0.11 * (i % 5));
    const auto rep = ohs::run_stream(inst, {});
    const long long expected = 56LL * static_cast<long long>(std::floor(std::log2(2.0 * n)));
    ++checks;
    if (rep.bound != expected || rep.m_sigma != 14) ++bad;
  }
  for (const auto& run : random_runs()) {
    if (!run.shape.is_disk()) continue;
    ++checks;
    const auto n = static_cast<double>(run.report.n_points);
    if (run.report.bound != 56LL * static_cast<long long>(std::floor(std::log2(2.0 * n)))) ++bad;
  }
  r.pass = bad == 0;
  r.detail = std::to_string(checks) + " disk reports, bound == 56 floor(log2 2n) in all but " +
             std::to_string(bad);
  return r;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "adversary forces log2(n)+1 against OPT 1", lower_bound},
      {2, "online size within 4 m floor(log2 2n) OPT", upper_bound},
      {3, "tiles met by one translate", tile_counts},
      {4, "extreme points inside an object form an interval", interval_property},
      {5, "sampled extreme test equals exact oracle", extreme_oracle},
      {6, "distinct colors per (tile, tau)", distinct_colors},
      {7, "cone opening angles", cone_angles},
      {8, "reflection identity and polygon constants", reflection_property},
      {9, "ruler ranking", ruler},
      {10, "dual incidence is the transpose", duality},
      {11, "disk constant 56", disk_constant},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Result res;
    try {
      res = c.run();
    } catch (const std::exception& e) {
      res = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2d %s  %s: %s [%.2fs]\n", c.id, res.pass ? "PASS" : "FAIL", c.title,
                res.detail.c_str(), secs);
    std::fflush(stdout);
    failed += res.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
