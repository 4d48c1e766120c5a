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

// ohs: command-line front end for the online hitting set library.

#include <cstdint>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ohs/adversary.hpp"
#include "ohs/dual.hpp"
#include "ohs/error.hpp"
#include "ohs/experiment.hpp"
#include "ohs/io.hpp"
#include "ohs/offline.hpp"
#include "ohs/render.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitTooLarge = 4;
constexpr int kExitProtocol = 5;

struct Common {
  std::uint64_t seed = 1;
  double tol = ohs::kDefaultTolerance;
  int extreme_samples = 4096;

  ohs::EngineOptions engine() const {
    ohs::EngineOptions e;
    e.tol = tol;
    e.extreme.tol = tol;
    e.extreme.samples = extreme_samples;
    return e;
  }
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--seed", common.seed, "64-bit seed");
  cmd->add_option("--tol", common.tol, "Containment tolerance")->check(CLI::PositiveNumber);
  cmd->add_option("--extreme-samples", common.extreme_samples, "Samples per locus piece")
      ->check(CLI::Range(2, 1 << 24));
}

// "disk" or the number of sides of a regular polygon.
ohs::Shape parse_shape(const std::string& text) {
  if (text == "disk") return ohs::Shape::disk();
  std::size_t used = 0;
  int k = 0;
  try {
    k = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || used == 0) {
    throw ohs::Error(ohs::ErrorCode::kInvalidShape, "unknown shape '" + text + "'");
  }
  return ohs::Shape::polygon(k);
}

void emit(const std::string& path, const std::string& contents) {
  if (path.empty() || path == "-") {
    std::cout << contents;
  } else {
    ohs::write_file(path, contents);
  }
}

std::string dump(const ohs::Json& j) { return j.dump() + "\n"; }

// The carrier line starts at a seeded jitter of the default origin.
ohs::Point carrier_origin(std::uint64_t seed) {
  ohs::UniformSource rng(seed);
  const double dx = rng.next();
  const double dy = rng.next();
  return ohs::kDefaultCarrierOrigin + 0.1 * ohs::Point(dx, dy);
}

std::unique_ptr<ohs::Responder> make_responder(const std::string& name,
                                               const ohs::AdversaryInstance& adv,
                                               const Common& common) {
  if (name == "algorithm1") {
    return std::make_unique<ohs::EngineResponder>(adv.points, adv.shape, common.engine());
  }
  return std::make_unique<ohs::FirstPointResponder>(adv.points, common.tol);
}

int exit_code(ohs::ErrorCode code) {
  switch (code) {
    case ohs::ErrorCode::kParse:
    case ohs::ErrorCode::kInvalidInput:
    case ohs::ErrorCode::kInvalidShape:
      return kExitParse;
    case ohs::ErrorCode::kInfeasible: return kExitInfeasible;
    case ohs::ErrorCode::kTooLarge: return kExitTooLarge;
    case ohs::ErrorCode::kProtocolViolation: return kExitProtocol;
    default: return kExitFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Online hitting set for unit disks and regular unit polygons"};
  app.require_subcommand(1);
  int status = kExitOk;

  // gen-random
  Common gr_common;
  std::string gr_shape = "disk";
  std::size_t gr_points = 50;
  std::size_t gr_objects = 30;
  double gr_span = 3.0;
  std::string gr_instance = "instance.json";
  std::string gr_stream = "stream.jsonl";
  auto* gen_random = app.add_subcommand("gen-random", "Seeded random instance and stream");
  add_common(gen_random, gr_common);
  gen_random->add_option("--shape", gr_shape, "disk or k >= 4");
  gen_random->add_option("--points", gr_points, "Number of points");
  gen_random->add_option("--objects", gr_objects, "Number of objects");
  gen_random->add_option("--span", gr_span, "Side of the point box");
  gen_random->add_option("--instance", gr_instance, "Instance output file");
  gen_random->add_option("--stream", gr_stream, "Stream output file");
  gen_random->callback([&] {
    const auto scene = ohs::generate_random(parse_shape(gr_shape), gr_points, gr_objects,
                                            gr_common.seed, gr_span);
    ohs::write_file(gr_instance, ohs::format_instance(scene.instance));
    ohs::write_file(gr_stream, ohs::format_stream(scene.stream));
  });

  // run
  Common run_common;
  std::string run_instance;
  std::string run_stream;
  std::string run_out;
  bool run_allow_infeasible = false;
  bool run_strict = false;
  bool run_no_opt = false;
  bool run_no_greedy = false;
  auto* run = app.add_subcommand("run", "Process a stream online and report");
  add_common(run, run_common);
  run->add_option("--instance", run_instance, "Instance file")->required();
  run->add_option("--stream", run_stream, "Stream file")->required();
  run->add_option("-o,--out", run_out, "Report file (default stdout)");
  run->add_flag("--allow-infeasible", run_allow_infeasible, "Exit 0 even if an object holds no point");
  run->add_flag("--strict", run_strict, "Fail when the ratio exceeds the bound");
  run->add_flag("--no-opt", run_no_opt, "Skip the offline optimum");
  run->add_flag("--no-greedy-fallback", run_no_greedy, "Report too-large instead of greedy");
  run->callback([&] {
    const ohs::Instance instance = ohs::read_instance(run_instance);
    const auto stream = ohs::read_stream(run_stream, instance.shape);
    ohs::RunOptions options;
    options.engine = run_common.engine();
    options.compute_opt = !run_no_opt;
    options.greedy_fallback = !run_no_greedy;
    const ohs::RunReport report = ohs::run_stream(instance, stream, options);
    emit(run_out, dump(ohs::to_json(report)));
    if (run_strict && report.ratio && *report.ratio > static_cast<double>(report.bound)) {
      std::cerr << "ohs: ratio " << *report.ratio << " exceeds bound " << report.bound << "\n";
      status = kExitFailure;
    } else if (report.infeasible > 0 && !run_allow_infeasible) {
      std::cerr << "ohs: " << report.infeasible << " object(s) hold no point\n";
      status = kExitInfeasible;
    }
  });

  // gen-adversarial
  Common ga_common;
  std::string ga_shape = "disk";
  int ga_m = 4;
  std::string ga_instance = "instance.json";
  std::string ga_stream = "stream.jsonl";
  std::string ga_path;
  auto* gen_adv = app.add_subcommand("gen-adversarial", "Lower-bound instance and all its objects");
  add_common(gen_adv, ga_common);
  gen_adv->add_option("--shape", ga_shape, "disk or k >= 4");
  gen_adv->add_option("-m,--levels", ga_m, "n = 2^m points")->check(CLI::Range(1, 12));
  gen_adv->add_option("--instance", ga_instance, "Instance output file");
  gen_adv->add_option("--stream", ga_stream, "Stream output file");
  gen_adv->add_option("--path", ga_path,
                      "Emit only the objects presented to this responder, in order")
      ->check(CLI::IsMember({"first-point", "algorithm1"}));
  gen_adv->callback([&] {
    const auto adv = ohs::build_instance(parse_shape(ga_shape), ga_m, carrier_origin(ga_common.seed));
    ohs::write_file(ga_instance, ohs::format_instance({adv.shape, adv.points}));
    if (ga_path.empty()) {
      ohs::write_file(ga_stream, ohs::format_stream(adv.objects));
      return;
    }
    auto responder = make_responder(ga_path, adv, ga_common);
    const auto transcript = ohs::play(adv, *responder, ga_common.tol);
    std::vector<ohs::PlacedObject> presented;
    for (const auto& round : transcript.rounds) presented.push_back(adv.objects[round.object_id]);
    ohs::write_file(ga_stream, ohs::format_stream(presented));
  });

  // play
  Common pl_common;
  std::string pl_shape = "disk";
  int pl_m = 4;
  std::string pl_responder = "first-point";
  std::string pl_out;
  auto* play = app.add_subcommand("play", "Play the lower-bound game against a responder");
  add_common(play, pl_common);
  play->add_option("--shape", pl_shape, "disk or k >= 4");
  play->add_option("-m,--levels", pl_m, "n = 2^m points")->check(CLI::Range(1, 12));
  play->add_option("--responder", pl_responder, "Responder")
      ->check(CLI::IsMember({"first-point", "algorithm1"}));
  play->add_option("-o,--out", pl_out, "Transcript file (default stdout)");
  play->callback([&] {
    const auto adv = ohs::build_instance(parse_shape(pl_shape), pl_m, carrier_origin(pl_common.seed));
    auto responder = make_responder(pl_responder, adv, pl_common);
    const auto transcript = ohs::play(adv, *responder, pl_common.tol);
    ohs::Json j = ohs::to_json(transcript, adv);
    j["responder"] = responder->name();
    emit(pl_out, dump(j));
  });

  // opt
  Common opt_common;
  std::string opt_instance;
  std::string opt_stream;
  std::string opt_out;
  bool opt_greedy = false;
  auto* opt = app.add_subcommand("opt", "Offline minimum hitting set");
  add_common(opt, opt_common);
  opt->add_option("--instance", opt_instance, "Instance file")->required();
  opt->add_option("--stream", opt_stream, "Stream file")->required();
  opt->add_option("-o,--out", opt_out, "Report file (default stdout)");
  opt->add_flag("--greedy", opt_greedy, "Use greedy when the exact solver is out of range");
  opt->callback([&] {
    const ohs::Instance instance = ohs::read_instance(opt_instance);
    const auto stream = ohs::read_stream(opt_stream, instance.shape);
    const auto system = ohs::to_set_system(instance.points, stream, opt_common.tol);
    if (system.has_infeasible()) {
      throw ohs::Error(ohs::ErrorCode::kInfeasible,
                       "object " + std::to_string(system.infeasible.front()) + " holds no point");
    }
    std::vector<std::size_t> solution;
    std::string solver = "exact";
    try {
      solution = ohs::exact_min_hitting_set(system);
    } catch (const ohs::Error& e) {
      if (e.code() != ohs::ErrorCode::kTooLarge || !opt_greedy) throw;
      solution = ohs::greedy_hitting_set(system);
      solver = "greedy";
    }
    ohs::Json j;
    j["n_points"] = instance.points.size();
    j["n_objects"] = stream.size();
    j["distinct_sets"] = system.sets.size();
    j["opt_size"] = solution.size();
    j["opt_status"] = solver;
    j["solution"] = solution;
    emit(opt_out, dump(j));
  });

  // dualize
  Common du_common;
  std::string du_instance;
  std::string du_stream;
  std::string du_out_instance = "dual_instance.json";
  std::string du_out_stream = "dual_stream.jsonl";
  auto* dualize = app.add_subcommand("dualize", "Swap points and object centers");
  add_common(dualize, du_common);
  dualize->add_option("--instance", du_instance, "Instance file")->required();
  dualize->add_option("--stream", du_stream, "Stream file")->required();
  dualize->add_option("--out-instance", du_out_instance, "Dual instance file");
  dualize->add_option("--out-stream", du_out_stream, "Dual stream file");
  dualize->callback([&] {
    const ohs::Instance instance = ohs::read_instance(du_instance);
    const auto stream = ohs::read_stream(du_stream, instance.shape);
    const auto dual = ohs::dualize(instance.points, stream, instance.shape);
    ohs::write_file(du_out_instance, ohs::format_instance({dual.shape, dual.points}));
    ohs::write_file(du_out_stream, ohs::format_stream(dual.objects));
  });

  // render
  Common re_common;
  std::string re_instance;
  std::string re_stream;
  std::string re_out;
  ohs::RenderOptions re_options;
  auto* render = app.add_subcommand("render", "Draw the scene as SVG");
  add_common(render, re_common);
  render->add_option("--instance", re_instance, "Instance file")->required();
  render->add_option("--stream", re_stream, "Stream file (optional)");
  render->add_option("-o,--out", re_out, "SVG file (default stdout)");
  render->add_flag("--show-tiles", re_options.show_tiles, "Tiles, super-squares and quadrant centers");
  render->add_flag("--show-cones", re_options.show_cones, "Cones of the active (tile, tau) pairs");
  render->add_flag("--show-extreme", re_options.show_extreme, "Extreme points");
  render->add_flag("--show-hits", re_options.show_hits, "Chosen points");
  render->add_option("--scale", re_options.scale, "Pixels per unit")->check(CLI::PositiveNumber);
  render->callback([&] {
    const ohs::Instance instance = ohs::read_instance(re_instance);
    std::vector<ohs::PlacedObject> stream;
    if (!re_stream.empty()) stream = ohs::read_stream(re_stream, instance.shape);
    re_options.engine = re_common.engine();
    emit(re_out, ohs::render_svg(instance, stream, re_options));
  });

  // bench
  Common be_common;
  std::vector<std::string> be_shapes = {"disk", "4", "5", "6", "8"};
  int be_seeds = 5;
  std::size_t be_points = 40;
  std::size_t be_objects = 30;
  double be_span = 3.0;
  int be_jobs = 1;
  std::string be_out;
  auto* bench = app.add_subcommand("bench", "Random (seed, shape) grid of runs");
  add_common(bench, be_common);
  bench->add_option("--shapes", be_shapes, "Shapes")->delimiter(',');
  bench->add_option("--seeds", be_seeds, "Seeds per shape, counted from --seed")
      ->check(CLI::PositiveNumber);
  bench->add_option("--points", be_points, "Points per instance");
  bench->add_option("--objects", be_objects, "Objects per instance");
  bench->add_option("--span", be_span, "Side of the point box");
  bench->add_option("-j,--jobs", be_jobs, "Parallel cells")->check(CLI::PositiveNumber);
  bench->add_option("-o,--out", be_out, "Summary file (default stdout)");
  bench->callback([&] {
    struct Cell {
      std::string shape;
      std::uint64_t seed;
    };
    std::vector<Cell> cells;
    for (const auto& s : be_shapes) {
      parse_shape(s);
      for (int i = 0; i < be_seeds; ++i) cells.push_back({s, be_common.seed + static_cast<std::uint64_t>(i)});
    }
    auto evaluate = [&](const Cell& cell) {
      const auto scene = ohs::generate_random(parse_shape(cell.shape), be_points, be_objects,
                                              cell.seed, be_span);
      ohs::RunOptions options;
      options.engine = be_common.engine();
      return ohs::run_stream(scene.instance, scene.stream, options);
    };
    std::vector<ohs::RunReport> reports(cells.size());
    for (std::size_t start = 0; start < cells.size(); start += static_cast<std::size_t>(be_jobs)) {
      std::vector<std::future<ohs::RunReport>> batch;
      const std::size_t end = std::min(cells.size(), start + static_cast<std::size_t>(be_jobs));
      for (std::size_t i = start; i < end; ++i) {
        batch.push_back(std::async(std::launch::async, evaluate, cells[i]));
      }
      for (std::size_t i = start; i < end; ++i) reports[i] = batch[i - start].get();
    }
    ohs::Json rows = ohs::Json::array();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const auto& r = reports[i];
      ohs::Json row;
      row["shape"] = ohs::to_json(r.shape);
      row["seed"] = cells[i].seed;
      row["n_points"] = r.n_points;
      row["n_objects"] = r.n_objects;
      row["alg_size"] = r.alg_size;
      row["opt_size"] = r.opt_size ? ohs::Json(*r.opt_size) : ohs::Json(nullptr);
      row["opt_status"] = ohs::to_string(r.opt_status);
      row["ratio"] = r.ratio ? ohs::Json(*r.ratio) : ohs::Json(nullptr);
      row["bound"] = r.bound;
      row["infeasible"] = r.infeasible;
      rows.push_back(std::move(row));
    }
    emit(be_out, dump(rows));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const ohs::Error& e) {
    std::cerr << "ohs: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "ohs: " << e.what() << "\n";
    return kExitFailure;
  }
  return status;
}
