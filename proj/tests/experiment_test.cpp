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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ohs/adversary.hpp"
#include "ohs/experiment.hpp"
#include "ohs/render.hpp"

using ohs::Point;
using ohs::Shape;

TEST_CASE("uniform source") {
  ohs::UniformSource a(1);
  ohs::UniformSource b(1);
  ohs::UniformSource c(2);
  bool differs = false;
  for (int i = 0; i < 1000; ++i) {
    const double x = a.next();
    CHECK(x == b.next());
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
    differs = differs || x != c.next();
  }
  CHECK(differs);
}

TEST_CASE("random scenes") {
  const auto a = ohs::generate_random(Shape::disk(), 50, 20, 1, 3.0);
  const auto b = ohs::generate_random(Shape::disk(), 50, 20, 1, 3.0);
  CHECK(ohs::format_instance(a.instance) == ohs::format_instance(b.instance));
  CHECK(ohs::format_stream(a.stream) == ohs::format_stream(b.stream));
  for (const Point& p : a.instance.points) {
    CHECK(p.minCoeff() >= 0.0);
    CHECK(p.maxCoeff() <= 3.0);
  }
  const auto hex = ohs::generate_random(Shape::polygon(6), 50, 20, 1, 3.0);
  CHECK(hex.instance.points == a.instance.points);
  const double r = hex.instance.shape.circumradius();
  for (const auto& obj : hex.stream) {
    CHECK(obj.center.minCoeff() >= -r);
    CHECK(obj.center.maxCoeff() <= 3.0 + r);
  }
  CHECK_THROWS_AS(ohs::generate_random(Shape::disk(), 0, 5, 1, 3.0), ohs::Error);
  CHECK_THROWS_AS(ohs::generate_random(Shape::disk(), 5, 5, 1, 0.0), ohs::Error);
}

TEST_CASE("run reports") {
  const auto scene = ohs::generate_random(Shape::polygon(5), 40, 30, 9, 3.0);
  const auto rep = ohs::run_stream(scene.instance, scene.stream);
  CHECK(rep.alg_size == rep.solution.size());
  CHECK(rep.m_sigma == 119);
  CHECK(rep.bound == 4 * 119 * 6);
  REQUIRE(rep.opt_size.has_value());
  CHECK(rep.opt_status == ohs::OptStatus::kExact);
  CHECK(*rep.ratio == static_cast<double>(rep.alg_size) / static_cast<double>(*rep.opt_size));
  CHECK(rep.decisions.size() == 30);

  auto j1 = ohs::to_json(rep);
  auto j2 = ohs::to_json(ohs::run_stream(scene.instance, scene.stream));
  j1.erase("wall_time_ms");
  j2.erase("wall_time_ms");
  CHECK(j1.dump() == j2.dump());
  CHECK(j1["opt_status"] == "exact");

  const auto empty = ohs::run_stream(scene.instance, {});
  CHECK(empty.alg_size == 0);
  CHECK(empty.opt_size == std::optional<std::size_t>{0});
  CHECK_FALSE(empty.ratio.has_value());

  const auto adv = ohs::build_instance(Shape::disk(), 3);
  const auto on_adv = ohs::run_stream({adv.shape, adv.points}, adv.objects);
  CHECK(on_adv.opt_size == std::optional<std::size_t>{8});

  const auto big = ohs::build_instance(Shape::disk(), 7);
  ohs::RunOptions no_fallback;
  no_fallback.greedy_fallback = false;
  const auto guarded = ohs::run_stream({big.shape, big.points}, big.objects, no_fallback);
  CHECK(guarded.opt_status == ohs::OptStatus::kTooLarge);
  const auto greedy = ohs::run_stream({big.shape, big.points}, big.objects);
  CHECK(greedy.opt_status == ohs::OptStatus::kGreedy);
}

TEST_CASE("transcripts serialize") {
  const auto inst = ohs::build_instance(Shape::polygon(4), 3);
  ohs::FirstPointResponder r(inst.points);
  const auto t = ohs::play(inst, r);
  const auto j = ohs::to_json(t, inst);
  CHECK(j["forced"] == 4);
  CHECK(j["opt_size"] == 1);
  CHECK(j["rounds"].size() == 4);
  CHECK(j["narrated_rounds"] == 3);
  CHECK(j["stated_rounds"] == 4);
}

TEST_CASE("svg") {
  const auto scene = ohs::generate_random(Shape::disk(), 20, 10, 4, 2.0);
  const std::string bare = ohs::render_svg(scene.instance, {});
  CHECK(bare.find("<g id=\"grid\"") != std::string::npos);
  CHECK(bare.find("<g id=\"points\"") != std::string::npos);
  CHECK(bare.find("<g id=\"objects\"") == std::string::npos);
  CHECK(bare.find("<g id=\"hits\"") == std::string::npos);

  ohs::RenderOptions all;
  all.show_tiles = all.show_cones = all.show_extreme = all.show_hits = true;
  const std::string full = ohs::render_svg(scene.instance, scene.stream, all);
  for (const char* layer : {"tiles", "cones", "extreme", "hits", "objects"}) {
    CHECK(full.find(std::string("<g id=\"") + layer + "\"") != std::string::npos);
  }
  CHECK(full == ohs::render_svg(scene.instance, scene.stream, all));
  CHECK(full.starts_with("<?xml"));
  CHECK(full.ends_with("</svg>\n"));
}
