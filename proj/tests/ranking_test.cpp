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

#include <cmath>
#include <random>

#include "ohs/ranking.hpp"
#include "oracles.hpp"

TEST_CASE("ruler sequence") {
  CHECK(ohs::ruler_ranking(0).colors.empty());
  CHECK(ohs::ruler_ranking(0).max_color() == 0);
  CHECK(ohs::ruler_ranking(1).colors == std::vector<int>{1});
  CHECK(ohs::ruler_ranking(7).colors == std::vector<int>{1, 2, 1, 3, 1, 2, 1});
  CHECK(ohs::ruler_ranking(7).max_color() == 3);
  CHECK(ohs::ruler_ranking(8).max_color() == 4);
  for (std::size_t n = 1; n <= 1024; ++n) {
    const auto r = ohs::ruler_ranking(n);
    REQUIRE(ohs::verify_ranking(r));
    REQUIRE(r.max_color() == static_cast<int>(std::floor(std::log2(static_cast<double>(n)))) + 1);
    REQUIRE(r.max_color() <= static_cast<int>(std::floor(std::log2(2.0 * n))));
    if (n <= 64) REQUIRE(oracle::ranking_valid(r.colors));
  }
}

TEST_CASE("verify") {
  CHECK(ohs::verify_ranking(std::vector<int>{1, 2, 1}));
  CHECK_FALSE(ohs::verify_ranking(std::vector<int>{1, 1}));
  // The two 2s are separated only by a 1.
  CHECK_FALSE(ohs::verify_ranking(std::vector<int>{2, 1, 2, 3}));
  CHECK_FALSE(oracle::ranking_valid(std::vector<int>{2, 1, 2, 3}));
  CHECK(ohs::verify_ranking(std::vector<int>{2, 1, 3, 1, 2}));
  CHECK(ohs::verify_ranking(std::vector<int>{1, 2, 1, 3}));
  CHECK_FALSE(ohs::verify_ranking(std::vector<int>{0}));
  CHECK(ohs::verify_ranking(std::vector<int>{}));

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 5000; ++trial) {
    std::vector<int> c(1 + rng() % 20);
    for (int& x : c) x = 1 + static_cast<int>(rng() % 3);
    REQUIRE(ohs::verify_ranking(c) == oracle::ranking_valid(c));
  }
}

TEST_CASE("max color in an interval") {
  const ohs::Ranking r{{1, 2, 1, 3, 1}};
  CHECK(ohs::max_color_in_interval(r, 1, 3).position == 3);
  CHECK(ohs::max_color_in_interval(r, 1, 3).color == 3);
  CHECK(ohs::max_color_in_interval(r, 0, 0).position == 0);
  CHECK(ohs::max_color_in_interval(r, 0, 0).color == 1);
  const auto seven = ohs::ruler_ranking(7);
  CHECK(ohs::max_color_in_interval(seven, 4, 6).position == 5);
  CHECK(ohs::max_color_in_interval(seven, 4, 6).color == 2);
  CHECK_THROWS_AS(ohs::max_color_in_interval(r, 3, 1), ohs::Error);
  CHECK_THROWS_AS(ohs::max_color_in_interval(r, 2, 5), ohs::Error);
}

TEST_CASE("the maximum of any interval is unique") {
  for (std::size_t n : {1u, 5u, 16u, 33u, 100u}) {
    const auto r = ohs::ruler_ranking(n);
    for (std::size_t lo = 0; lo < n; ++lo) {
      for (std::size_t hi = lo; hi < n; ++hi) {
        const auto best = ohs::max_color_in_interval(r, lo, hi);
        int count = 0;
        for (std::size_t i = lo; i <= hi; ++i) count += r.colors[i] == best.color;
        REQUIRE(count == 1);
      }
    }
  }
}

TEST_CASE("max color over a structure") {
  ohs::ExtremeStructure st;
  for (int i = 0; i < 5; ++i) {
    st.points.emplace_back(i, 0);
    st.thetas.push_back(i * 0.1);
    st.source.push_back(static_cast<std::size_t>(i));
  }
  const auto r = ohs::ruler_ranking(5);
  const auto v = ohs::max_color_in_interval(st, r, 0, 4);
  CHECK(v.position == 3);
  CHECK(v.vertex == ohs::Point(3, 0));
  CHECK(v.color == 3);
  CHECK_THROWS_AS(ohs::max_color_in_interval(st, ohs::ruler_ranking(4), 0, 3), ohs::Error);
}
