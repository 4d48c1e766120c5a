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

// Seeded instance generation and run reports.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ohs/adversary.hpp"
#include "ohs/io.hpp"
#include "ohs/online.hpp"

namespace ohs {

/// Uniform doubles in [0, 1) from the top 53 bits of std::mt19937_64.
class UniformSource {
 public:
  explicit UniformSource(std::uint64_t seed);
  double next();
  double uniform(double lo, double hi) { return lo + (hi - lo) * next(); }

 private:
  struct State;
  std::shared_ptr<State> state_;
};

struct RandomScene {
  Instance instance;
  std::vector<PlacedObject> stream;
};

/// Points uniform in [0, span]^2, then object centers uniform in
/// [-r_out, span + r_out]^2. Points are drawn first, so they do not depend on
/// the shape.
RandomScene generate_random(const Shape& shape, std::size_t n_points, std::size_t n_objects,
                            std::uint64_t seed, double span);

enum class OptStatus { kExact, kGreedy, kTooLarge, kSkipped };
const char* to_string(OptStatus status);

struct RunOptions {
  EngineOptions engine;
  bool compute_opt = true;
  /// Fall back to greedy when the exact solver's scale guard trips.
  bool greedy_fallback = true;
};

struct RunReport {
  Shape shape = Shape::disk();
  std::size_t n_points = 0;
  std::size_t n_objects = 0;
  std::size_t alg_size = 0;
  std::optional<std::size_t> opt_size;
  OptStatus opt_status = OptStatus::kSkipped;
  std::optional<double> ratio;
  long long bound = 0;
  int m_sigma = 0;
  std::size_t infeasible = 0;
  std::vector<Decision> decisions;
  std::vector<std::size_t> solution;
  std::vector<std::string> warnings;
  double wall_time_ms = 0.0;
};

RunReport run_stream(const Instance& instance, std::span<const PlacedObject> stream,
                     const RunOptions& options = {});

Json to_json(const Decision& decision);
Json to_json(const RunReport& report);
Json to_json(const GameTranscript& transcript, const AdversaryInstance& instance);

}  // namespace ohs
