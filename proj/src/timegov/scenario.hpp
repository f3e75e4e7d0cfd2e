// Copyright 2026 The timegov Authors
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

#ifndef TIMEGOV_SCENARIO_HPP
#define TIMEGOV_SCENARIO_HPP

#include <optional>
#include <string>
#include <vector>

#include "timegov/environment.hpp"
#include "timegov/phd.hpp"

namespace timegov {

enum class GovernorType { kSafe, kHeuristic };
enum class PredictorKind { kLyapunov, kVandermonde };

struct GovernorSpec {
  GovernorType type = GovernorType::kSafe;
  double kappa_sigma = 3.0;
  double kappa_s = 1.0;
  double sdot_desired = 1.0;  // heuristic only
  double eta = 1.0;           // heuristic only
};

struct SimConfig {
  double dt = 1e-3;
  double t_max = 120.0;
  double s_tol = 1e-3;
  double pos_tol = 1e-2;
};

/// One fully specified simulation setup, as read from a scenario file.
struct Scenario {
  Environment env;
  std::vector<Vec> waypoints;
  int order = 2;
  std::vector<double> roots;
  GovernorSpec governor;
  PredictorKind predictor = PredictorKind::kLyapunov;
  bool velocity_feedback = true;
  SimConfig sim;
  std::optional<RobotState> initial_state;
};

/// Parses and fully validates a scenario file: schema and field checks,
/// path clearance validation, and the initial prediction-set safety
/// precondition. Throws std::runtime_error with a descriptive message.
Scenario load_scenario(const std::string& file_path);

Scenario parse_scenario(const std::string& json_text);

/// Canonical JSON serialization; load(parse(write(s))) reproduces s.
std::string write_scenario(const Scenario& scenario);

/// Structural checks only (no clearance sampling); used by the loader and
/// by programmatically constructed scenarios.
void validate_scenario(const Scenario& scenario);

/// Clearance sampling plus the initial-condition safety precondition.
void validate_scenario_runtime(const Scenario& scenario);

}  // namespace timegov

#endif  // TIMEGOV_SCENARIO_HPP
