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

#ifndef TIMEGOV_SIMULATOR_HPP
#define TIMEGOV_SIMULATOR_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "timegov/governor.hpp"
#include "timegov/scenario.hpp"

namespace timegov {

struct LogRow {
  double t = 0.0;
  double s = 0.0;
  double sdot = 0.0;
  std::vector<Vec> derivatives;
  double sigma = 0.0;
  double free_distance = 0.0;
  double radius = 0.0;
  double path_error = 0.0;
};

struct SimLog {
  std::vector<LogRow> rows;
  int order = 0;
  int dim = 0;
};

struct Metrics {
  bool completed = false;
  std::optional<double> travel_time;
  double min_clearance = 0.0;
  double mean_path_error = 0.0;
  double max_path_error = 0.0;
};

/// Precomputed closed-loop pieces of one scenario run.
class SimContext {
 public:
  explicit SimContext(const Scenario& scenario);

  const ReferencePath& path() const { return path_; }
  const PhdGains& gains() const { return gains_; }
  const MotionPredictor& predictor() const { return predictor_; }
  const Scenario& scenario() const { return scenario_; }

  /// Right-hand side of the coupled robot + governor ODE at (x, s):
  /// derivative blocks shift down and the top block is the PhD control
  /// acceleration, evaluated with sdot = 0 when velocity feedback is off.
  std::pair<RobotState, double> coupled_derivative(const RobotState& x, double s) const;

  double governor_rate(const RobotState& x, double s) const;
  RobotState initial_state() const;

 private:
  Scenario scenario_;
  ReferencePath path_;
  PhdGains gains_;
  MotionPredictor predictor_;
};

/// Integrates the coupled ODE with classical fixed-step RK4 and logs every
/// step. Throws std::runtime_error for an unsafe initial condition (setup
/// error) or non-finite state (numeric error).
std::pair<SimLog, Metrics> run(const Scenario& scenario);

Metrics compute_metrics(const SimLog& log, const ReferencePath& path,
                        const SimConfig& config);

/// CSV emission: header t,s,sdot,p0_x,p0_y,...,sigma,dF,radius,path_error;
/// floats printed with 17 significant digits.
std::string log_to_csv(const SimLog& log);

std::string metrics_to_json(const Metrics& metrics);

}  // namespace timegov

#endif  // TIMEGOV_SIMULATOR_HPP
