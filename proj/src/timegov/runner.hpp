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

#ifndef TIMEGOV_RUNNER_HPP
#define TIMEGOV_RUNNER_HPP

#include <string>
#include <vector>

#include "timegov/simulator.hpp"

namespace timegov {

/// Runs one scenario and writes trajectory.csv, metrics.json and scene.svg
/// into out_dir (created if missing).
Metrics run_to_dir(const Scenario& scenario, const std::string& out_dir);

struct CompareCell {
  std::string name;  // e.g. "n2_vandermonde_posvel"
  int order = 0;
  PredictorKind predictor = PredictorKind::kLyapunov;
  bool velocity_feedback = false;
  Metrics metrics;
};

/// Scenario specialized to one cell of the comparison matrix. Roots are
/// replicated to the requested order when the base scenario uses a uniform
/// root; otherwise the base roots must already match the order.
Scenario make_cell_scenario(const Scenario& base, int order, PredictorKind predictor,
                            bool velocity_feedback);

/// Runs the {predictor} x {velocity feedback} matrix for each requested
/// order (cells run concurrently), writes per-cell outputs under out_dir
/// plus summary.csv. Throws on any cell setup failure, naming the cell.
std::vector<CompareCell> compare_to_dir(const Scenario& scenario,
                                        const std::string& out_dir,
                                        const std::vector<int>& orders);

std::string summary_table(const std::vector<CompareCell>& cells);

struct VerifyReport {
  int trials = 0;
  double worst_containment_margin = 0.0;
  double max_lyapunov_residual = 0.0;
  double max_lyap_norm_increase = 0.0;
  double max_vandermonde_final_radius = 0.0;
};

/// Runs the independent-oracle suite: containment trials for both
/// predictors (orders 2 and 3, d = 2), Lyapunov residuals for orders 1..5,
/// and radius-decay checks on every trial.
VerifyReport verify_suite(int trials_per_config, unsigned long long seed);

}  // namespace timegov

#endif  // TIMEGOV_RUNNER_HPP
