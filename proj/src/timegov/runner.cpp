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

#include "timegov/runner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "timegov/svg.hpp"
#include "timegov/verify.hpp"

namespace timegov {

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << content;
}

}  // namespace

Metrics run_to_dir(const Scenario& scenario, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  auto [log, metrics] = run(scenario);
  const std::filesystem::path dir(out_dir);
  write_file(dir / "trajectory.csv", log_to_csv(log));
  write_file(dir / "metrics.json", metrics_to_json(metrics));
  write_file(dir / "scene.svg", render_scene_svg(scenario, log));
  return metrics;
}

Scenario make_cell_scenario(const Scenario& base, int order, PredictorKind predictor,
                            bool velocity_feedback) {
  Scenario cell = base;
  cell.order = order;
  cell.predictor = predictor;
  cell.velocity_feedback = velocity_feedback;
  if (static_cast<int>(base.roots.size()) != order) {
    const bool uniform = std::all_of(base.roots.begin(), base.roots.end(),
                                     [&](double r) { return r == base.roots.front(); });
    if (!uniform)
      throw std::runtime_error(
          "compare: non-uniform roots cannot be replicated to order " +
          std::to_string(order));
    cell.roots.assign(static_cast<std::size_t>(order), base.roots.front());
  }
  // The default rest initial state adapts to the order; an explicit initial
  // state only carries over when its order matches.
  if (cell.initial_state && cell.initial_state->order() != order)
    cell.initial_state.reset();
  return cell;
}

std::vector<CompareCell> compare_to_dir(const Scenario& scenario,
                                        const std::string& out_dir,
                                        const std::vector<int>& orders) {
  if (orders.empty()) throw std::invalid_argument("compare: no orders requested");
  std::filesystem::create_directories(out_dir);

  std::vector<CompareCell> cells;
  for (int order : orders)
    for (PredictorKind predictor :
         {PredictorKind::kLyapunov, PredictorKind::kVandermonde})
      for (bool velocity_feedback : {false, true}) {
        CompareCell cell;
        cell.order = order;
        cell.predictor = predictor;
        cell.velocity_feedback = velocity_feedback;
        cell.name = "n" + std::to_string(order) + "_" +
                    (predictor == PredictorKind::kLyapunov ? "lyapunov" : "vandermonde") +
                    (velocity_feedback ? "_posvel" : "_pos");
        cells.push_back(std::move(cell));
      }

  std::vector<std::future<Metrics>> futures;
  futures.reserve(cells.size());
  for (const CompareCell& cell : cells) {
    futures.push_back(std::async(std::launch::async, [&, cell]() {
      const Scenario cs = make_cell_scenario(scenario, cell.order, cell.predictor,
                                             cell.velocity_feedback);
      validate_scenario(cs);
      validate_scenario_runtime(cs);
      return run_to_dir(cs, (std::filesystem::path(out_dir) / cell.name).string());
    }));
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    try {
      cells[i].metrics = futures[i].get();
    } catch (const std::exception& e) {
      throw std::runtime_error("compare: cell " + cells[i].name + ": " + e.what());
    }
  }

  write_file(std::filesystem::path(out_dir) / "summary.csv", summary_table(cells));
  return cells;
}

std::string summary_table(const std::vector<CompareCell>& cells) {
  std::string out = "cell,travel_time,mean_err,max_err,min_clearance\n";
  char buf[160];
  for (const CompareCell& cell : cells) {
    std::snprintf(buf, sizeof(buf), "%s,%.17g,%.17g,%.17g,%.17g\n", cell.name.c_str(),
                  cell.metrics.travel_time.value_or(
                      std::numeric_limits<double>::quiet_NaN()),
                  cell.metrics.mean_path_error, cell.metrics.max_path_error,
                  cell.metrics.min_clearance);
    out += buf;
  }
  return out;
}

VerifyReport verify_suite(int trials_per_config, unsigned long long seed) {
  if (trials_per_config <= 0)
    throw std::invalid_argument("verify: trials must be > 0");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);

  VerifyReport report;
  report.worst_containment_margin = std::numeric_limits<double>::infinity();

  // Containment and radius decay for both predictors, orders 2 and 3, d = 2.
  const std::vector<double> roots3 = {-3.0, -3.0, -3.0};
  for (int order : {2, 3}) {
    const std::vector<double> roots(roots3.begin(), roots3.begin() + order);
    const PhdGains gains = gains_from_roots(roots);
    const double horizon = 20.0 / 3.0;
    const MotionPredictor predictors[] = {MotionPredictor::lyapunov(gains),
                                          MotionPredictor::vandermonde(roots)};
    for (const MotionPredictor& predictor : predictors) {
      for (int trial = 0; trial < trials_per_config; ++trial) {
        Vec r(2);
        r << coord(rng), coord(rng);
        RobotState x0;
        for (int k = 0; k < order; ++k) {
          Vec block(2);
          block << coord(rng), coord(rng);
          x0.derivatives.push_back(block);
        }
        const double margin = containment_trial(predictor, gains, x0, r, horizon, 1e-3);
        report.worst_containment_margin =
            std::min(report.worst_containment_margin, margin);
        ++report.trials;

        const auto trajectory = simulate_frozen(gains, x0, r, horizon, 1e-3);
        const DecayCheck decay = radius_decay_check(trajectory, predictor, r);
        if (predictor.is_lyapunov())
          report.max_lyap_norm_increase =
              std::max(report.max_lyap_norm_increase, decay.max_norm_increase);
        else
          report.max_vandermonde_final_radius =
              std::max(report.max_vandermonde_final_radius, decay.final_radius);
      }
    }
  }

  // Lyapunov residuals for orders 1..5 with repeated and randomized roots.
  std::uniform_real_distribution<double> root_dist(-5.0, -0.2);
  for (int n = 1; n <= 5; ++n) {
    std::vector<double> roots(static_cast<std::size_t>(n), -3.0);
    for (int rep = 0; rep < 5; ++rep) {
      const PhdGains gains = gains_from_roots(roots);
      const Mat a = companion(gains);
      const LyapunovCertificate cert = solve_lyapunov(a);
      report.max_lyapunov_residual =
          std::max(report.max_lyapunov_residual, lyapunov_residual(a, cert.P_small));
      for (double& root : roots) root = root_dist(rng);
    }
  }
  return report;
}

}  // namespace timegov
