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

// Command-line front end; all functionality comes from the timegov shared
// library through its C interface.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "timegov/timegov.h"

namespace {

struct ScenarioDeleter {
  void operator()(tg_scenario* sc) const { tg_scenario_free(sc); }
};
using ScenarioHandle = std::unique_ptr<tg_scenario, ScenarioDeleter>;

int to_exit_code(tg_status status) {
  if (status == TG_OK) return 0;
  if (status == TG_NOT_COMPLETED) return 2;
  return 1;
}

ScenarioHandle load_or_exit(const std::string& path, double dt_override) {
  tg_scenario* raw = nullptr;
  tg_status status = tg_scenario_load(path.c_str(), &raw);
  if (status != TG_OK) {
    std::cerr << "error (" << tg_status_name(status) << "): " << tg_last_error()
              << "\n";
    std::exit(1);
  }
  ScenarioHandle handle(raw);
  if (dt_override > 0.0 && tg_scenario_set_dt(handle.get(), dt_override) != TG_OK) {
    std::cerr << "error: " << tg_last_error() << "\n";
    std::exit(1);
  }
  return handle;
}

void print_metrics(const tg_metrics& m) {
  std::printf("completed:        %s\n", m.completed ? "yes" : "no");
  if (m.completed) std::printf("travel_time:      %.6f s\n", m.travel_time);
  std::printf("min_clearance:    %.6f m\n", m.min_clearance);
  std::printf("mean_path_error:  %.6f m\n", m.mean_path_error);
  std::printf("max_path_error:   %.6f m\n", m.max_path_error);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Time-governed safe path-following simulator"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string out_dir;
  double dt_override = 0.0;
  unsigned long long seed = 0;

  auto* run_cmd = app.add_subcommand("run", "Run one scenario");
  run_cmd->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  run_cmd->add_option("--out", out_dir, "Output directory")->required();
  run_cmd->add_option("--dt", dt_override, "Override integration step (s)");
  run_cmd->add_option("--seed", seed,
                      "Reserved for randomized initial conditions; runs are "
                      "deterministic");

  std::vector<int> orders = {2, 3};
  auto* compare_cmd =
      app.add_subcommand("compare", "Run the predictor/feedback comparison matrix");
  compare_cmd->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  compare_cmd->add_option("--out", out_dir, "Output directory")->required();
  compare_cmd->add_option("--orders", orders, "Robot model orders")->delimiter(',');

  int trials = 200;
  auto* verify_cmd = app.add_subcommand("verify", "Run the independent oracle suite");
  verify_cmd->add_option("--trials", trials, "Trials per configuration");
  verify_cmd->add_option("--seed", seed, "Random seed");

  CLI11_PARSE(app, argc, argv);

  if (run_cmd->parsed()) {
    ScenarioHandle scenario = load_or_exit(scenario_path, dt_override);
    tg_metrics metrics{};
    const tg_status status = tg_run(scenario.get(), out_dir.c_str(), &metrics);
    if (status != TG_OK && status != TG_NOT_COMPLETED) {
      std::cerr << "error (" << tg_status_name(status) << "): " << tg_last_error()
                << "\n";
      return 1;
    }
    print_metrics(metrics);
    return to_exit_code(status);
  }

  if (compare_cmd->parsed()) {
    ScenarioHandle scenario = load_or_exit(scenario_path, dt_override);
    const tg_status status = tg_compare(scenario.get(), out_dir.c_str(),
                                        orders.data(), static_cast<int>(orders.size()));
    if (status != TG_OK && status != TG_NOT_COMPLETED) {
      std::cerr << "error (" << tg_status_name(status) << "): " << tg_last_error()
                << "\n";
      return 1;
    }
    std::ifstream summary(out_dir + "/summary.csv");
    std::cout << summary.rdbuf();
    return to_exit_code(status);
  }

  // verify
  tg_verify_report report{};
  const tg_status status = tg_verify(trials, seed, &report);
  if (status != TG_OK) {
    std::cerr << "error (" << tg_status_name(status) << "): " << tg_last_error()
              << "\n";
    return 1;
  }
  std::printf("trials:                        %d\n", report.trials);
  std::printf("worst_containment_margin:      %.3e\n", report.worst_containment_margin);
  std::printf("max_lyapunov_residual:         %.3e\n", report.max_lyapunov_residual);
  std::printf("max_lyap_norm_increase:        %.3e\n", report.max_lyap_norm_increase);
  std::printf("max_vandermonde_final_radius:  %.3e\n",
              report.max_vandermonde_final_radius);
  const bool ok = report.worst_containment_margin >= -1e-6 &&
                  report.max_lyapunov_residual <= 1e-10 &&
                  report.max_lyap_norm_increase <= 1e-9 &&
                  report.max_vandermonde_final_radius <= 1e-3;
  std::printf("verdict:                       %s\n", ok ? "pass" : "fail");
  return ok ? 0 : 1;
}
