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

#include "timegov/timegov.h"

#include <cmath>
#include <cstring>
#include <limits>
#include <string>
#include <vector>

#include "timegov/runner.hpp"
#include "timegov/scenario.hpp"

struct tg_scenario {
  timegov::Scenario scenario;
};

namespace {

thread_local std::string g_last_error;

tg_status classify(const std::string& message) {
  if (message.find("parse error") != std::string::npos) return TG_ERR_PARSE;
  if (message.find("cannot open") != std::string::npos ||
      message.find("cannot write") != std::string::npos)
    return TG_ERR_IO;
  if (message.find("non-finite") != std::string::npos ||
      message.find("diverged") != std::string::npos ||
      message.find("residual") != std::string::npos)
    return TG_ERR_NUMERIC;
  return TG_ERR_INVALID;
}

tg_status fail(const std::exception& e) {
  g_last_error = e.what();
  return classify(g_last_error);
}

void fill_metrics(const timegov::Metrics& in, tg_metrics* out) {
  if (!out) return;
  out->completed = in.completed ? 1 : 0;
  out->travel_time = in.travel_time.value_or(std::numeric_limits<double>::quiet_NaN());
  out->min_clearance = in.min_clearance;
  out->mean_path_error = in.mean_path_error;
  out->max_path_error = in.max_path_error;
}

}  // namespace

extern "C" {

tg_status tg_scenario_load(const char* path, tg_scenario** out) {
  if (!path || !out) {
    g_last_error = "tg_scenario_load: null argument";
    return TG_ERR_INVALID;
  }
  try {
    auto* handle = new tg_scenario{timegov::load_scenario(path)};
    *out = handle;
    return TG_OK;
  } catch (const std::exception& e) {
    *out = nullptr;
    return fail(e);
  }
}

void tg_scenario_free(tg_scenario* scenario) { delete scenario; }

tg_status tg_scenario_set_dt(tg_scenario* scenario, double dt) {
  if (!scenario) {
    g_last_error = "tg_scenario_set_dt: null scenario";
    return TG_ERR_INVALID;
  }
  if (!(dt > 0.0) || dt > scenario->scenario.sim.t_max) {
    g_last_error = "tg_scenario_set_dt: require 0 < dt <= t_max";
    return TG_ERR_INVALID;
  }
  scenario->scenario.sim.dt = dt;
  return TG_OK;
}

tg_status tg_run(const tg_scenario* scenario, const char* out_dir,
                 tg_metrics* metrics) {
  if (!scenario || !out_dir) {
    g_last_error = "tg_run: null argument";
    return TG_ERR_INVALID;
  }
  try {
    const timegov::Metrics m = timegov::run_to_dir(scenario->scenario, out_dir);
    fill_metrics(m, metrics);
    return m.completed ? TG_OK : TG_NOT_COMPLETED;
  } catch (const std::exception& e) {
    return fail(e);
  }
}

tg_status tg_compare(const tg_scenario* scenario, const char* out_dir,
                     const int* orders, int n_orders) {
  if (!scenario || !out_dir || !orders || n_orders <= 0) {
    g_last_error = "tg_compare: null or empty argument";
    return TG_ERR_INVALID;
  }
  try {
    const std::vector<int> order_list(orders, orders + n_orders);
    const auto cells =
        timegov::compare_to_dir(scenario->scenario, out_dir, order_list);
    for (const auto& cell : cells)
      if (!cell.metrics.completed) {
        g_last_error = "tg_compare: cell " + cell.name + " did not complete";
        return TG_NOT_COMPLETED;
      }
    return TG_OK;
  } catch (const std::exception& e) {
    return fail(e);
  }
}

tg_status tg_verify(int trials, unsigned long long seed, tg_verify_report* out) {
  if (!out) {
    g_last_error = "tg_verify: null report";
    return TG_ERR_INVALID;
  }
  try {
    const timegov::VerifyReport report = timegov::verify_suite(trials, seed);
    out->trials = report.trials;
    out->worst_containment_margin = report.worst_containment_margin;
    out->max_lyapunov_residual = report.max_lyapunov_residual;
    out->max_lyap_norm_increase = report.max_lyap_norm_increase;
    out->max_vandermonde_final_radius = report.max_vandermonde_final_radius;
    return TG_OK;
  } catch (const std::exception& e) {
    return fail(e);
  }
}

const char* tg_last_error(void) { return g_last_error.c_str(); }

const char* tg_status_name(tg_status status) {
  switch (status) {
    case TG_OK: return "ok";
    case TG_ERROR: return "error";
    case TG_NOT_COMPLETED: return "not_completed";
    case TG_ERR_IO: return "io_error";
    case TG_ERR_PARSE: return "parse_error";
    case TG_ERR_INVALID: return "invalid";
    case TG_ERR_NUMERIC: return "numeric_error";
  }
  return "unknown";
}

}  // extern "C"
