/*
 * Copyright 2026 The timegov Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of the timegov shared library: scenario loading, single-run
 * and comparison-matrix simulation, and the independent verification suite.
 * All functions return a tg_status; on failure, tg_last_error() holds a
 * thread-local description of the most recent error.
 */

#ifndef TIMEGOV_TIMEGOV_H
#define TIMEGOV_TIMEGOV_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tg_status {
  TG_OK = 0,
  TG_ERROR = 1,          /* generic failure; see tg_last_error() */
  TG_NOT_COMPLETED = 2,  /* run finished without reaching the path end */
  TG_ERR_IO = 3,
  TG_ERR_PARSE = 4,
  TG_ERR_INVALID = 5,
  TG_ERR_NUMERIC = 6
} tg_status;

/* Opaque, immutable after load except for tg_scenario_set_dt. */
typedef struct tg_scenario tg_scenario;

typedef struct tg_metrics {
  int completed;
  double travel_time; /* NaN when not completed */
  double min_clearance;
  double mean_path_error;
  double max_path_error;
} tg_metrics;

typedef struct tg_verify_report {
  int trials;
  double worst_containment_margin;
  double max_lyapunov_residual;
  double max_lyap_norm_increase;
  double max_vandermonde_final_radius;
} tg_verify_report;

/* Parses and validates a scenario file (including path clearance and the
 * initial-condition safety precondition). */
tg_status tg_scenario_load(const char* path, tg_scenario** out);
void tg_scenario_free(tg_scenario* scenario);

/* Overrides the integration step size of a loaded scenario. */
tg_status tg_scenario_set_dt(tg_scenario* scenario, double dt);

/* Runs one scenario; writes trajectory.csv, metrics.json and scene.svg into
 * out_dir. metrics may be NULL. */
tg_status tg_run(const tg_scenario* scenario, const char* out_dir,
                 tg_metrics* metrics);

/* Runs the {predictor} x {velocity feedback} matrix for each listed order;
 * writes per-cell outputs and summary.csv into out_dir. */
tg_status tg_compare(const tg_scenario* scenario, const char* out_dir,
                     const int* orders, int n_orders);

/* Runs the oracle suite with the given number of trials per configuration. */
tg_status tg_verify(int trials, unsigned long long seed, tg_verify_report* out);

/* Thread-local message of the most recent failure in this thread. */
const char* tg_last_error(void);
const char* tg_status_name(tg_status status);

#ifdef __cplusplus
}
#endif

#endif /* TIMEGOV_TIMEGOV_H */
