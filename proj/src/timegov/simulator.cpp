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

#include "timegov/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace timegov {

namespace {

MotionPredictor make_predictor(const Scenario& scenario, const PhdGains& gains) {
  if (scenario.predictor == PredictorKind::kLyapunov)
    return MotionPredictor::lyapunov(gains);
  return MotionPredictor::vandermonde(scenario.roots);
}

RobotState axpy(const RobotState& x, double h, const RobotState& k) {
  RobotState out = x;
  for (std::size_t i = 0; i < out.derivatives.size(); ++i)
    out.derivatives[i] += h * k.derivatives[i];
  return out;
}

bool state_finite(const RobotState& x) {
  for (const Vec& block : x.derivatives)
    if (!block.allFinite()) return false;
  return true;
}

std::string axis_name(int i) {
  static const char* kAxes[] = {"x", "y", "z"};
  if (i < 3) return kAxes[i];
  return "c" + std::to_string(i);
}

void append_double(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

}  // namespace

SimContext::SimContext(const Scenario& scenario)
    : scenario_(scenario),
      path_(scenario.waypoints),
      gains_(gains_from_roots(scenario.roots)),
      predictor_(make_predictor(scenario, gains_)) {
  if (scenario.order != gains_.order())
    throw std::invalid_argument("scenario: roots list length must equal order");
}

RobotState SimContext::initial_state() const {
  if (scenario_.initial_state) return *scenario_.initial_state;
  return rest_state(path_.eval(0.0), scenario_.order);
}

double SimContext::governor_rate(const RobotState& x, double s) const {
  s = std::clamp(s, 0.0, path_.end());
  if (scenario_.governor.type == GovernorType::kSafe) {
    GovernorParams params{scenario_.governor.kappa_sigma, scenario_.governor.kappa_s,
                          path_.end()};
    return safe_rate(params, safety_level(scenario_.env, predictor_, x, s, path_), s);
  }
  HeuristicParams params{scenario_.governor.sdot_desired, scenario_.governor.eta,
                         scenario_.governor.kappa_s, path_.end()};
  return heuristic_rate(params, (x.position() - path_.eval(s)).norm(), s);
}

std::pair<RobotState, double> SimContext::coupled_derivative(const RobotState& x,
                                                             double s) const {
  s = std::clamp(s, 0.0, path_.end());
  const double rate = governor_rate(x, s);
  const double sdot_feedback = scenario_.velocity_feedback ? rate : 0.0;

  RobotState deriv;
  deriv.derivatives.reserve(x.derivatives.size());
  for (std::size_t k = 1; k < x.derivatives.size(); ++k)
    deriv.derivatives.push_back(x.derivatives[k]);
  deriv.derivatives.push_back(
      phd_accel(gains_, x, path_.eval(s), path_.tangent(s), sdot_feedback));
  return {std::move(deriv), rate};
}

namespace {

bool completion_reached(const LogRow& row, const ReferencePath& path,
                        const SimConfig& config) {
  if (path.end() - row.s > config.s_tol) return false;
  if ((row.derivatives.front() - path.eval(path.end())).norm() > config.pos_tol)
    return false;
  for (std::size_t k = 1; k < row.derivatives.size(); ++k)
    if (row.derivatives[k].norm() > config.pos_tol) return false;
  return true;
}

LogRow make_row(const SimContext& ctx, double t, const RobotState& x, double s) {
  LogRow row;
  row.t = t;
  row.s = s;
  row.derivatives = x.derivatives;
  const Vec r = ctx.path().eval(s);
  row.sigma = safety_level(ctx.scenario().env, ctx.predictor(), x, s, ctx.path());
  row.path_error = (x.position() - r).norm();
  const GovernorSpec& gov = ctx.scenario().governor;
  if (gov.type == GovernorType::kSafe) {
    row.sdot = safe_rate({gov.kappa_sigma, gov.kappa_s, ctx.path().end()}, row.sigma, s);
  } else {
    row.sdot = heuristic_rate(
        {gov.sdot_desired, gov.eta, gov.kappa_s, ctx.path().end()}, row.path_error, s);
  }
  row.free_distance = point_free_distance(ctx.scenario().env, x.position());
  row.radius = prediction_radius(ctx.predictor(), x, r);
  return row;
}

}  // namespace

std::pair<SimLog, Metrics> run(const Scenario& scenario) {
  const SimContext ctx(scenario);
  const SimConfig& config = scenario.sim;
  const double b = ctx.path().end();

  RobotState x = ctx.initial_state();
  double s = 0.0;

  const double sigma0 =
      safety_level(scenario.env, ctx.predictor(), x, s, ctx.path());
  if (!(sigma0 > 0.0))
    throw std::runtime_error(
        "run: initial prediction set is not strictly inside the free space");

  SimLog log;
  log.order = x.order();
  log.dim = x.dim();

  const double dt = config.dt;
  const long max_steps = static_cast<long>(std::ceil(config.t_max / dt));

  log.rows.push_back(make_row(ctx, 0.0, x, s));
  bool done = completion_reached(log.rows.back(), ctx.path(), config);

  for (long step = 0; step < max_steps && !done; ++step) {
    const auto [k1, r1] = ctx.coupled_derivative(x, s);
    const auto [k2, r2] = ctx.coupled_derivative(axpy(x, 0.5 * dt, k1), s + 0.5 * dt * r1);
    const auto [k3, r3] = ctx.coupled_derivative(axpy(x, 0.5 * dt, k2), s + 0.5 * dt * r2);
    const auto [k4, r4] = ctx.coupled_derivative(axpy(x, dt, k3), s + dt * r3);

    for (std::size_t i = 0; i < x.derivatives.size(); ++i)
      x.derivatives[i] += (dt / 6.0) * (k1.derivatives[i] + 2.0 * k2.derivatives[i] +
                                        2.0 * k3.derivatives[i] + k4.derivatives[i]);
    const double snew = s + (dt / 6.0) * (r1 + 2.0 * r2 + 2.0 * r3 + r4);
    s = std::clamp(std::max(snew, s), 0.0, b);

    if (!state_finite(x) || !std::isfinite(s))
      throw std::runtime_error("run: state diverged (non-finite values)");

    const double t = static_cast<double>(step + 1) * dt;
    log.rows.push_back(make_row(ctx, t, x, s));
    done = completion_reached(log.rows.back(), ctx.path(), config);
  }

  Metrics metrics = compute_metrics(log, ctx.path(), config);
  return {std::move(log), metrics};
}

Metrics compute_metrics(const SimLog& log, const ReferencePath& path,
                        const SimConfig& config) {
  if (log.rows.empty()) throw std::domain_error("compute_metrics: empty log");
  Metrics metrics;
  metrics.min_clearance = log.rows.front().free_distance;
  double err_sum = 0.0;
  for (const LogRow& row : log.rows) {
    metrics.min_clearance = std::min(metrics.min_clearance, row.free_distance);
    metrics.max_path_error = std::max(metrics.max_path_error, row.path_error);
    err_sum += row.path_error;
    if (!metrics.completed && completion_reached(row, path, config)) {
      metrics.completed = true;
      metrics.travel_time = row.t;
    }
  }
  metrics.mean_path_error = err_sum / static_cast<double>(log.rows.size());
  return metrics;
}

std::string log_to_csv(const SimLog& log) {
  std::string out = "t,s,sdot";
  for (int k = 0; k < log.order; ++k)
    for (int i = 0; i < log.dim; ++i)
      out += ",p" + std::to_string(k) + "_" + axis_name(i);
  out += ",sigma,dF,radius,path_error\n";

  for (const LogRow& row : log.rows) {
    append_double(out, row.t);
    out += ',';
    append_double(out, row.s);
    out += ',';
    append_double(out, row.sdot);
    for (const Vec& block : row.derivatives)
      for (Eigen::Index i = 0; i < block.size(); ++i) {
        out += ',';
        append_double(out, block[i]);
      }
    out += ',';
    append_double(out, row.sigma);
    out += ',';
    append_double(out, row.free_distance);
    out += ',';
    append_double(out, row.radius);
    out += ',';
    append_double(out, row.path_error);
    out += '\n';
  }
  return out;
}

std::string metrics_to_json(const Metrics& metrics) {
  nlohmann::json j;
  j["completed"] = metrics.completed;
  if (metrics.travel_time)
    j["travel_time"] = *metrics.travel_time;
  else
    j["travel_time"] = nullptr;
  j["min_clearance"] = metrics.min_clearance;
  j["mean_path_error"] = metrics.mean_path_error;
  j["max_path_error"] = metrics.max_path_error;
  return j.dump(2) + "\n";
}

}  // namespace timegov
