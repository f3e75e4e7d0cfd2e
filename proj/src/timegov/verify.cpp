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

#include "timegov/verify.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace timegov {

std::vector<Vec> support_directions(int dim, int count) {
  std::vector<Vec> dirs;
  if (dim == 1) {
    Vec plus(1), minus(1);
    plus << 1.0;
    minus << -1.0;
    return {plus, minus};
  }
  if (dim == 2) {
    dirs.reserve(count);
    for (int k = 0; k < count; ++k) {
      const double angle = 2.0 * M_PI * k / count;
      Vec u(2);
      u << std::cos(angle), std::sin(angle);
      dirs.push_back(u);
    }
    return dirs;
  }
  std::mt19937_64 rng(0x5eedULL);
  std::normal_distribution<double> normal(0.0, 1.0);
  dirs.reserve(count);
  for (int k = 0; k < count; ++k) {
    Vec u(dim);
    do {
      for (int i = 0; i < dim; ++i) u[i] = normal(rng);
    } while (u.norm() < 1e-6);
    dirs.push_back(u / u.norm());
  }
  return dirs;
}

double sampled_containment_margin(const ConvexBody& body, const Vec& q,
                                  const std::vector<Vec>& directions) {
  double margin = std::numeric_limits<double>::infinity();
  for (const Vec& u : directions)
    margin = std::min(margin, support_value(body, u) - q.dot(u));
  return margin;
}

std::vector<RobotState> simulate_frozen(const PhdGains& gains, const RobotState& x0,
                                        const Vec& r, double horizon, double dt) {
  if (horizon <= 0.0 || dt <= 0.0)
    throw std::invalid_argument("simulate_frozen: horizon and dt must be > 0");
  const Vec tangent = Vec::Zero(r.size());

  auto derivative = [&](const RobotState& x) {
    RobotState dx;
    dx.derivatives.reserve(x.derivatives.size());
    for (std::size_t k = 1; k < x.derivatives.size(); ++k)
      dx.derivatives.push_back(x.derivatives[k]);
    dx.derivatives.push_back(phd_accel(gains, x, r, tangent, 0.0));
    return dx;
  };
  auto axpy = [](const RobotState& x, double h, const RobotState& k) {
    RobotState out = x;
    for (std::size_t i = 0; i < out.derivatives.size(); ++i)
      out.derivatives[i] += h * k.derivatives[i];
    return out;
  };

  const long steps = static_cast<long>(std::ceil(horizon / dt));
  std::vector<RobotState> trajectory;
  trajectory.reserve(steps + 1);
  trajectory.push_back(x0);
  RobotState x = x0;
  for (long i = 0; i < steps; ++i) {
    const RobotState k1 = derivative(x);
    const RobotState k2 = derivative(axpy(x, 0.5 * dt, k1));
    const RobotState k3 = derivative(axpy(x, 0.5 * dt, k2));
    const RobotState k4 = derivative(axpy(x, dt, k3));
    for (std::size_t b = 0; b < x.derivatives.size(); ++b)
      x.derivatives[b] += (dt / 6.0) * (k1.derivatives[b] + 2.0 * k2.derivatives[b] +
                                        2.0 * k3.derivatives[b] + k4.derivatives[b]);
    for (const Vec& block : x.derivatives)
      if (!block.allFinite())
        throw std::runtime_error("simulate_frozen: trajectory diverged");
    trajectory.push_back(x);
  }
  return trajectory;
}

double containment_trial(const MotionPredictor& predictor, const PhdGains& gains,
                         const RobotState& x0, const Vec& r, double horizon,
                         double dt) {
  const ConvexBody body = predict(predictor, x0, r);
  const auto dirs = support_directions(x0.dim(), 256);

  // The prediction set is fixed at t = 0: precompute its support values.
  std::vector<double> support(dirs.size());
  bool degenerate = prediction_radius(predictor, x0, r) <= 0.0;
  if (!degenerate)
    for (std::size_t i = 0; i < dirs.size(); ++i)
      support[i] = support_value(body, dirs[i]);

  const auto trajectory = simulate_frozen(gains, x0, r, horizon, dt);
  double worst = std::numeric_limits<double>::infinity();
  for (const RobotState& x : trajectory) {
    if (degenerate) {
      worst = std::min(worst, -(x.position() - r).norm());
      continue;
    }
    double margin = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < dirs.size(); ++i)
      margin = std::min(margin, support[i] - x.position().dot(dirs[i]));
    worst = std::min(worst, margin);
  }
  return worst;
}

double lyapunov_residual(const Mat& a, const Mat& p_small) {
  if (a.rows() != a.cols() || p_small.rows() != p_small.cols() ||
      a.rows() != p_small.rows())
    throw std::domain_error("lyapunov_residual: size mismatch");
  const Mat residual = a.transpose() * p_small + p_small * a +
                       Mat::Identity(a.rows(), a.cols());
  return residual.jacobiSvd().singularValues()[0];
}

DecayCheck radius_decay_check(const std::vector<RobotState>& trajectory,
                              const MotionPredictor& predictor, const Vec& r) {
  if (trajectory.empty())
    throw std::invalid_argument("radius_decay_check: empty trajectory");
  DecayCheck check;
  if (const auto* cert = std::get_if<LyapunovCertificate>(&predictor.variant)) {
    double prev = lyap_norm(*cert, trajectory.front(), r);
    for (std::size_t i = 1; i < trajectory.size(); ++i) {
      const double cur = lyap_norm(*cert, trajectory[i], r);
      check.max_norm_increase = std::max(check.max_norm_increase, cur - prev);
      prev = cur;
    }
    check.final_radius = cert->shape_norm * prev;
  } else {
    const auto& reduced = std::get<PhdGains>(predictor.variant);
    check.final_radius = vandermonde_radius(reduced, trajectory.back(), r);
  }
  return check;
}

}  // namespace timegov
