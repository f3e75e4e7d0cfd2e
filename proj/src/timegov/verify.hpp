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

#ifndef TIMEGOV_VERIFY_HPP
#define TIMEGOV_VERIFY_HPP

#include <vector>

#include "timegov/phd.hpp"
#include "timegov/prediction.hpp"

namespace timegov {

/// Unit directions used for sampled support queries: evenly spaced angles
/// in 2D, +/-1 in 1D, a seeded uniform sample on the sphere otherwise.
std::vector<Vec> support_directions(int dim, int count);

/// Signed containment margin of point q in a convex body, sampled over the
/// given support directions: min of h_B(u) - <q, u>. Nonnegative when q is
/// contained (sampling can only overestimate the true margin).
double sampled_containment_margin(const ConvexBody& body, const Vec& q,
                                  const std::vector<Vec>& directions);

/// Frozen-parameter closed-loop states at fixed time steps, from RK4
/// integration of p^(n) = phd_accel(x, r, 0).
std::vector<RobotState> simulate_frozen(const PhdGains& gains, const RobotState& x0,
                                        const Vec& r, double horizon, double dt);

/// Worst signed containment margin of the simulated position trajectory in
/// the prediction set computed at t = 0 (256 support directions). Throws
/// std::runtime_error if the trajectory diverges.
double containment_trial(const MotionPredictor& predictor, const PhdGains& gains,
                         const RobotState& x0, const Vec& r, double horizon,
                         double dt);

/// Spectral norm of A'P + PA + I.
double lyapunov_residual(const Mat& a, const Mat& p_small);

struct DecayCheck {
  double max_norm_increase = 0.0;  // Lyapunov variant: worst per-step increase
  double final_radius = 0.0;       // Vandermonde variant: radius at horizon
};

/// Radius decay along a frozen-parameter trajectory: the Lyapunov norm must
/// be non-increasing per step; the Vandermonde radius must be asymptotically
/// small at the horizon.
DecayCheck radius_decay_check(const std::vector<RobotState>& trajectory,
                              const MotionPredictor& predictor, const Vec& r);

struct ContainmentReport {
  int trials = 0;
  double worst_margin = 0.0;
};

}  // namespace timegov

#endif  // TIMEGOV_VERIFY_HPP
