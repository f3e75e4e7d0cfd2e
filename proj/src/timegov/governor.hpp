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

#ifndef TIMEGOV_GOVERNOR_HPP
#define TIMEGOV_GOVERNOR_HPP

#include "timegov/environment.hpp"
#include "timegov/prediction.hpp"
#include "timegov/refpath.hpp"

namespace timegov {

/// Gains of the safety-throttled rate law sdot = min(k_sigma * sigma,
/// k_s * (s_max - s)).
struct GovernorParams {
  double kappa_sigma = 3.0;
  double kappa_s = 1.0;
  double s_max = 0.0;
};

/// Parameters of the saturated path-error baseline with endpoint
/// stabilization: sdot = min(sdot_d * (1 - eta * tanh(err)), k_s * (s_max - s)).
struct HeuristicParams {
  double sdot_desired = 1.0;
  double eta = 1.0;
  double kappa_s = 1.0;
  double s_max = 0.0;
};

/// Safety level sigma: free-space distance of the predicted motion set.
double safety_level(const Environment& env, const MotionPredictor& predictor,
                    const RobotState& x, double s, const ReferencePath& path);

/// Safe governor rate; zero exactly when sigma = 0 or s = s_max. Throws
/// std::domain_error for s > s_max.
double safe_rate(const GovernorParams& params, double sigma, double s);

/// Heuristic baseline rate.
double heuristic_rate(const HeuristicParams& params, double path_error, double s);

}  // namespace timegov

#endif  // TIMEGOV_GOVERNOR_HPP
