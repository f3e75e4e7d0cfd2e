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

#include "timegov/governor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace timegov {

double safety_level(const Environment& env, const MotionPredictor& predictor,
                    const RobotState& x, double s, const ReferencePath& path) {
  return set_free_distance(env, predict(predictor, x, s, path));
}

double safe_rate(const GovernorParams& params, double sigma, double s) {
  if (s > params.s_max) throw std::domain_error("safe_rate: s beyond path end");
  if (sigma < 0.0) throw std::domain_error("safe_rate: negative safety level");
  return std::min(params.kappa_sigma * sigma, params.kappa_s * (params.s_max - s));
}

double heuristic_rate(const HeuristicParams& params, double path_error, double s) {
  const double saturated =
      params.sdot_desired * (1.0 - params.eta * std::tanh(path_error));
  return std::max(0.0, std::min(saturated, params.kappa_s * (params.s_max - s)));
}

}  // namespace timegov
