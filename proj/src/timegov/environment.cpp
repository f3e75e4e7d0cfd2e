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

#include "timegov/environment.hpp"

#include <algorithm>
#include <stdexcept>

namespace timegov {

void validate_environment(const Environment& env) {
  if (env.robot_radius <= 0.0)
    throw std::invalid_argument("environment: robot_radius must be > 0");
  if (env.clearance <= 0.0)
    throw std::invalid_argument("environment: clearance must be > 0");
  if (env.workspace.vertices.size() < 3)
    throw std::invalid_argument("environment: workspace needs >= 3 vertices");
  const int dim = static_cast<int>(env.workspace.vertices.front().size());
  for (const ConvexBody& obstacle : env.obstacles) {
    if (body_dim(obstacle) != dim)
      throw std::invalid_argument("environment: obstacle dimension mismatch");
  }
}

double set_free_distance(const Environment& env, const ConvexBody& body) {
  double dist = containment_margin(body, env.workspace);
  for (const ConvexBody& obstacle : env.obstacles) {
    dist = std::min(dist, gjk_distance(body, obstacle));
    if (dist <= env.robot_radius) break;
  }
  return std::max(0.0, dist - env.robot_radius);
}

double point_free_distance(const Environment& env, const Vec& p) {
  return set_free_distance(env, Polytope{{p}});
}

bool in_clearance(const Environment& env, const Vec& p, double margin) {
  if (margin < 0.0) throw std::invalid_argument("in_clearance: margin must be >= 0");
  return point_free_distance(env, p) >= margin;
}

}  // namespace timegov
