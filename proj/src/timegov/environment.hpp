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

#ifndef TIMEGOV_ENVIRONMENT_HPP
#define TIMEGOV_ENVIRONMENT_HPP

#include <vector>

#include "timegov/geometry.hpp"

namespace timegov {

/// World model: convex workspace polygon, convex obstacles (non-convex
/// obstacles are supplied as unions), robot radius and required path
/// clearance. Immutable after construction; queries are pure.
struct Environment {
  Polytope workspace;
  std::vector<ConvexBody> obstacles;
  double robot_radius = 0.0;
  double clearance = 0.0;
};

void validate_environment(const Environment& env);

/// Distance of the robot center p to the free-space boundary: zero when the
/// robot ball B(p, radius) leaves the workspace or touches an obstacle.
double point_free_distance(const Environment& env, const Vec& p);

/// Same query for a convex set of robot-center positions; coincides with
/// point_free_distance when the body degenerates to a point.
double set_free_distance(const Environment& env, const ConvexBody& body);

bool in_clearance(const Environment& env, const Vec& p, double margin);

}  // namespace timegov

#endif  // TIMEGOV_ENVIRONMENT_HPP
