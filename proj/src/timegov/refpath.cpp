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

#include "timegov/refpath.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace timegov {

ReferencePath::ReferencePath(std::vector<Vec> waypoints)
    : waypoints_(std::move(waypoints)) {
  if (waypoints_.size() < 2)
    throw std::invalid_argument("reference path needs at least 2 waypoints");
  cumulative_.reserve(waypoints_.size());
  cumulative_.push_back(0.0);
  for (std::size_t i = 1; i < waypoints_.size(); ++i) {
    if (waypoints_[i].size() != waypoints_.front().size())
      throw std::invalid_argument("reference path: waypoint dimension mismatch");
    const double seg = (waypoints_[i] - waypoints_[i - 1]).norm();
    if (seg <= 0.0)
      throw std::invalid_argument("reference path: zero-length segment");
    cumulative_.push_back(cumulative_.back() + seg);
  }
}

std::size_t ReferencePath::segment_index(double s) const {
  // First knot strictly greater than s gives the right-continuous segment.
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), s);
  std::size_t i = static_cast<std::size_t>(it - cumulative_.begin());
  if (i == 0) return 0;
  if (i >= cumulative_.size()) return cumulative_.size() - 2;
  return i - 1;
}

Vec ReferencePath::eval(double s) const {
  s = std::clamp(s, 0.0, end());
  const std::size_t i = segment_index(s);
  const double seg_len = cumulative_[i + 1] - cumulative_[i];
  const double alpha = (s - cumulative_[i]) / seg_len;
  return waypoints_[i] + alpha * (waypoints_[i + 1] - waypoints_[i]);
}

Vec ReferencePath::tangent(double s) const {
  s = std::clamp(s, 0.0, end());
  const std::size_t i = segment_index(s);
  Vec t = waypoints_[i + 1] - waypoints_[i];
  return t / t.norm();
}

std::vector<ClearanceViolation> validate_clearance(const Environment& env,
                                                   const ReferencePath& path,
                                                   double margin,
                                                   double sample_step) {
  if (sample_step <= 0.0)
    throw std::invalid_argument("validate_clearance: sample_step must be > 0");

  std::set<double> samples;
  double acc = 0.0;
  samples.insert(0.0);
  samples.insert(path.end());
  const auto& wps = path.waypoints();
  for (std::size_t i = 1; i < wps.size(); ++i) {
    acc += (wps[i] - wps[i - 1]).norm();
    samples.insert(acc);
  }
  const int grid = static_cast<int>(std::ceil(path.length() / sample_step));
  for (int k = 1; k < grid; ++k)
    samples.insert(path.length() * static_cast<double>(k) / grid);

  std::vector<ClearanceViolation> violations;
  for (double s : samples) {
    const double d = point_free_distance(env, path.eval(s));
    if (d < margin) violations.push_back({s, d});
  }
  return violations;
}

}  // namespace timegov
