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

#ifndef TIMEGOV_REFPATH_HPP
#define TIMEGOV_REFPATH_HPP

#include <vector>

#include "timegov/environment.hpp"
#include "timegov/geometry.hpp"

namespace timegov {

/// Arc-length-parametrized polyline r(s) : [0, length] -> R^d.
class ReferencePath {
 public:
  /// Builds the path and its cumulative arc lengths. Throws
  /// std::invalid_argument for fewer than two waypoints or a zero-length
  /// segment.
  explicit ReferencePath(std::vector<Vec> waypoints);

  double start() const { return 0.0; }
  double end() const { return cumulative_.back(); }
  double length() const { return cumulative_.back(); }
  const std::vector<Vec>& waypoints() const { return waypoints_; }
  int dim() const { return static_cast<int>(waypoints_.front().size()); }

  /// Linear interpolation at arc length s; out-of-range s is clamped.
  Vec eval(double s) const;

  /// Unit tangent of the segment containing s, right-continuous at knots
  /// (a knot uses the following segment; s = end uses the last segment).
  Vec tangent(double s) const;

 private:
  // Index of the segment whose arc-length interval contains s.
  std::size_t segment_index(double s) const;

  std::vector<Vec> waypoints_;
  std::vector<double> cumulative_;  // cumulative_[0] = 0
};

struct ClearanceViolation {
  double s;
  double free_distance;
};

/// Samples the path on a grid of spacing <= sample_step (always including
/// endpoints and knots) and reports every sample with d_F below margin.
/// An empty result means the path passed validation.
std::vector<ClearanceViolation> validate_clearance(const Environment& env,
                                                   const ReferencePath& path,
                                                   double margin,
                                                   double sample_step);

}  // namespace timegov

#endif  // TIMEGOV_REFPATH_HPP
