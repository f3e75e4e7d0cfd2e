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

#ifndef TIMEGOV_PHD_HPP
#define TIMEGOV_PHD_HPP

#include <vector>

#include "timegov/geometry.hpp"

namespace timegov {

/// State of an nth-order, d-dimensional integrator robot: the stacked
/// position derivatives p^(0) .. p^(n-1).
struct RobotState {
  std::vector<Vec> derivatives;

  int order() const { return static_cast<int>(derivatives.size()); }
  int dim() const { return static_cast<int>(derivatives.front().size()); }
  const Vec& position() const { return derivatives.front(); }
};

/// Returns (r, 0, ..., 0): the stable state at reference point r.
RobotState rest_state(const Vec& r, int order);

/// Proportional-and-higher-order-derivative control gains: the monic
/// characteristic polynomial coefficients a_0 .. a_n (a_n = 1) obtained by
/// expanding prod_k (x - root_k) for strictly negative real roots.
struct PhdGains {
  std::vector<double> roots;
  std::vector<double> coeffs;  // size roots.size() + 1, last entry 1

  int order() const { return static_cast<int>(roots.size()); }
};

/// Expands the characteristic polynomial of the given strictly negative
/// real roots by exact incremental multiplication (integer-exact for
/// integer roots). Throws std::domain_error for any root >= 0.
PhdGains gains_from_roots(const std::vector<double>& roots);

/// Gains of order n-1 from the input roots with one occurrence of the
/// maximum root removed. Requires n >= 2.
PhdGains reduced_gains(const std::vector<double>& roots);

/// Companion matrix: superdiagonal ones, last row (-a_0, ..., -a_{n-1}).
Mat companion(const PhdGains& gains);

/// Roots recovered from the expanded coefficients: companion eigenvalues
/// followed by a Newton polish on the polynomial, sorted ascending.
std::vector<double> recover_roots(const PhdGains& gains);

/// Control acceleration p^(n) = -sum_k a_k p^(k) + a_0 r + a_1 tangent*sdot.
Vec phd_accel(const PhdGains& gains, const RobotState& x, const Vec& r,
              const Vec& r_tangent, double sdot);

}  // namespace timegov

#endif  // TIMEGOV_PHD_HPP
