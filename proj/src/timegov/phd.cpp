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

#include "timegov/phd.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace timegov {

RobotState rest_state(const Vec& r, int order) {
  RobotState x;
  x.derivatives.assign(static_cast<std::size_t>(order), Vec::Zero(r.size()));
  x.derivatives.front() = r;
  return x;
}

PhdGains gains_from_roots(const std::vector<double>& roots) {
  if (roots.empty()) throw std::domain_error("gains_from_roots: no roots given");
  for (double root : roots)
    if (!(root < 0.0))
      throw std::domain_error("gains_from_roots: roots must be strictly negative");

  std::vector<double> coeffs = {1.0};  // constant polynomial 1
  for (double root : roots) {
    // Multiply by (x - root).
    std::vector<double> next(coeffs.size() + 1, 0.0);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      next[k + 1] += coeffs[k];
      next[k] -= root * coeffs[k];
    }
    coeffs = std::move(next);
  }
  return PhdGains{roots, std::move(coeffs)};
}

PhdGains reduced_gains(const std::vector<double>& roots) {
  if (roots.size() < 2)
    throw std::domain_error("reduced_gains: requires order >= 2");
  std::vector<double> remaining = roots;
  auto it = std::max_element(remaining.begin(), remaining.end());
  remaining.erase(it);
  return gains_from_roots(remaining);
}

Mat companion(const PhdGains& gains) {
  const int n = gains.order();
  Mat a = Mat::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) a(i, i + 1) = 1.0;
  for (int k = 0; k < n; ++k) a(n - 1, k) = -gains.coeffs[k];
  return a;
}

std::vector<double> recover_roots(const PhdGains& gains) {
  const int n = gains.order();
  Eigen::EigenSolver<Mat> es(companion(gains));
  std::vector<double> roots;
  roots.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = es.eigenvalues()[i].real();
    // Newton polish against the coefficient polynomial; the eigensolver
    // estimate is already within a few ulps of the basin.
    for (int iter = 0; iter < 8; ++iter) {
      double p = gains.coeffs[n];
      double dp = 0.0;
      for (int k = n - 1; k >= 0; --k) {
        dp = dp * x + p;
        p = p * x + gains.coeffs[static_cast<std::size_t>(k)];
      }
      if (dp == 0.0) break;
      const double step = p / dp;
      x -= step;
      if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(x))) break;
    }
    roots.push_back(x);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Vec phd_accel(const PhdGains& gains, const RobotState& x, const Vec& r,
              const Vec& r_tangent, double sdot) {
  const int n = gains.order();
  if (x.order() != n) throw std::domain_error("phd_accel: state order mismatch");
  const int d = x.dim();
  if (r.size() != d || r_tangent.size() != d)
    throw std::domain_error("phd_accel: reference dimension mismatch");

  Vec accel = gains.coeffs[0] * r + gains.coeffs[1] * sdot * r_tangent;
  for (int k = 0; k < n; ++k) accel -= gains.coeffs[k] * x.derivatives[k];
  return accel;
}

}  // namespace timegov
