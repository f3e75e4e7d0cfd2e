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

#ifndef TIMEGOV_PREDICTION_HPP
#define TIMEGOV_PREDICTION_HPP

#include <variant>

#include "timegov/geometry.hpp"
#include "timegov/phd.hpp"
#include "timegov/refpath.hpp"

namespace timegov {

/// Solution of the n x n Lyapunov equation A'P + PA + I = 0 for the
/// companion matrix A of the closed-loop gains. The full nd x nd matrix is
/// P_small (x) I_d by the Kronecker structure, so the projected ellipsoid
/// shape I'P^{-1}I reduces to (P_small^{-1})(0,0) * I_d.
struct LyapunovCertificate {
  Mat P_small;
  double shape_scalar;  // (P_small^{-1})(0,0)
  double shape_norm;    // sqrt(shape_scalar)
};

/// Solves A'P + PA + I = 0 for Hurwitz companion A; throws
/// std::runtime_error if the residual exceeds 1e-10.
LyapunovCertificate solve_lyapunov(const Mat& companion);

/// Weighted norm ||x - (r,0,...,0)||_P computed blockwise from P_small.
double lyap_norm(const LyapunovCertificate& cert, const RobotState& x, const Vec& r);

/// Projected Lyapunov motion ellipsoid centered at r.
ConvexBody lyap_ellipsoid(const LyapunovCertificate& cert, const RobotState& x,
                          const Vec& r);

/// Radius of the Lyapunov ellipsoid relative to r: shape_norm * lyap_norm.
double lyap_radius(const LyapunovCertificate& cert, const RobotState& x, const Vec& r);

/// Vandermonde motion simplex: the n+1 vertices r and, for m = 0..n-1, the
/// partial sums sum_{k<=m} (a_k / a_0) p^(k) with reduced-gain coefficients.
ConvexBody vandermonde_simplex(const PhdGains& reduced, const RobotState& x,
                               const Vec& r);

/// Maximum vertex distance of the Vandermonde simplex to r.
double vandermonde_radius(const PhdGains& reduced, const RobotState& x, const Vec& r);

/// Frozen-parameter motion predictor, dispatching over the two set families.
struct MotionPredictor {
  std::variant<LyapunovCertificate, PhdGains> variant;

  static MotionPredictor lyapunov(const PhdGains& gains);
  static MotionPredictor vandermonde(const std::vector<double>& roots);

  bool is_lyapunov() const {
    return std::holds_alternative<LyapunovCertificate>(variant);
  }
};

ConvexBody predict(const MotionPredictor& predictor, const RobotState& x, const Vec& r);
ConvexBody predict(const MotionPredictor& predictor, const RobotState& x, double s,
                   const ReferencePath& path);
double prediction_radius(const MotionPredictor& predictor, const RobotState& x,
                         const Vec& r);

}  // namespace timegov

#endif  // TIMEGOV_PREDICTION_HPP
