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

#include "timegov/prediction.hpp"

#include <cmath>
#include <stdexcept>

namespace timegov {

LyapunovCertificate solve_lyapunov(const Mat& companion) {
  const int n = static_cast<int>(companion.rows());
  if (companion.cols() != n)
    throw std::domain_error("solve_lyapunov: matrix not square");

  // Vectorized solve of A'P + PA = -I via the Kronecker identity
  // vec(A'P + PA) = (I (x) A' + A' (x) I) vec(P).
  Mat lhs = Mat::Zero(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        lhs(i + n * j, k + n * j) += companion(k, i);  // A' P term
        lhs(i + n * j, i + n * k) += companion(k, j);  // P A term
      }
  Vec rhs = Vec::Zero(n * n);
  for (int i = 0; i < n; ++i) rhs[i + n * i] = -1.0;

  Eigen::FullPivLU<Mat> lu(lhs);
  if (!lu.isInvertible())
    throw std::runtime_error("solve_lyapunov: singular Lyapunov operator");
  const Vec p_vec = lu.solve(rhs);

  Mat p(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) p(i, j) = p_vec[i + n * j];
  p = 0.5 * (p + p.transpose());

  const double residual =
      (companion.transpose() * p + p * companion + Mat::Identity(n, n)).norm();
  if (!(residual <= 1e-10))
    throw std::runtime_error("solve_lyapunov: residual exceeds tolerance");

  Eigen::FullPivLU<Mat> p_lu(p);
  if (!p_lu.isInvertible())
    throw std::runtime_error("solve_lyapunov: P is singular");
  const double shape_scalar = p_lu.inverse()(0, 0);
  if (!(shape_scalar > 0.0))
    throw std::runtime_error("solve_lyapunov: P not positive definite");

  return LyapunovCertificate{p, shape_scalar, std::sqrt(shape_scalar)};
}

double lyap_norm(const LyapunovCertificate& cert, const RobotState& x, const Vec& r) {
  const int n = x.order();
  if (cert.P_small.rows() != n)
    throw std::domain_error("lyap_norm: state order mismatch");

  // Quadratic form under P_small (x) I_d, blockwise.
  double quad = 0.0;
  for (int j = 0; j < n; ++j) {
    Vec ej = x.derivatives[j];
    if (j == 0) ej -= r;
    for (int k = 0; k < n; ++k) {
      Vec ek = x.derivatives[k];
      if (k == 0) ek -= r;
      quad += cert.P_small(j, k) * ej.dot(ek);
    }
  }
  return std::sqrt(std::max(quad, 0.0));
}

ConvexBody lyap_ellipsoid(const LyapunovCertificate& cert, const RobotState& x,
                          const Vec& r) {
  const int d = static_cast<int>(r.size());
  return Ellipsoid{r, cert.shape_scalar * Mat::Identity(d, d), lyap_norm(cert, x, r)};
}

double lyap_radius(const LyapunovCertificate& cert, const RobotState& x, const Vec& r) {
  return cert.shape_norm * lyap_norm(cert, x, r);
}

ConvexBody vandermonde_simplex(const PhdGains& reduced, const RobotState& x,
                               const Vec& r) {
  const int n = x.order();
  if (n < 2) throw std::domain_error("vandermonde_simplex: requires order >= 2");
  if (reduced.order() != n - 1)
    throw std::domain_error("vandermonde_simplex: reduced gains order mismatch");

  Polytope simplex;
  simplex.vertices.reserve(static_cast<std::size_t>(n) + 1);
  simplex.vertices.push_back(r);
  Vec partial = Vec::Zero(x.dim());
  for (int m = 0; m < n; ++m) {
    partial += (reduced.coeffs[m] / reduced.coeffs[0]) * x.derivatives[m];
    simplex.vertices.push_back(partial);
  }
  return simplex;
}

double vandermonde_radius(const PhdGains& reduced, const RobotState& x, const Vec& r) {
  const ConvexBody body = vandermonde_simplex(reduced, x, r);
  const auto& vertices = std::get<Polytope>(body).vertices;
  double radius = 0.0;
  for (std::size_t i = 1; i < vertices.size(); ++i)
    radius = std::max(radius, (vertices[i] - r).norm());
  return radius;
}

MotionPredictor MotionPredictor::lyapunov(const PhdGains& gains) {
  return MotionPredictor{solve_lyapunov(companion(gains))};
}

MotionPredictor MotionPredictor::vandermonde(const std::vector<double>& roots) {
  return MotionPredictor{reduced_gains(roots)};
}

ConvexBody predict(const MotionPredictor& predictor, const RobotState& x, const Vec& r) {
  if (const auto* cert = std::get_if<LyapunovCertificate>(&predictor.variant))
    return lyap_ellipsoid(*cert, x, r);
  return vandermonde_simplex(std::get<PhdGains>(predictor.variant), x, r);
}

ConvexBody predict(const MotionPredictor& predictor, const RobotState& x, double s,
                   const ReferencePath& path) {
  return predict(predictor, x, path.eval(s));
}

double prediction_radius(const MotionPredictor& predictor, const RobotState& x,
                         const Vec& r) {
  if (const auto* cert = std::get_if<LyapunovCertificate>(&predictor.variant))
    return lyap_radius(*cert, x, r);
  return vandermonde_radius(std::get<PhdGains>(predictor.variant), x, r);
}

}  // namespace timegov
