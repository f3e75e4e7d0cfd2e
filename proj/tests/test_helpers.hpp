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

#ifndef TIMEGOV_TEST_HELPERS_HPP
#define TIMEGOV_TEST_HELPERS_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "timegov/geometry.hpp"

namespace timegov::testing {

inline Vec vec2(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}

/// Boundary samples of a 2D convex body, spaced at most `spacing` apart
/// along discs/ellipse arcs and polytope chords. Chord interiors are body
/// points too, so the sample set never underestimates the set distance.
inline std::vector<Vec> boundary_points(const ConvexBody& body, double spacing) {
  std::vector<Vec> pts;
  if (const auto* disc = std::get_if<Disc>(&body)) {
    const int n = std::max(16, static_cast<int>(std::ceil(
                                   2.0 * M_PI * disc->radius / spacing)));
    for (int k = 0; k < n; ++k) {
      const double a = 2.0 * M_PI * k / n;
      pts.push_back(disc->center + disc->radius * vec2(std::cos(a), std::sin(a)));
    }
    return pts;
  }
  if (const auto* ell = std::get_if<Ellipsoid>(&body)) {
    const Mat root = sym_sqrt(ell->shape);
    const double max_axis = ell->scale * std::sqrt(
        Eigen::SelfAdjointEigenSolver<Mat>(ell->shape).eigenvalues().maxCoeff());
    const int n = std::max(16, static_cast<int>(std::ceil(
                                   2.0 * M_PI * max_axis / spacing)));
    for (int k = 0; k < n; ++k) {
      const double a = 2.0 * M_PI * k / n;
      pts.push_back(ell->center + ell->scale * root * vec2(std::cos(a), std::sin(a)));
    }
    return pts;
  }
  const auto& poly = std::get<Polytope>(body);
  for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < poly.vertices.size(); ++j) {
      const Vec d = poly.vertices[j] - poly.vertices[i];
      const int n = std::max(1, static_cast<int>(std::ceil(d.norm() / spacing)));
      for (int k = 0; k <= n; ++k)
        pts.push_back(poly.vertices[i] + (static_cast<double>(k) / n) * d);
    }
  }
  if (poly.vertices.size() == 1) pts.push_back(poly.vertices.front());
  return pts;
}

/// Membership test for the body shapes used by the distance oracle
/// (disc, ellipse, triangle).
inline bool point_in_body(const ConvexBody& body, const Vec& q) {
  if (const auto* disc = std::get_if<Disc>(&body))
    return (q - disc->center).norm() <= disc->radius;
  if (const auto* ell = std::get_if<Ellipsoid>(&body)) {
    const Vec d = q - ell->center;
    return d.dot(ell->shape.ldlt().solve(d)) <= ell->scale * ell->scale;
  }
  const auto& poly = std::get<Polytope>(body);
  if (poly.vertices.size() != 3) return false;  // samples cover degenerate hulls
  const auto orient = [](const Vec& a, const Vec& b, const Vec& c) {
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  };
  const double d1 = orient(poly.vertices[0], poly.vertices[1], q);
  const double d2 = orient(poly.vertices[1], poly.vertices[2], q);
  const double d3 = orient(poly.vertices[2], poly.vertices[0], q);
  const bool has_neg = d1 < 0 || d2 < 0 || d3 < 0;
  const bool has_pos = d1 > 0 || d2 > 0 || d3 > 0;
  return !(has_neg && has_pos);
}

/// Reference distance between a disc and an arbitrary 2D convex body:
/// the disc side is exact, the other side is boundary-sampled, so the
/// result is within one sampling step of the true distance. Containment
/// (either way) collapses to zero.
inline double brute_force_distance(const ConvexBody& a, const ConvexBody& b,
                                   double spacing) {
  const auto& disc = std::get<Disc>(a);
  if (point_in_body(b, disc.center)) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (const Vec& p : boundary_points(b, spacing))
    best = std::min(best, (p - disc.center).norm() - disc.radius);
  return std::max(0.0, best);
}

}  // namespace timegov::testing

#endif  // TIMEGOV_TEST_HELPERS_HPP
