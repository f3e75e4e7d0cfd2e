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

#ifndef TIMEGOV_GEOMETRY_HPP
#define TIMEGOV_GEOMETRY_HPP

#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace timegov {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Closed disc (ball in d dimensions).
struct Disc {
  Vec center;
  double radius = 0.0;
};

/// Convex hull of a nonempty vertex list. Vertices need not be extreme
/// points; the support argmax handles redundancy.
struct Polytope {
  std::vector<Vec> vertices;
};

/// The set {center + scale * Q^(1/2) v : ||v|| <= 1} for PSD shape matrix Q.
struct Ellipsoid {
  Vec center;
  Mat shape;
  double scale = 0.0;
};

using ConvexBody = std::variant<Disc, Polytope, Ellipsoid>;

int body_dim(const ConvexBody& body);

/// Unique symmetric PSD square root of a symmetric PSD matrix, by
/// eigendecomposition. Throws std::domain_error for non-symmetric or
/// indefinite input (eigenvalue tolerance 1e-9).
Mat sym_sqrt(const Mat& m);

/// Point of the body that maximizes <x, direction> over the body.
Vec support_point(const ConvexBody& body, const Vec& direction);

/// Support function h(u) = max over body of <x, u>.
double support_value(const ConvexBody& body, const Vec& direction);

/// Euclidean distance between two convex bodies, zero on overlap.
/// Computed on the Minkowski difference via support points; certified
/// absolute accuracy <= 1e-9.
double gjk_distance(const ConvexBody& a, const ConvexBody& b);

/// Signed margin of body inside a convex counterclockwise polygon region:
/// min over region edges of (edge offset - h_body(outward normal)).
/// Nonnegative iff body is contained; the negative value is the depth of
/// the deepest protrusion.
double containment_margin(const ConvexBody& body, const Polytope& region);

}  // namespace timegov

#endif  // TIMEGOV_GEOMETRY_HPP
