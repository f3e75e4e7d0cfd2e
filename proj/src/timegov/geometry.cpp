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

#include "timegov/geometry.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace timegov {

namespace {

constexpr double kGjkRelTol = 1e-12;   // relative simplex-progress tolerance
constexpr double kGjkGapTol = 1e-10;   // certified duality-gap bound
constexpr int kGjkMaxIter = 128;

}  // namespace

int body_dim(const ConvexBody& body) {
  return std::visit(
      [](const auto& b) -> int {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Disc>) {
          return static_cast<int>(b.center.size());
        } else if constexpr (std::is_same_v<T, Polytope>) {
          if (b.vertices.empty()) throw std::domain_error("polytope has no vertices");
          return static_cast<int>(b.vertices.front().size());
        } else {
          return static_cast<int>(b.center.size());
        }
      },
      body);
}

Mat sym_sqrt(const Mat& m) {
  if (m.rows() != m.cols()) throw std::domain_error("sym_sqrt: matrix not square");
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-9)
    throw std::domain_error("sym_sqrt: matrix not symmetric");
  Eigen::SelfAdjointEigenSolver<Mat> eig(m);
  if (eig.info() != Eigen::Success)
    throw std::domain_error("sym_sqrt: eigendecomposition failed");
  Vec vals = eig.eigenvalues();
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (vals[i] < -1e-9) throw std::domain_error("sym_sqrt: matrix not PSD");
    vals[i] = std::sqrt(std::max(vals[i], 0.0));
  }
  return eig.eigenvectors() * vals.asDiagonal() * eig.eigenvectors().transpose();
}

Vec support_point(const ConvexBody& body, const Vec& direction) {
  const double norm = direction.norm();
  if (norm <= 0.0 || !std::isfinite(norm))
    throw std::domain_error("support_point: direction must be nonzero");
  return std::visit(
      [&](const auto& b) -> Vec {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, Disc>) {
          return b.center + (b.radius / norm) * direction;
        } else if constexpr (std::is_same_v<T, Polytope>) {
          if (b.vertices.empty()) throw std::domain_error("polytope has no vertices");
          const Vec* best = &b.vertices.front();
          double best_dot = best->dot(direction);
          for (const Vec& v : b.vertices) {
            const double d = v.dot(direction);
            if (d > best_dot) {
              best_dot = d;
              best = &v;
            }
          }
          return *best;
        } else {
          const Vec qu = b.shape * direction;
          const double denom = std::sqrt(direction.dot(qu));
          if (denom <= 0.0 || b.scale <= 0.0) return b.center;
          return b.center + (b.scale / denom) * qu;
        }
      },
      body);
}

double support_value(const ConvexBody& body, const Vec& direction) {
  return support_point(body, direction).dot(direction);
}

namespace {

// Closest point of the convex hull of `pts` to the origin. Enumerates the
// nonempty subsets, solves the equality-constrained least-norm problem on
// each, and keeps the minimum-norm point whose barycentric coordinates are
// all nonnegative. Writes the supporting subset back into `pts`.
Vec simplex_closest_point(std::vector<Vec>& pts) {
  const int m = static_cast<int>(pts.size());
  const int dim = static_cast<int>(pts.front().size());
  double best_norm2 = std::numeric_limits<double>::infinity();
  Vec best = pts.front();
  std::vector<Vec> best_subset;

  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    const int k = static_cast<int>(idx.size());
    if (k > dim + 1) continue;

    // KKT system for min ||sum l_i p_i||^2 subject to sum l_i = 1.
    Mat kkt = Mat::Zero(k + 1, k + 1);
    Vec rhs = Vec::Zero(k + 1);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) kkt(i, j) = pts[idx[i]].dot(pts[idx[j]]);
      kkt(i, k) = 1.0;
      kkt(k, i) = 1.0;
    }
    rhs[k] = 1.0;
    Eigen::FullPivLU<Mat> lu(kkt);
    if (!lu.isInvertible()) continue;
    const Vec sol = lu.solve(rhs);

    bool feasible = true;
    for (int i = 0; i < k; ++i)
      if (sol[i] < -1e-12) feasible = false;
    if (!feasible) continue;

    Vec cand = Vec::Zero(dim);
    for (int i = 0; i < k; ++i) cand += sol[i] * pts[idx[i]];
    const double n2 = cand.squaredNorm();
    if (n2 < best_norm2) {
      best_norm2 = n2;
      best = cand;
      best_subset.clear();
      for (int i = 0; i < k; ++i) best_subset.push_back(pts[idx[i]]);
    }
  }
  if (!best_subset.empty()) pts = std::move(best_subset);
  return best;
}

}  // namespace

double gjk_distance(const ConvexBody& a, const ConvexBody& b) {
  const int dim = body_dim(a);
  if (body_dim(b) != dim)
    throw std::domain_error("gjk_distance: dimension mismatch");

  auto minkowski_support = [&](const Vec& u) -> Vec {
    return support_point(a, u) - support_point(b, -u);
  };

  Vec dir = Vec::Zero(dim);
  dir[0] = 1.0;
  std::vector<Vec> simplex = {minkowski_support(dir)};

  double prev_norm = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < kGjkMaxIter; ++iter) {
    const Vec v = simplex_closest_point(simplex);
    const double vnorm = v.norm();
    if (vnorm <= kGjkGapTol) return 0.0;

    const Vec w = minkowski_support(-v);
    // Duality gap: distance is certified within (||v|| - <v,w>/||v||).
    const double gap = vnorm - v.dot(w) / vnorm;
    if (gap <= kGjkGapTol) return vnorm;
    if (prev_norm - vnorm <= kGjkRelTol * vnorm) return vnorm;
    prev_norm = vnorm;
    simplex.push_back(w);
  }
  throw std::runtime_error("gjk_distance: iteration limit exceeded");
}

double containment_margin(const ConvexBody& body, const Polytope& region) {
  const std::size_t n = region.vertices.size();
  if (n < 3) throw std::domain_error("containment_margin: region needs >= 3 vertices");
  if (region.vertices.front().size() != 2)
    throw std::domain_error("containment_margin: region must be planar");

  // Shoelace area; counterclockwise input is required.
  double area2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec& p = region.vertices[i];
    const Vec& q = region.vertices[(i + 1) % n];
    area2 += p[0] * q[1] - q[0] * p[1];
  }
  if (area2 <= 1e-12)
    throw std::domain_error(
        "containment_margin: region degenerate or not counterclockwise");

  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec& p = region.vertices[i];
    const Vec& q = region.vertices[(i + 1) % n];
    Vec normal(2);
    normal << q[1] - p[1], p[0] - q[0];  // outward for CCW winding
    const double len = normal.norm();
    if (len <= 1e-15) continue;  // repeated vertex
    normal /= len;
    margin = std::min(margin, normal.dot(p) - support_value(body, normal));
  }
  return margin;
}

}  // namespace timegov
