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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "timegov/geometry.hpp"
#include "test_helpers.hpp"

using namespace timegov;
using timegov::testing::vec2;

TEST_CASE("sym_sqrt identity and diagonal") {
  CHECK((sym_sqrt(Mat::Identity(3, 3)) - Mat::Identity(3, 3)).norm() == doctest::Approx(0.0));

  Mat d = Mat::Zero(2, 2);
  d(0, 0) = 4.0;
  d(1, 1) = 9.0;
  const Mat r = sym_sqrt(d);
  CHECK(r(0, 0) == doctest::Approx(2.0));
  CHECK(r(1, 1) == doctest::Approx(3.0));
  CHECK(std::abs(r(0, 1)) < 1e-12);
}

TEST_CASE("sym_sqrt squares back") {
  Mat m(2, 2);
  m << 2, 1, 1, 2;
  const Mat r = sym_sqrt(m);
  CHECK((r * r - m).norm() <= 1e-12);
}

TEST_CASE("sym_sqrt rejects bad input") {
  Mat asym(2, 2);
  asym << 1, 2, 0, 1;
  CHECK_THROWS_AS(sym_sqrt(asym), std::domain_error);

  Mat negdef(2, 2);
  negdef << -1, 0, 0, 1;
  CHECK_THROWS_AS(sym_sqrt(negdef), std::domain_error);
}

TEST_CASE("sym_sqrt on random PSD matrices") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 9);  // up to 10
    Mat a(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) a(i, j) = u(rng);
    const Mat m = a * a.transpose();
    const Mat r = sym_sqrt(m);
    CHECK((r * r - m).norm() <= 1e-10 * std::max(1.0, m.norm()));
  }
}

TEST_CASE("support_point per variant") {
  const ConvexBody disc = Disc{vec2(1, 1), 2.0};
  CHECK((support_point(disc, vec2(0, 1)) - vec2(1, 3)).norm() < 1e-12);

  const ConvexBody tri = Polytope{{vec2(0, 0), vec2(2, 0), vec2(0, 2)}};
  CHECK((support_point(tri, vec2(1, 0)) - vec2(2, 0)).norm() < 1e-12);

  Mat q = Mat::Zero(2, 2);
  q(0, 0) = 4.0;
  q(1, 1) = 1.0;
  const ConvexBody ell = Ellipsoid{vec2(0, 0), q, 1.0};
  CHECK((support_point(ell, vec2(1, 0)) - vec2(2, 0)).norm() < 1e-12);

  CHECK_THROWS_AS(support_point(disc, vec2(0, 0)), std::domain_error);
}

TEST_CASE("support point maximizes over sampled body points") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  Mat q(2, 2);
  q << 3, 1, 1, 2;
  const ConvexBody bodies[] = {
      Disc{vec2(u(rng), u(rng)), 1.5},
      Polytope{{vec2(u(rng), u(rng)), vec2(u(rng), u(rng)), vec2(u(rng), u(rng)),
                vec2(u(rng), u(rng))}},
      Ellipsoid{vec2(u(rng), u(rng)), q, 0.8},
  };
  for (const ConvexBody& body : bodies) {
    for (int k = 0; k < 64; ++k) {
      const double angle = 2.0 * M_PI * k / 64;
      const Vec dir = vec2(std::cos(angle), std::sin(angle));
      const Vec sp = support_point(body, dir);
      // Compare against interior samples mixed from other support points.
      for (int j = 0; j < 16; ++j) {
        const double beta = 2.0 * M_PI * j / 16;
        const Vec other = support_point(body, vec2(std::cos(beta), std::sin(beta)));
        CHECK(sp.dot(dir) >= other.dot(dir) - 1e-9);
      }
    }
  }
}

TEST_CASE("gjk_distance basic cases") {
  CHECK(gjk_distance(Disc{vec2(0, 0), 1.0}, Disc{vec2(3, 0), 1.0}) ==
        doctest::Approx(1.0).epsilon(1e-9));

  CHECK(gjk_distance(Disc{vec2(0, 0), 2.0}, Disc{vec2(1, 0), 2.0}) == 0.0);

  const ConvexBody tri = Polytope{{vec2(0, 0), vec2(1, 0), vec2(0, 1)}};
  const ConvexBody pt = Polytope{{vec2(2, 0)}};
  CHECK(gjk_distance(tri, pt) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("gjk_distance dimension mismatch") {
  Vec p3(3);
  p3 << 0, 0, 0;
  CHECK_THROWS_AS(gjk_distance(Disc{vec2(0, 0), 1.0}, Disc{p3, 1.0}),
                  std::domain_error);
}

TEST_CASE("gjk_distance symmetry on random pairs") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int trial = 0; trial < 100; ++trial) {
    const ConvexBody a = Disc{vec2(u(rng), u(rng)), 0.5 + 0.5 * std::abs(u(rng))};
    const ConvexBody b = Polytope{{vec2(u(rng), u(rng)), vec2(u(rng), u(rng)),
                                   vec2(u(rng), u(rng))}};
    // Each query is certified to 1e-9 absolute accuracy.
    CHECK(std::abs(gjk_distance(a, b) - gjk_distance(b, a)) <= 2e-9);
  }
}

TEST_CASE("gjk_distance vs dense boundary sampling") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  std::uniform_real_distribution<double> rad(0.5, 1.5);
  const double delta = 1e-3;

  for (int trial = 0; trial < 40; ++trial) {
    const ConvexBody a = Disc{vec2(u(rng), u(rng)), rad(rng)};
    Mat q(2, 2);
    const double qa = rad(rng), qb = rad(rng);
    q << qa * qa, 0, 0, qb * qb;
    const ConvexBody b = (trial % 2 == 0)
        ? ConvexBody(Polytope{{vec2(u(rng), u(rng)), vec2(u(rng), u(rng)),
                               vec2(u(rng), u(rng))}})
        : ConvexBody(Ellipsoid{vec2(u(rng), u(rng)), q, 1.0});

    const double brute = timegov::testing::brute_force_distance(a, b, delta);
    const double exact = gjk_distance(a, b);
    if (exact == 0.0) {
      CHECK(brute <= 2 * delta + 1e-9);
    } else {
      CHECK(std::abs(exact - brute) <= 2 * delta);
    }
  }
}

TEST_CASE("containment_margin examples") {
  const Polytope square{{vec2(0, 0), vec2(10, 0), vec2(10, 10), vec2(0, 10)}};
  CHECK(containment_margin(Polytope{{vec2(2, 3)}}, square) == doctest::Approx(2.0));
  CHECK(containment_margin(Disc{vec2(5, 5), 1.0}, square) == doctest::Approx(4.0));
  CHECK(containment_margin(Polytope{{vec2(-1, 5)}}, square) == doctest::Approx(-1.0));
}

TEST_CASE("containment_margin rejects degenerate region") {
  const Polytope line{{vec2(0, 0), vec2(1, 0), vec2(2, 0)}};
  CHECK_THROWS_AS(containment_margin(Polytope{{vec2(0, 0)}}, line), std::domain_error);
}

TEST_CASE("containment sign matches sampled membership") {
  const Polytope region{{vec2(0, 0), vec2(8, 0), vec2(8, 6), vec2(4, 9), vec2(0, 6)}};
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-1.0, 9.0);
  for (int trial = 0; trial < 60; ++trial) {
    const ConvexBody body = Disc{vec2(u(rng), u(rng)), 0.4};
    const double margin = containment_margin(body, region);
    bool all_inside = true;
    for (int k = 0; k < 128; ++k) {
      const double angle = 2.0 * M_PI * k / 128;
      const Vec bp = support_point(body, vec2(std::cos(angle), std::sin(angle)));
      if (containment_margin(Polytope{{bp}}, region) < -1e-9) all_inside = false;
    }
    if (margin >= 1e-9) CHECK(all_inside);
    if (margin <= -1e-9) CHECK(!all_inside);
  }
}
