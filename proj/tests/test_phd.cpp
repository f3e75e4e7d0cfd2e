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

#include <algorithm>
#include <random>

#include "timegov/phd.hpp"
#include "test_helpers.hpp"

using namespace timegov;
using timegov::testing::vec2;

TEST_CASE("gains_from_roots expands the characteristic polynomial") {
  const PhdGains g1 = gains_from_roots({-3.0});
  CHECK(g1.coeffs == std::vector<double>{3.0, 1.0});

  const PhdGains g2 = gains_from_roots({-3.0, -3.0});
  CHECK(g2.coeffs == std::vector<double>{9.0, 6.0, 1.0});

  const PhdGains g3 = gains_from_roots({-1.0, -2.0, -3.0});
  CHECK(g3.coeffs == std::vector<double>{6.0, 11.0, 6.0, 1.0});
}

TEST_CASE("gains_from_roots rejects nonnegative roots") {
  CHECK_THROWS_AS(gains_from_roots({-1.0, 0.0}), std::domain_error);
  CHECK_THROWS_AS(gains_from_roots({2.0}), std::domain_error);
  CHECK_THROWS_AS(gains_from_roots({}), std::domain_error);
}

TEST_CASE("gains are strictly positive") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-5.0, -0.1);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> roots;
    const int n = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < n; ++i) roots.push_back(u(rng));
    const PhdGains g = gains_from_roots(roots);
    REQUIRE(g.coeffs.size() == roots.size() + 1);
    CHECK(g.coeffs.back() == 1.0);
    for (double a : g.coeffs) CHECK(a > 0.0);
  }
}

TEST_CASE("recover_roots round-trips the gains") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(-5.0, -0.2);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> roots;
    const int n = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < n; ++i) roots.push_back(u(rng));
    const std::vector<double> recovered = recover_roots(gains_from_roots(roots));
    REQUIRE(recovered.size() == roots.size());
    std::sort(roots.begin(), roots.end());
    for (int i = 0; i < n; ++i) CHECK(std::abs(roots[i] - recovered[i]) <= 1e-9);
  }
}

TEST_CASE("companion has the expected layout") {
  const Mat a = companion(gains_from_roots({-3.0, -3.0}));
  REQUIRE(a.rows() == 2);
  CHECK(a(0, 0) == 0.0);
  CHECK(a(0, 1) == 1.0);
  CHECK(a(1, 0) == -9.0);
  CHECK(a(1, 1) == -6.0);
}

TEST_CASE("reduced_gains drops one occurrence of the slowest root") {
  const PhdGains r = reduced_gains({-3.0, -1.0});
  REQUIRE(r.roots.size() == 1);
  CHECK(r.roots[0] == -3.0);
  CHECK(r.coeffs == std::vector<double>{3.0, 1.0});

  const PhdGains r2 = reduced_gains({-2.0, -2.0, -5.0});
  REQUIRE(r2.roots.size() == 2);
  CHECK(std::count(r2.roots.begin(), r2.roots.end(), -2.0) == 1);

  CHECK_THROWS(reduced_gains({-3.0}));
}

TEST_CASE("phd_accel worked example") {
  // n = 2, coeffs (9, 6, 1): accel = 9 r + 6*0.5*tangent - 9 p - 6 v.
  const PhdGains g = gains_from_roots({-3.0, -3.0});
  const RobotState x{{vec2(1, 0), vec2(0, 1)}};
  const Vec accel = phd_accel(g, x, vec2(2, 0), vec2(1, 0), 0.5);
  CHECK((accel - vec2(12, -6)).norm() < 1e-12);
}

TEST_CASE("phd_accel vanishes at rest on the target") {
  const PhdGains g = gains_from_roots({-1.0, -2.0, -3.0});
  const Vec r = vec2(4, -1);
  const RobotState x = rest_state(r, 3);
  CHECK(phd_accel(g, x, r, vec2(1, 0), 0.0).norm() < 1e-12);
  // With sdot the feed-forward term a_1 * tangent * sdot remains.
  const Vec accel = phd_accel(g, x, r, vec2(0, 1), 2.0);
  CHECK((accel - vec2(0, 22)).norm() < 1e-12);
}

TEST_CASE("rest_state shape") {
  const RobotState x = rest_state(vec2(1, 2), 3);
  CHECK(x.order() == 3);
  CHECK(x.dim() == 2);
  CHECK((x.position() - vec2(1, 2)).norm() == 0.0);
  CHECK(x.derivatives[1].norm() == 0.0);
  CHECK(x.derivatives[2].norm() == 0.0);
}
