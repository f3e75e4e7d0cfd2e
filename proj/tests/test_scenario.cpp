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

#include <string>

#include "timegov/scenario.hpp"
#include "test_helpers.hpp"

using namespace timegov;
using timegov::testing::vec2;

namespace {

const std::string kScenarioDir = SCENARIO_DIR;

std::string minimal_json() {
  return R"({
    "schema": "timegov-scenario/1",
    "environment": {
      "workspace": [[0, 0], [10, 0], [10, 10], [0, 10]],
      "obstacles": [],
      "robot_radius": 0.5,
      "clearance": 1.0
    },
    "path": {"waypoints": [[2, 2], [8, 2]]},
    "order": 2,
    "roots": [-3.0, -3.0],
    "governor": {"type": "safe", "kappa_sigma": 3.0, "kappa_s": 1.0},
    "predictor": "lyapunov"
  })";
}

}  // namespace

TEST_CASE("parse fills defaults") {
  const Scenario sc = parse_scenario(minimal_json());
  CHECK(sc.order == 2);
  CHECK(sc.roots == std::vector<double>{-3.0, -3.0});
  CHECK(sc.governor.type == GovernorType::kSafe);
  CHECK(sc.predictor == PredictorKind::kLyapunov);
  CHECK(sc.velocity_feedback);
  CHECK(sc.sim.dt == doctest::Approx(1e-3));
  CHECK(sc.sim.t_max == doctest::Approx(120.0));
  CHECK(!sc.initial_state.has_value());
  CHECK(sc.env.obstacles.empty());
  CHECK(sc.waypoints.size() == 2);
}

TEST_CASE("write/parse round trip") {
  Scenario sc = parse_scenario(minimal_json());
  sc.env.obstacles = {Disc{vec2(5, 7), 0.8},
                      Polytope{{vec2(1, 8), vec2(2, 8), vec2(2, 9)}}};
  sc.predictor = PredictorKind::kVandermonde;
  sc.velocity_feedback = false;
  sc.sim.dt = 5e-4;
  sc.initial_state = RobotState{{vec2(2, 2.5), vec2(0.1, 0)}};

  const Scenario back = parse_scenario(write_scenario(sc));
  CHECK(write_scenario(back) == write_scenario(sc));
  CHECK(back.predictor == PredictorKind::kVandermonde);
  CHECK(!back.velocity_feedback);
  REQUIRE(back.initial_state.has_value());
  CHECK((back.initial_state->derivatives[0] - vec2(2, 2.5)).norm() == 0.0);
  REQUIRE(back.env.obstacles.size() == 2);
}

TEST_CASE("heuristic governor round trip") {
  std::string text = minimal_json();
  const std::string safe = R"("governor": {"type": "safe", "kappa_sigma": 3.0, "kappa_s": 1.0})";
  text.replace(text.find(safe), safe.size(),
               R"("governor": {"type": "heuristic", "sdot_desired": 2.0, "eta": 0.5})");
  const Scenario sc = parse_scenario(text);
  CHECK(sc.governor.type == GovernorType::kHeuristic);
  CHECK(sc.governor.sdot_desired == doctest::Approx(2.0));
  CHECK(sc.governor.eta == doctest::Approx(0.5));
  const Scenario back = parse_scenario(write_scenario(sc));
  CHECK(back.governor.type == GovernorType::kHeuristic);
  CHECK(back.governor.eta == doctest::Approx(0.5));
}

TEST_CASE("rejects malformed documents") {
  CHECK_THROWS_WITH_AS(parse_scenario("{not json"),
                       doctest::Contains("parse error"), std::runtime_error);

  std::string bad_schema = minimal_json();
  bad_schema.replace(bad_schema.find("timegov-scenario/1"), 18, "something-else/9");
  CHECK_THROWS_WITH_AS(parse_scenario(bad_schema),
                       doctest::Contains("schema"), std::runtime_error);

  CHECK_THROWS_AS(parse_scenario("{}"), std::runtime_error);
}

TEST_CASE("structural validation failures") {
  Scenario sc = parse_scenario(minimal_json());

  Scenario bad = sc;
  bad.roots = {-3.0};  // length mismatch with order 2
  CHECK_THROWS_WITH_AS(validate_scenario(bad), doctest::Contains("roots"),
                       std::runtime_error);

  bad = sc;
  bad.roots = {-3.0, 0.5};
  CHECK_THROWS_WITH_AS(validate_scenario(bad), doctest::Contains("negative"),
                       std::runtime_error);

  bad = sc;
  bad.order = 1;
  bad.roots = {-3.0};
  bad.predictor = PredictorKind::kVandermonde;
  CHECK_THROWS_WITH_AS(validate_scenario(bad), doctest::Contains("order >= 2"),
                       std::runtime_error);

  bad = sc;
  bad.governor.type = GovernorType::kHeuristic;
  bad.governor.eta = 1.5;
  CHECK_THROWS_WITH_AS(validate_scenario(bad), doctest::Contains("eta"),
                       std::runtime_error);

  bad = sc;
  bad.sim.dt = 200.0;  // > t_max
  CHECK_THROWS(validate_scenario(bad));

  bad = sc;
  bad.initial_state = RobotState{{vec2(2, 2)}};  // one block, order 2
  CHECK_THROWS(validate_scenario(bad));
}

TEST_CASE("runtime validation catches clearance violations") {
  Scenario sc = parse_scenario(minimal_json());
  CHECK_NOTHROW(validate_scenario_runtime(sc));

  sc.env.obstacles = {Disc{vec2(5, 2), 0.5}};  // sits on the path
  CHECK_THROWS_WITH_AS(validate_scenario_runtime(sc),
                       doctest::Contains("clearance"), std::runtime_error);
}

TEST_CASE("runtime validation catches unsafe initial prediction") {
  Scenario sc = parse_scenario(minimal_json());
  // Large initial velocity inflates the prediction set past the free space.
  sc.initial_state = RobotState{{vec2(2, 2), vec2(0, -40)}};
  CHECK_THROWS_WITH_AS(validate_scenario_runtime(sc),
                       doctest::Contains("initial prediction"), std::runtime_error);
}

TEST_CASE("shipped scenarios load cleanly") {
  const Scenario corridor = load_scenario(kScenarioDir + "/corridor.json");
  CHECK(corridor.order == 2);
  CHECK(corridor.waypoints.size() == 5);

  const Scenario office = load_scenario(kScenarioDir + "/office.json");
  CHECK(office.env.obstacles.size() == 5);

  CHECK_THROWS_WITH_AS(load_scenario(kScenarioDir + "/missing.json"),
                       doctest::Contains("cannot open"), std::runtime_error);
}
