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

#include "timegov/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "timegov/prediction.hpp"
#include "timegov/refpath.hpp"

namespace timegov {

namespace {

using nlohmann::json;

constexpr const char* kSchemaTag = "timegov-scenario/1";

Vec parse_vec(const json& j, const char* what) {
  if (!j.is_array() || j.empty())
    throw std::runtime_error(std::string("scenario: ") + what +
                             " must be a nonempty array of numbers");
  Vec v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  return v;
}

json vec_to_json(const Vec& v) {
  json j = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) j.push_back(v[i]);
  return j;
}

std::vector<Vec> parse_points(const json& j, const char* what) {
  std::vector<Vec> points;
  if (!j.is_array())
    throw std::runtime_error(std::string("scenario: ") + what + " must be an array");
  for (const json& p : j) points.push_back(parse_vec(p, what));
  return points;
}

json points_to_json(const std::vector<Vec>& points) {
  json j = json::array();
  for (const Vec& p : points) j.push_back(vec_to_json(p));
  return j;
}

ConvexBody parse_obstacle(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "polygon") {
    Polytope p{parse_points(j.at("vertices"), "obstacle vertices")};
    if (p.vertices.empty())
      throw std::runtime_error("scenario: polygon obstacle needs vertices");
    return p;
  }
  if (type == "disc") {
    const double radius = j.at("radius").get<double>();
    if (radius < 0.0) throw std::runtime_error("scenario: disc radius must be >= 0");
    return Disc{parse_vec(j.at("center"), "disc center"), radius};
  }
  throw std::runtime_error("scenario: unknown obstacle type '" + type + "'");
}

json obstacle_to_json(const ConvexBody& body) {
  json j;
  if (const auto* poly = std::get_if<Polytope>(&body)) {
    j["type"] = "polygon";
    j["vertices"] = points_to_json(poly->vertices);
  } else if (const auto* disc = std::get_if<Disc>(&body)) {
    j["type"] = "disc";
    j["center"] = vec_to_json(disc->center);
    j["radius"] = disc->radius;
  } else {
    throw std::runtime_error("scenario: ellipsoid obstacles are not serializable");
  }
  return j;
}

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("scenario: parse error: ") + e.what());
  }

  try {
    if (j.at("schema").get<std::string>() != kSchemaTag)
      throw std::runtime_error("scenario: unsupported schema (expected " +
                               std::string(kSchemaTag) + ")");

    Scenario sc;
    const json& env = j.at("environment");
    sc.env.workspace.vertices = parse_points(env.at("workspace"), "workspace");
    if (env.contains("obstacles"))
      for (const json& o : env.at("obstacles"))
        sc.env.obstacles.push_back(parse_obstacle(o));
    sc.env.robot_radius = env.at("robot_radius").get<double>();
    sc.env.clearance = env.at("clearance").get<double>();

    sc.waypoints = parse_points(j.at("path").at("waypoints"), "waypoints");
    sc.order = j.at("order").get<int>();
    sc.roots = j.at("roots").get<std::vector<double>>();

    const json& gov = j.at("governor");
    const std::string gov_type = gov.at("type").get<std::string>();
    if (gov_type == "safe") {
      sc.governor.type = GovernorType::kSafe;
      sc.governor.kappa_sigma = gov.value("kappa_sigma", 3.0);
      sc.governor.kappa_s = gov.value("kappa_s", 1.0);
    } else if (gov_type == "heuristic") {
      sc.governor.type = GovernorType::kHeuristic;
      sc.governor.sdot_desired = gov.value("sdot_desired", 1.0);
      sc.governor.eta = gov.value("eta", 1.0);
      sc.governor.kappa_s = gov.value("kappa_s", 1.0);
    } else {
      throw std::runtime_error("scenario: governor type must be 'safe' or 'heuristic'");
    }

    const std::string predictor = j.at("predictor").get<std::string>();
    if (predictor == "lyapunov")
      sc.predictor = PredictorKind::kLyapunov;
    else if (predictor == "vandermonde")
      sc.predictor = PredictorKind::kVandermonde;
    else
      throw std::runtime_error(
          "scenario: predictor must be 'lyapunov' or 'vandermonde'");

    sc.velocity_feedback = j.value("velocity_feedback", true);

    if (j.contains("sim")) {
      const json& sim = j.at("sim");
      sc.sim.dt = sim.value("dt", 1e-3);
      sc.sim.t_max = sim.value("t_max", 120.0);
      sc.sim.s_tol = sim.value("s_tol", 1e-3);
      sc.sim.pos_tol = sim.value("pos_tol", 1e-2);
    }

    if (j.contains("initial_state")) {
      RobotState x;
      for (const json& block : j.at("initial_state"))
        x.derivatives.push_back(parse_vec(block, "initial_state block"));
      sc.initial_state = std::move(x);
    }

    validate_scenario(sc);
    return sc;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("scenario: invalid document: ") + e.what());
  }
}

std::string write_scenario(const Scenario& sc) {
  json j;
  j["schema"] = kSchemaTag;
  json env;
  env["workspace"] = points_to_json(sc.env.workspace.vertices);
  env["obstacles"] = json::array();
  for (const ConvexBody& o : sc.env.obstacles)
    env["obstacles"].push_back(obstacle_to_json(o));
  env["robot_radius"] = sc.env.robot_radius;
  env["clearance"] = sc.env.clearance;
  j["environment"] = std::move(env);

  j["path"] = json{{"waypoints", points_to_json(sc.waypoints)}};
  j["order"] = sc.order;
  j["roots"] = sc.roots;

  json gov;
  if (sc.governor.type == GovernorType::kSafe) {
    gov["type"] = "safe";
    gov["kappa_sigma"] = sc.governor.kappa_sigma;
    gov["kappa_s"] = sc.governor.kappa_s;
  } else {
    gov["type"] = "heuristic";
    gov["sdot_desired"] = sc.governor.sdot_desired;
    gov["eta"] = sc.governor.eta;
    gov["kappa_s"] = sc.governor.kappa_s;
  }
  j["governor"] = std::move(gov);

  j["predictor"] =
      sc.predictor == PredictorKind::kLyapunov ? "lyapunov" : "vandermonde";
  j["velocity_feedback"] = sc.velocity_feedback;
  j["sim"] = json{{"dt", sc.sim.dt},
                  {"t_max", sc.sim.t_max},
                  {"s_tol", sc.sim.s_tol},
                  {"pos_tol", sc.sim.pos_tol}};
  if (sc.initial_state) {
    json blocks = json::array();
    for (const Vec& block : sc.initial_state->derivatives)
      blocks.push_back(vec_to_json(block));
    j["initial_state"] = std::move(blocks);
  }
  return j.dump(2) + "\n";
}

void validate_scenario(const Scenario& sc) {
  validate_environment(sc.env);
  if (sc.order < 1) throw std::runtime_error("scenario: order must be >= 1");
  if (static_cast<int>(sc.roots.size()) != sc.order)
    throw std::runtime_error("scenario: roots list length must equal order");
  for (double root : sc.roots)
    if (!(root < 0.0))
      throw std::runtime_error("scenario: roots must be strictly negative");
  if (sc.order == 1 && sc.predictor == PredictorKind::kVandermonde)
    throw std::runtime_error(
        "scenario: vandermonde predictor requires order >= 2");
  if (sc.waypoints.size() < 2)
    throw std::runtime_error("scenario: path needs at least 2 waypoints");
  if (sc.governor.type == GovernorType::kSafe) {
    if (!(sc.governor.kappa_sigma > 0.0) || !(sc.governor.kappa_s > 0.0))
      throw std::runtime_error("scenario: governor gains must be > 0");
  } else {
    if (!(sc.governor.sdot_desired > 0.0))
      throw std::runtime_error("scenario: sdot_desired must be > 0");
    if (sc.governor.eta < 0.0 || sc.governor.eta > 1.0)
      throw std::runtime_error("scenario: eta must be in [0, 1]");
    if (!(sc.governor.kappa_s > 0.0))
      throw std::runtime_error("scenario: kappa_s must be > 0");
  }
  if (!(sc.sim.dt > 0.0) || !(sc.sim.t_max > 0.0) || sc.sim.dt > sc.sim.t_max)
    throw std::runtime_error("scenario: sim requires 0 < dt <= t_max");
  if (!(sc.sim.s_tol > 0.0) || !(sc.sim.pos_tol > 0.0))
    throw std::runtime_error("scenario: completion tolerances must be > 0");
  if (sc.initial_state) {
    if (sc.initial_state->order() != sc.order)
      throw std::runtime_error("scenario: initial_state must have `order` blocks");
    const int d = static_cast<int>(sc.waypoints.front().size());
    for (const Vec& block : sc.initial_state->derivatives)
      if (static_cast<int>(block.size()) != d)
        throw std::runtime_error("scenario: initial_state block dimension mismatch");
  }
}

void validate_scenario_runtime(const Scenario& sc) {
  const ReferencePath path(sc.waypoints);
  const double step = std::min(sc.env.robot_radius, sc.env.clearance) / 4.0;
  const auto violations = validate_clearance(sc.env, path, sc.env.clearance, step);
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << "scenario: reference path violates the clearance margin "
        << sc.env.clearance << " at s =";
    const std::size_t shown = std::min<std::size_t>(violations.size(), 8);
    for (std::size_t i = 0; i < shown; ++i)
      msg << ' ' << violations[i].s << " (d_F=" << violations[i].free_distance << ")";
    if (violations.size() > shown)
      msg << " ... (" << violations.size() << " samples total)";
    throw std::runtime_error(msg.str());
  }

  // Safety precondition: the initial prediction set must be strictly inside
  // the free space.
  const PhdGains gains = gains_from_roots(sc.roots);
  const MotionPredictor predictor = sc.predictor == PredictorKind::kLyapunov
                                        ? MotionPredictor::lyapunov(gains)
                                        : MotionPredictor::vandermonde(sc.roots);
  const RobotState x0 =
      sc.initial_state ? *sc.initial_state : rest_state(path.eval(0.0), sc.order);
  const ConvexBody prediction = predict(predictor, x0, path.eval(0.0));
  if (!(set_free_distance(sc.env, prediction) > 0.0))
    throw std::runtime_error(
        "scenario: initial prediction set is not strictly inside the free space");
}

Scenario load_scenario(const std::string& file_path) {
  std::ifstream in(file_path);
  if (!in)
    throw std::runtime_error("scenario: cannot open file '" + file_path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  Scenario sc = parse_scenario(buf.str());
  validate_scenario_runtime(sc);
  return sc;
}

}  // namespace timegov
