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

#include "timegov/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace timegov {

namespace {

constexpr double kScale = 40.0;  // pixels per meter
constexpr double kPad = 0.5;     // meters around the workspace bbox

struct Frame {
  double min_x, max_y;

  double x(double wx) const { return (wx - min_x + kPad) * kScale; }
  double y(double wy) const { return (max_y - wy + kPad) * kScale; }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

void polygon(std::ostringstream& out, const Frame& f, const std::vector<Vec>& pts,
             const char* style) {
  out << "<polygon points=\"";
  for (const Vec& p : pts) out << num(f.x(p[0])) << ',' << num(f.y(p[1])) << ' ';
  out << "\" " << style << "/>\n";
}

void polyline(std::ostringstream& out, const Frame& f, const std::vector<Vec>& pts,
              const char* style) {
  out << "<polyline points=\"";
  for (const Vec& p : pts) out << num(f.x(p[0])) << ',' << num(f.y(p[1])) << ' ';
  out << "\" " << style << "/>\n";
}

void circle(std::ostringstream& out, const Frame& f, const Vec& c, double r,
            const char* style) {
  out << "<circle cx=\"" << num(f.x(c[0])) << "\" cy=\"" << num(f.y(c[1]))
      << "\" r=\"" << num(r * kScale) << "\" " << style << "/>\n";
}

}  // namespace

std::string render_scene_svg(const Scenario& scenario, const SimLog& log) {
  const auto& ws = scenario.env.workspace.vertices;
  double min_x = ws.front()[0], max_x = min_x, min_y = ws.front()[1], max_y = min_y;
  for (const Vec& v : ws) {
    min_x = std::min(min_x, v[0]);
    max_x = std::max(max_x, v[0]);
    min_y = std::min(min_y, v[1]);
    max_y = std::max(max_y, v[1]);
  }
  const Frame f{min_x, max_y};
  const double width = (max_x - min_x + 2 * kPad) * kScale;
  const double height = (max_y - min_y + 2 * kPad) * kScale;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width)
      << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width) << ' '
      << num(height) << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"#f6f6f6\"/>\n";

  polygon(out, f, ws, "fill=\"white\" stroke=\"black\" stroke-width=\"2\"");
  for (const ConvexBody& obstacle : scenario.env.obstacles) {
    if (const auto* poly = std::get_if<Polytope>(&obstacle)) {
      polygon(out, f, poly->vertices, "fill=\"#9a9a9a\" stroke=\"#555555\"");
    } else if (const auto* disc = std::get_if<Disc>(&obstacle)) {
      circle(out, f, disc->center, disc->radius, "fill=\"#9a9a9a\" stroke=\"#555555\"");
    }
  }

  polyline(out, f, scenario.waypoints,
           "fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\"");

  if (!log.rows.empty()) {
    // Velocity bars: perpendicular ticks along the trajectory, length
    // proportional to speed.
    if (log.order >= 2) {
      const std::size_t stride = std::max<std::size_t>(1, log.rows.size() / 160);
      for (std::size_t i = 0; i < log.rows.size(); i += stride) {
        const Vec& p = log.rows[i].derivatives[0];
        const Vec& v = log.rows[i].derivatives[1];
        const double speed = v.norm();
        if (speed < 1e-9 || p.size() != 2) continue;
        Vec perp(2);
        perp << -v[1] / speed, v[0] / speed;
        const Vec tip = p + 0.2 * speed * perp;
        out << "<line x1=\"" << num(f.x(p[0])) << "\" y1=\"" << num(f.y(p[1]))
            << "\" x2=\"" << num(f.x(tip[0])) << "\" y2=\"" << num(f.y(tip[1]))
            << "\" stroke=\"#8cb4e8\" stroke-width=\"1\"/>\n";
      }
    }

    std::vector<Vec> trajectory;
    trajectory.reserve(log.rows.size());
    for (const LogRow& row : log.rows) trajectory.push_back(row.derivatives[0]);
    polyline(out, f, trajectory,
             "fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\"");

    circle(out, f, trajectory.front(), scenario.env.robot_radius,
           "fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\"");
    circle(out, f, scenario.waypoints.back(), scenario.env.robot_radius,
           "fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\"");
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace timegov
