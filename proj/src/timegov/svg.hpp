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

#ifndef TIMEGOV_SVG_HPP
#define TIMEGOV_SVG_HPP

#include <string>

#include "timegov/simulator.hpp"

namespace timegov {

/// Deterministic SVG rendering of one run: workspace and obstacles, the
/// reference path (red), the robot trajectory (blue) with velocity bars
/// placed along it, and start/end markers.
std::string render_scene_svg(const Scenario& scenario, const SimLog& log);

}  // namespace timegov

#endif  // TIMEGOV_SVG_HPP
