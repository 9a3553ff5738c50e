// Copyright 2026 The vfguide Authors
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

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "vfguide/sim_engine.hpp"

namespace vfguide {

/// Serializable description of a reference path. Only the fields of the
/// selected kind are used.
struct PathSpec {
  PathKind kind = PathKind::kSinusoid;
  // line
  double x0 = 0.0;
  double y0 = 0.0;
  double heading = 0.0;
  // circle
  double center_x = 0.0;
  double center_y = 0.0;
  double radius = 300.0;
  bool clockwise = false;
  // sinusoid
  double amplitude = 300.0;
  double wavelength = default_sinusoid_wavelength();
  double x_min = -2000.0;
  double x_max = 12000.0;
  // polyline
  std::string file;

  ReferencePath build() const;
};

/// Everything a CLI invocation needs: the scenario plus campaign settings.
struct RunConfig {
  PathSpec path;
  ScenarioConfig scenario;
  double kappa_max = 0.7 / 15.0;  ///< flyable curvature in 1/m; 0 means unbounded
  double d0_nlgl = 80.0;    ///< start offset for the look-ahead law in comparisons
  std::size_t trials = 200;
  bool randomize = false;   ///< single runs draw their start from `sampling`
  SamplingSpec sampling;
};

/// Defaults reproduce the reference sinusoid scenario.
RunConfig default_run_config();

/// INI-style text with sections [path], [vehicle], [guidance], [baselines]
/// and [sim]. Missing keys keep their defaults; unknown sections or keys and
/// unparsable values throw ConfigError naming "section.key".
RunConfig parse_config(std::istream& in, const std::string& source = "<input>");
RunConfig load_config(const std::string& file_path);

/// Every effective value, in the same format parse_config reads.
std::string dump_config(const RunConfig& config);

}  // namespace vfguide
