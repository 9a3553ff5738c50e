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

#include <optional>
#include <string>

#include "vfguide/path_geometry.hpp"
#include "vfguide/vehicle.hpp"

namespace vfguide {

/// Unswitched arctangent field: chi_d = chi_p - chi_inf (2/pi) atan(k d),
/// tracked by commanding chi_c = chi_d through the course loop.
struct BasicVfParams {
  double k = 0.02;
  double chi_inf = kPi / 2.0;
};

/// Pure pursuit plus line-of-sight. Lateral acceleration
///   a = K1 wrap(theta_los - chi) - K2 d
/// where theta_los points at the path point `lookahead` metres (Euclidean)
/// ahead of the closest point; the acceleration maps to a turn rate a / V_g.
struct PlosParams {
  double k1 = 15.0;        ///< m/s^2 per rad of LOS error
  double k2 = 0.1;         ///< m/s^2 per m of cross-track error
  double lookahead = 50.0; ///< m
};

/// Nonlinear guidance logic: lateral acceleration 2 V^2 / L1 sin(eta) towards
/// the forward intersection of the radius-L1 circle around the vehicle with
/// the path.
struct NlglParams {
  double l1 = 110.0;
};

struct BaselineParams {
  BasicVfParams basic_vf;
  PlosParams plos;
  NlglParams nlgl;

  void validate() const;
};

double basic_vf_desired_course(double d, double chi_p, const BasicVfParams& params);

double basic_vf_command(const VehicleState& state, const PathFrame& frame,
                        const BasicVfParams& params);

/// First parameter s >= s_start where the path leaves the circle of
/// `radius` around `center`, refined by bisection. Empty when the path starts
/// outside the circle or never leaves it within a bounded search.
std::optional<double> forward_circle_crossing(const ReferencePath& path, Vec2 center,
                                              double radius, double s_start);

struct PursuitTarget {
  double s = 0.0;
  Vec2 point;
  double los = 0.0;  ///< bearing from the vehicle to the point
};

/// Converts a turn-rate request into a course command for the first-order
/// course loop, limited to what the wrapped course difference can express.
double course_command_for_rate(double chi, double rate, double alpha);

double plos_command(const VehicleState& state, const PathFrame& frame, const ReferencePath& path,
                    const PlosParams& params, double ground_speed, double alpha);

/// Throws InfeasibleError("look-ahead infeasible ...") when |d| > L1.
PursuitTarget nlgl_target(const ReferencePath& path, const VehicleState& state,
                          const PathFrame& frame, const NlglParams& params);

double nlgl_command(const VehicleState& state, const ReferencePath& path, const PathFrame& frame,
                    const NlglParams& params, double ground_speed, double alpha);

}  // namespace vfguide
