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

#include <string>

#include "vfguide/common.hpp"

namespace vfguide {

/// Planar position (m) and course angle (rad, (-pi, pi]).
struct VehicleState {
  double x = 0.0;
  double y = 0.0;
  double chi = 0.0;
};

/// Constant wind in the inertial frame (m/s).
struct WindModel {
  double wx = 0.0;
  double wy = 0.0;

  double speed() const;
  static WindModel from_polar(double speed, double direction);
};

struct AirspeedSpec {
  double airspeed = 15.0;
};

enum class Integrator { kEuler, kRk4 };

std::string to_string(Integrator method);
Integrator integrator_from_string(const std::string& name);

/// Ground speed along course chi. The air-relative heading is chosen so the
/// ground velocity points along chi (crab solution):
///   V_g = sqrt(V_a^2 - W_perp^2) + W_par.
/// Throws InfeasibleError when |W| >= V_a.
double ground_speed(const AirspeedSpec& spec, const WindModel& wind, double chi);

/// alpha * wrap(chi_c - chi).
double turn_rate(double chi_c, double chi, double alpha);

/// One fixed step of
///   x' = V_g cos chi,  y' = V_g sin chi,  chi' = alpha wrap(chi_c - chi)
/// with chi_c held over the step. The returned course is wrapped.
VehicleState step(const VehicleState& state, double chi_c, const AirspeedSpec& spec,
                  const WindModel& wind, double alpha, double dt,
                  Integrator method = Integrator::kRk4);

}  // namespace vfguide
