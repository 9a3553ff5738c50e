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

#include "vfguide/vehicle.hpp"

#include <cmath>

namespace vfguide {
namespace {

struct Derivative {
  double dx;
  double dy;
  double dchi;
};

}  // namespace

double WindModel::speed() const { return std::hypot(wx, wy); }

WindModel WindModel::from_polar(double speed, double direction) {
  return {speed * std::cos(direction), speed * std::sin(direction)};
}

std::string to_string(Integrator method) {
  return method == Integrator::kEuler ? "euler" : "rk4";
}

Integrator integrator_from_string(const std::string& name) {
  if (name == "euler") return Integrator::kEuler;
  if (name == "rk4") return Integrator::kRk4;
  throw std::invalid_argument("unknown integrator '" + name + "' (expected euler or rk4)");
}

double ground_speed(const AirspeedSpec& spec, const WindModel& wind, double chi) {
  if (!(spec.airspeed > 0.0)) throw std::invalid_argument("airspeed must be positive");
  if (!std::isfinite(wind.wx) || !std::isfinite(wind.wy)) {
    throw std::invalid_argument("wind must be finite");
  }
  if (wind.wx * wind.wx + wind.wy * wind.wy >= spec.airspeed * spec.airspeed) {
    throw InfeasibleError("wind speed must be below airspeed to hold an arbitrary course");
  }
  const double c = std::cos(chi);
  const double s = std::sin(chi);
  const double w_par = wind.wx * c + wind.wy * s;
  const double w_perp = -wind.wx * s + wind.wy * c;
  return std::sqrt(spec.airspeed * spec.airspeed - w_perp * w_perp) + w_par;
}

double turn_rate(double chi_c, double chi, double alpha) {
  return alpha * angle_diff(chi_c, chi);
}

VehicleState step(const VehicleState& state, double chi_c, const AirspeedSpec& spec,
                  const WindModel& wind, double alpha, double dt, Integrator method) {
  if (!(dt > 0.0)) throw std::invalid_argument("step: dt must be positive");
  if (!(alpha > 0.0)) throw std::invalid_argument("step: alpha must be positive");

  auto f = [&](double chi) {
    const double vg = ground_speed(spec, wind, chi);
    return Derivative{vg * std::cos(chi), vg * std::sin(chi), turn_rate(chi_c, chi, alpha)};
  };

  VehicleState next = state;
  if (method == Integrator::kEuler) {
    const Derivative k1 = f(state.chi);
    next.x += dt * k1.dx;
    next.y += dt * k1.dy;
    next.chi += dt * k1.dchi;
  } else {
    const Derivative k1 = f(state.chi);
    const Derivative k2 = f(state.chi + 0.5 * dt * k1.dchi);
    const Derivative k3 = f(state.chi + 0.5 * dt * k2.dchi);
    const Derivative k4 = f(state.chi + dt * k3.dchi);
    next.x += dt / 6.0 * (k1.dx + 2.0 * k2.dx + 2.0 * k3.dx + k4.dx);
    next.y += dt / 6.0 * (k1.dy + 2.0 * k2.dy + 2.0 * k3.dy + k4.dy);
    next.chi += dt / 6.0 * (k1.dchi + 2.0 * k2.dchi + 2.0 * k3.dchi + k4.dchi);
  }
  next.chi = wrap_angle(next.chi);
  return next;
}

}  // namespace vfguide
