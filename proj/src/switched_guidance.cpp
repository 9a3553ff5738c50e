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

#include "vfguide/switched_guidance.hpp"

#include <cmath>
#include <limits>
#include <numeric>

namespace vfguide {
namespace {

bool positive(double v) { return v > 0.0 && std::isfinite(v); }

// |chi_d'(d) - chi_p'| as a function of the path-following geometry, split by
// branch: gradient of the field offset with respect to d.
double field_gradient(double d, const GuidanceParams& p, bool cubic) {
  const double scale = p.chi_inf * (2.0 / kPi);
  if (cubic) {
    const double u = p.k3 * d * d * d;
    return scale * 3.0 * p.k3 * d * d / (1.0 + u * u);
  }
  const double u = p.k1 * d;
  return scale * p.k1 / (1.0 + u * u);
}

}  // namespace

double GuidanceParams::switching_distance() const { return std::sqrt(k1 / k3); }

void GuidanceParams::validate() const {
  if (!positive(k1)) throw std::invalid_argument("guidance.k1 must be positive");
  if (!positive(k3)) throw std::invalid_argument("guidance.k3 must be positive");
  if (!(chi_inf > 0.0 && chi_inf <= kPi / 2.0)) {
    throw std::invalid_argument("guidance.chi_inf must lie in (0, pi/2]");
  }
  if (!positive(alpha)) throw std::invalid_argument("guidance.alpha must be positive");
  if (!positive(eta)) throw std::invalid_argument("guidance.eta must be positive");
  if (!positive(sigma)) throw std::invalid_argument("guidance.sigma must be positive");
  if (!positive(epsilon)) throw std::invalid_argument("guidance.epsilon must be positive");
  if (!positive(delta_hys)) throw std::invalid_argument("guidance.delta_hys must be positive");
  if (!(n > 0 && n < m)) throw std::invalid_argument("guidance.n, guidance.m need 0 < n < m");
  if (n % 2 == 0 || m % 2 == 0) throw std::invalid_argument("guidance.n and guidance.m must be odd");
  if (std::gcd(n, m) != 1) throw std::invalid_argument("guidance.n and guidance.m must be co-prime");
}

GuidanceParams GuidanceParams::from_switching_distance(double k1, double d_s) {
  if (!positive(d_s)) throw std::invalid_argument("switching distance must be positive");
  GuidanceParams p;
  p.k1 = k1;
  p.k3 = k1 / (d_s * d_s);
  return p;
}

std::string to_string(GuidancePhase phase) {
  switch (phase) {
    case GuidancePhase::kCase1:
      return "case1";
    case GuidancePhase::kCase2:
      return "case2";
    case GuidancePhase::kCase3:
      return "case3";
  }
  return "unknown";
}

double field_offset(double d, const GuidanceParams& params) {
  const double scale = params.chi_inf * (2.0 / kPi);
  if (std::abs(d) > params.switching_distance()) {
    return -scale * std::atan(params.k3 * d * d * d);
  }
  return -scale * std::atan(params.k1 * d);
}

double desired_course_distance_only(double d, double chi_p, const GuidanceParams& params) {
  return wrap_angle(chi_p + field_offset(d, params));
}

GuidancePhase classify_phase(double d, double chi, double chi_d_of_d,
                             const GuidanceParams& params,
                             std::optional<GuidancePhase> prev_phase) {
  if (std::abs(d) < params.switching_distance()) return GuidancePhase::kCase3;
  const double margin = prev_phase ? params.delta_hys : 0.0;
  if (std::abs(angle_diff(chi, chi_d_of_d)) > kPi / 2.0 + margin) return GuidancePhase::kCase1;
  return GuidancePhase::kCase2;
}

DesiredCourse desired_course(double d, double chi, double chi_p, int rho,
                             const GuidanceParams& params,
                             std::optional<GuidancePhase> prev_phase) {
  const double chi_d_of_d = desired_course_distance_only(d, chi_p, params);
  const GuidancePhase phase = classify_phase(d, chi, chi_d_of_d, params, prev_phase);
  if (phase == GuidancePhase::kCase1) {
    return {wrap_angle(chi_d_of_d + rho * kPi / 2.0), phase};
  }
  return {chi_d_of_d, phase};
}

double sat(double x) {
  if (x > 1.0) return 1.0;
  if (x < -1.0) return -1.0;
  return x;
}

double phase_command(GuidancePhase phase, double chi, double chi_d, const PathFrame& frame,
                     const GuidanceParams& params, double ground_speed) {
  const double chi_tilde = angle_diff(chi, chi_d);
  const bool cubic = phase != GuidancePhase::kCase3;
  const double field_rate = field_gradient(frame.d, params, cubic) * ground_speed *
                            std::sin(angle_diff(chi, frame.chi_p));

  double reaching = 0.0;
  if (phase == GuidancePhase::kCase1) {
    const double power = static_cast<double>(params.n) / params.m;
    reaching = -frame.rho * params.eta * std::pow(std::abs(chi_tilde), power);
  } else {
    const double beta = params.sigma / (1.0 + std::abs(chi_tilde));
    const double s = params.reaching == ReachingLaw::kSaturated ? sat(chi_tilde / params.epsilon)
                                                                : sign(chi_tilde);
    reaching = -beta * s;
  }
  return wrap_angle(chi + (frame.chi_p_dot - field_rate + reaching) / params.alpha);
}

GuidanceOutput commanded_course(const VehicleState& state, const PathFrame& frame,
                                const GuidanceParams& params,
                                std::optional<GuidancePhase> prev_phase, double ground_speed) {
  if (!(ground_speed > 0.0)) throw std::invalid_argument("ground speed must be positive");
  const DesiredCourse des =
      desired_course(frame.d, state.chi, frame.chi_p, frame.rho, params, prev_phase);
  GuidanceOutput out;
  out.chi_d = des.chi_d;
  out.phase = des.phase;
  out.chi_tilde = angle_diff(state.chi, des.chi_d);
  out.chi_c = phase_command(des.phase, state.chi, des.chi_d, frame, params, ground_speed);
  return out;
}

double case1_convergence_time(double chi_tilde0, const GuidanceParams& params) {
  if (chi_tilde0 == 0.0) return 0.0;
  const double m = params.m;
  const double n = params.n;
  return m / (params.eta * (m - n)) * std::pow(std::abs(chi_tilde0), (m - n) / m);
}

CurvatureReport validate_curvature_constraint(const GuidanceParams& params, double ground_speed,
                                              double chi_p_dot_max, double kappa_max) {
  params.validate();
  if (!positive(ground_speed)) throw std::invalid_argument("ground speed must be positive");
  if (!(chi_p_dot_max >= 0.0) || !std::isfinite(chi_p_dot_max)) {
    throw std::invalid_argument("max path course rate must be non-negative");
  }
  if (!(kappa_max >= 0.0)) throw std::invalid_argument("kappa_max must be non-negative");

  CurvatureReport r;
  const double d_s = params.switching_distance();
  r.linear_peak_rate = kLinearPeakCoeff * params.k1 * ground_speed;
  r.linear_peak_distance = 1.0 / (std::sqrt(2.0) * params.k1);
  r.linear_peak_in_branch = r.linear_peak_distance <= d_s;
  r.cubic_peak_rate = kCubicPeakCoeff * std::cbrt(params.k3) * ground_speed;
  r.cubic_peak_distance = std::pow(5.0, 1.0 / 6.0) / std::cbrt(2.0 * params.k3);
  r.cubic_peak_in_branch = r.cubic_peak_distance > d_s;
  r.lhs = std::max(r.linear_peak_rate, r.cubic_peak_rate) / ground_speed -
          chi_p_dot_max / ground_speed;
  r.kappa_max = kappa_max == 0.0 ? std::numeric_limits<double>::infinity() : kappa_max;
  r.margin = r.kappa_max - r.lhs;
  r.feasible = r.lhs <= r.kappa_max;
  return r;
}

}  // namespace vfguide
