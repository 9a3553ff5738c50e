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

/// Reaching term used in the two boundary-layer phases.
enum class ReachingLaw {
  kSaturated,  ///< -beta * sat(chi_tilde / epsilon)
  kSign,       ///< -beta * sign(chi_tilde)
};

/// Tunables of the switched field. The switching distance is not stored: it
/// is always sqrt(k1 / k3), which keeps the distance-only field continuous.
struct GuidanceParams {
  double chi_inf = kPi / 2.0;  ///< far-field approach angle (rad)
  double k1 = 0.01;            ///< linear-branch gain (1/m)
  double k3 = 1e-4;            ///< cubic-branch gain (1/m^3)
  double alpha = 1.65;         ///< course-loop bandwidth (1/s)
  double eta = kPi / 4.0;      ///< finite-time reaching gain
  int n = 3;                   ///< reaching exponent numerator (odd)
  int m = 5;                   ///< reaching exponent denominator (odd, co-prime with n)
  double sigma = kPi / 4.0;    ///< beta = sigma / (1 + |chi_tilde|)
  double epsilon = 0.05;       ///< boundary-layer width (rad)
  double delta_hys = 0.05;     ///< early exit margin from the course-reversal phase (rad)
  ReachingLaw reaching = ReachingLaw::kSaturated;

  double switching_distance() const;
  /// Throws std::invalid_argument naming the first violated invariant.
  void validate() const;

  /// Builds parameters from k1 and the switching distance (k3 = k1 / d_s^2).
  static GuidanceParams from_switching_distance(double k1, double d_s);
};

/// Active branch of the switched field.
///   kCase1: |d| > d_s and the course points more than pi/2 away from the
///           distance-only field; the field is rotated by rho * pi/2.
///   kCase2: |d| >= d_s, cubic branch.
///   kCase3: |d| < d_s, linear branch.
enum class GuidancePhase { kCase1 = 1, kCase2 = 2, kCase3 = 3 };

std::string to_string(GuidancePhase phase);

struct GuidanceOutput {
  double chi_d = 0.0;      ///< desired course chi_d(d, chi)
  double chi_c = 0.0;      ///< commanded course
  GuidancePhase phase = GuidancePhase::kCase3;
  double chi_tilde = 0.0;  ///< wrap(chi - chi_d)
};

/// chi_d(d) - chi_p, unwrapped. Lies in (-chi_inf, chi_inf).
double field_offset(double d, const GuidanceParams& params);

/// Distance-only switched field, cubic outside d_s and linear inside.
double desired_course_distance_only(double d, double chi_p, const GuidanceParams& params);

/// Phase predicate. Without a previous phase (first step) the course-reversal
/// threshold is pi/2; afterwards it is pi/2 + delta_hys for both entering and
/// leaving kCase1, so the exit happens before chi_tilde reaches zero and the
/// phase cannot re-enter on the next step.
GuidancePhase classify_phase(double d, double chi, double chi_d_of_d,
                             const GuidanceParams& params,
                             std::optional<GuidancePhase> prev_phase);

struct DesiredCourse {
  double chi_d = 0.0;
  GuidancePhase phase = GuidancePhase::kCase3;
};

DesiredCourse desired_course(double d, double chi, double chi_p, int rho,
                             const GuidanceParams& params,
                             std::optional<GuidancePhase> prev_phase);

/// x clipped to [-1, 1].
double sat(double x);

/// Commanded course for a given phase and desired course. Exposed so the
/// per-phase laws can be driven in isolation.
double phase_command(GuidancePhase phase, double chi, double chi_d, const PathFrame& frame,
                     const GuidanceParams& params, double ground_speed);

/// Full switched law: classifies the phase, builds chi_d(d, chi) and the
/// commanded course. frame.chi_p_dot carries the path course rate feed-forward.
GuidanceOutput commanded_course(const VehicleState& state, const PathFrame& frame,
                                const GuidanceParams& params,
                                std::optional<GuidancePhase> prev_phase, double ground_speed);

/// Settling time of chi_tilde' = -eta |chi_tilde|^(n/m):
///   t_s = m / (eta (m - n)) * |chi_tilde0|^((m - n) / m).
double case1_convergence_time(double chi_tilde0, const GuidanceParams& params);

/// Peak-rate coefficients of the two field branches for chi_inf = pi/2:
///   linear: max_d |chi_d' - chi_p'| = kLinearPeakCoeff * k1 * V_g at |d| = 1/(sqrt(2) k1)
///   cubic:  max_d |chi_d' - chi_p'| = kCubicPeakCoeff * k3^(1/3) * V_g
///           at |d| = 5^(1/6) / (2 k3)^(1/3)
/// For chi_inf < pi/2 both are upper bounds.
inline const double kLinearPeakCoeff = 2.0 / (3.0 * std::sqrt(3.0));
inline const double kCubicPeakCoeff = std::pow(2.0, 4.0 / 3.0) * std::pow(5.0, 5.0 / 6.0) / 9.0;

struct CurvatureReport {
  double linear_peak_rate = 0.0;      ///< rad/s
  double linear_peak_distance = 0.0;  ///< m
  bool linear_peak_in_branch = false; ///< peak distance <= d_s
  double cubic_peak_rate = 0.0;
  double cubic_peak_distance = 0.0;
  bool cubic_peak_in_branch = false;  ///< peak distance > d_s
  double lhs = 0.0;        ///< max{branch curvatures} - chi_p_dot_max / V_g  (1/m)
  double kappa_max = 0.0;  ///< +inf when unbounded
  double margin = 0.0;     ///< kappa_max - lhs
  bool feasible = false;
};

/// Curvature feasibility of the field parameters. kappa_max = 0 or +inf means
/// unbounded. Throws std::invalid_argument on V_g <= 0, chi_p_dot_max < 0,
/// kappa_max < 0 or invalid params.
CurvatureReport validate_curvature_constraint(const GuidanceParams& params, double ground_speed,
                                              double chi_p_dot_max, double kappa_max);

}  // namespace vfguide
