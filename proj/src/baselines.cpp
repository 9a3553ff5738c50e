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

#include "vfguide/baselines.hpp"

#include <algorithm>
#include <cmath>

namespace vfguide {
namespace {

constexpr int kStepsPerRadius = 8;
constexpr double kMaxArcInRadii = 4.0 * kPi;
constexpr double kRootTolerance = 1e-10;

// Illinois-modified regula falsi on a bracket with f(a) <= 0 < f(b).
template <class F>
double refine_root(F&& f, double a, double fa, double b, double fb) {
  int side = 0;
  for (int i = 0; i < 100 && b - a > kRootTolerance; ++i) {
    const double c = fa == fb ? 0.5 * (a + b) : (a * fb - b * fa) / (fb - fa);
    const double fc = f(c);
    if (fc > 0.0) {
      b = c;
      fb = fc;
      if (side == -1) fa *= 0.5;
      side = -1;
    } else {
      a = c;
      fa = fc;
      if (side == 1) fb *= 0.5;
      side = 1;
    }
    if (fc == 0.0) return c;
  }
  return 0.5 * (a + b);
}

}  // namespace

void BaselineParams::validate() const {
  if (!(basic_vf.k > 0.0)) throw std::invalid_argument("baselines.vf_k must be positive");
  if (!(basic_vf.chi_inf > 0.0 && basic_vf.chi_inf <= kPi / 2.0)) {
    throw std::invalid_argument("baselines.vf_chi_inf must lie in (0, pi/2]");
  }
  if (!(plos.k1 > 0.0)) throw std::invalid_argument("baselines.plos_k1 must be positive");
  if (!(plos.k2 > 0.0)) throw std::invalid_argument("baselines.plos_k2 must be positive");
  if (!(plos.lookahead >= 0.0)) {
    throw std::invalid_argument("baselines.plos_lookahead must be non-negative");
  }
  if (!(nlgl.l1 > 0.0)) throw std::invalid_argument("baselines.nlgl_l1 must be positive");
}

double basic_vf_desired_course(double d, double chi_p, const BasicVfParams& params) {
  return wrap_angle(chi_p - params.chi_inf * (2.0 / kPi) * std::atan(params.k * d));
}

double basic_vf_command(const VehicleState& /*state*/, const PathFrame& frame,
                        const BasicVfParams& params) {
  return basic_vf_desired_course(frame.d, frame.chi_p, params);
}

std::optional<double> forward_circle_crossing(const ReferencePath& path, Vec2 center,
                                              double radius, double s_start) {
  auto excess = [&](double s) { return (path.evaluate(s) - center).norm() - radius; };
  if (excess(s_start) > 1e-9 * radius) return std::nullopt;

  const double s_limit = path.periodic() ? s_start + kTwoPi : path.domain().second;
  double walked = 0.0;
  double a = s_start;
  while (walked < kMaxArcInRadii * radius && a < s_limit) {
    const double speed = path.speed(a);
    const double b = std::min(a + radius / (kStepsPerRadius * speed), s_limit);
    const double fb = excess(b);
    if (fb > 0.0) return refine_root(excess, a, excess(a), b, fb);
    walked += (b - a) * speed;
    a = b;
  }
  return std::nullopt;
}

double course_command_for_rate(double chi, double rate, double alpha) {
  constexpr double kLimit = kPi * (1.0 - 1e-9);
  return wrap_angle(chi + std::clamp(rate / alpha, -kLimit, kLimit));
}

double plos_command(const VehicleState& state, const PathFrame& frame, const ReferencePath& path,
                    const PlosParams& params, double ground_speed, double alpha) {
  const Vec2 p{state.x, state.y};
  double los = frame.chi_p;
  std::optional<double> s_target;
  if (params.lookahead > 0.0) {
    s_target = forward_circle_crossing(path, frame.p_ref, params.lookahead, frame.s_star);
  }
  const Vec2 target = s_target ? path.evaluate(*s_target) : frame.p_ref;
  const Vec2 r = target - p;
  if (r.norm() > 1e-9) los = std::atan2(r.y, r.x);
  const double accel = params.k1 * angle_diff(los, state.chi) - params.k2 * frame.d;
  return course_command_for_rate(state.chi, accel / ground_speed, alpha);
}

PursuitTarget nlgl_target(const ReferencePath& path, const VehicleState& state,
                          const PathFrame& frame, const NlglParams& params) {
  const Vec2 p{state.x, state.y};
  const auto s = forward_circle_crossing(path, p, params.l1, frame.s_star);
  if (!s) {
    throw InfeasibleError("look-ahead infeasible: no path point at distance L1 = " +
                          std::to_string(params.l1) + " m (|d| = " +
                          std::to_string(std::abs(frame.d)) + " m)");
  }
  PursuitTarget t;
  t.s = *s;
  t.point = path.evaluate(*s);
  const Vec2 r = t.point - p;
  t.los = r.norm() > 1e-12 ? std::atan2(r.y, r.x) : frame.chi_p;
  return t;
}

double nlgl_command(const VehicleState& state, const ReferencePath& path, const PathFrame& frame,
                    const NlglParams& params, double ground_speed, double alpha) {
  const PursuitTarget t = nlgl_target(path, state, frame, params);
  const double eta = angle_diff(t.los, state.chi);
  const double rate = 2.0 * ground_speed * std::sin(eta) / params.l1;
  return course_command_for_rate(state.chi, rate, alpha);
}

}  // namespace vfguide
