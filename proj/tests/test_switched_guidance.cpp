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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "vfguide/path_geometry.hpp"
#include "vfguide/switched_guidance.hpp"
#include "vfguide/vehicle.hpp"

using namespace vfguide;

namespace {

GuidanceParams defaults() { return GuidanceParams{}; }

// Rate of the field offset felt by a vehicle that flies exactly along the
// field: scale * g(d) * V * |sin(offset(d))|.
double field_rate_along_field(double d, const GuidanceParams& p, bool cubic, double v) {
  const double scale = p.chi_inf * 2.0 / kPi;
  const double u = cubic ? p.k3 * d * d * d : p.k1 * d;
  const double g = cubic ? 3.0 * p.k3 * d * d / (1.0 + u * u) : p.k1 / (1.0 + u * u);
  return scale * g * v * std::abs(std::sin(scale * std::atan(u)));
}

// Maximizes f over [lo, hi] by dense sampling followed by golden-section search.
template <class F>
double maximize(F f, double lo, double hi) {
  const int n = 20000;
  int best = 0;
  double best_v = -INFINITY;
  for (int i = 0; i <= n; ++i) {
    const double v = f(lo + (hi - lo) * i / n);
    if (v > best_v) {
      best_v = v;
      best = i;
    }
  }
  double a = lo + (hi - lo) * std::max(best - 1, 0) / n;
  double b = lo + (hi - lo) * std::min(best + 1, n) / n;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int i = 0; i < 200; ++i) {
    const double c = b - g * (b - a);
    const double d = a + g * (b - a);
    (f(c) > f(d) ? b : a) = (f(c) > f(d) ? d : c);
  }
  return f(0.5 * (a + b));
}

}  // namespace

TEST(Params, DefaultsAndValidation) {
  GuidanceParams p = defaults();
  EXPECT_NEAR(p.switching_distance(), 10.0, 1e-12);
  EXPECT_NO_THROW(p.validate());
  p.n = 2;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = defaults();
  p.n = 3;
  p.m = 9;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = defaults();
  p.n = 5;
  p.m = 3;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = defaults();
  p.chi_inf = 2.0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = defaults();
  p.epsilon = 0.0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  const GuidanceParams q = GuidanceParams::from_switching_distance(0.01, 10.0);
  EXPECT_NEAR(q.k3, 1e-4, 1e-18);
}

TEST(DistanceField, Examples) {
  const GuidanceParams p = defaults();
  EXPECT_EQ(desired_course_distance_only(0.0, 0.4, p), 0.4);
  EXPECT_NEAR(desired_course_distance_only(1e9, 0.0, p), -kPi / 2, 1e-9);
  const double d_s = p.switching_distance();
  const double linear = -std::atan(p.k1 * d_s);
  const double cubic = -std::atan(p.k3 * d_s * d_s * d_s);
  EXPECT_NEAR(linear, cubic, 1e-12);
  EXPECT_NEAR(desired_course_distance_only(d_s, 0.0, p), -0.09967, 1e-5);
  EXPECT_NEAR(desired_course_distance_only(std::nextafter(d_s, 1e9), 0.0, p), cubic, 1e-12);
}

TEST(DistanceField, ContinuityOddSymmetryRange) {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    GuidanceParams p;
    p.k1 = std::pow(10.0, -3.0 + 2.0 * u(gen));
    p.k3 = p.k1 / std::pow(1.0 + 99.0 * u(gen), 2);
    p.chi_inf = kPi / 2 * (0.05 + 0.95 * u(gen));
    const double chi_p = kPi * (2.0 * u(gen) - 1.0);
    const double d_s = p.switching_distance();
    const double below = angle_diff(desired_course_distance_only(d_s - 1e-9, chi_p, p), chi_p);
    const double above = angle_diff(desired_course_distance_only(d_s + 1e-9, chi_p, p), chi_p);
    EXPECT_LT(std::abs(below - above), 1e-6);
    const double d = 500.0 * (2.0 * u(gen) - 1.0);
    const double plus = angle_diff(desired_course_distance_only(d, chi_p, p), chi_p);
    const double minus = angle_diff(desired_course_distance_only(-d, chi_p, p), chi_p);
    EXPECT_NEAR(plus, -minus, 1e-12);
    EXPECT_LT(std::abs(plus), p.chi_inf);
  }
}

TEST(ClassifyPhase, Examples) {
  const GuidanceParams p = defaults();
  EXPECT_EQ(classify_phase(200.0, 3.0, 0.0, p, GuidancePhase::kCase2), GuidancePhase::kCase1);
  EXPECT_EQ(classify_phase(5.0, 3.0, 0.0, p, GuidancePhase::kCase1), GuidancePhase::kCase3);
  EXPECT_EQ(classify_phase(-5.0, 0.0, 0.0, p, std::nullopt), GuidancePhase::kCase3);
  // Case-1 exit at the hysteresis margin.
  EXPECT_EQ(classify_phase(200.0, kPi / 2 + 0.04, 0.0, p, GuidancePhase::kCase1),
            GuidancePhase::kCase2);
  EXPECT_EQ(classify_phase(200.0, kPi / 2 + 0.06, 0.0, p, GuidancePhase::kCase1),
            GuidancePhase::kCase1);
  // Without history the plain right-angle test applies.
  EXPECT_EQ(classify_phase(200.0, kPi / 2 + 0.04, 0.0, p, std::nullopt), GuidancePhase::kCase1);
  EXPECT_EQ(classify_phase(200.0, kPi / 2 - 0.01, 0.0, p, std::nullopt), GuidancePhase::kCase2);
}

TEST(ClassifyPhase, NoReentryOverOneClosedLoopStep) {
  // Start just past the exit margin with Case-1 history: the next step must
  // not fall back into Case 1.
  const GuidanceParams p = defaults();
  const auto line = ReferencePath::line({0, 0}, 0.0);
  VehicleState s{0.0, 200.0, 0.0};
  PathFrame f = closest_point(line, {s.x, s.y});
  const double chi_dd = desired_course_distance_only(f.d, f.chi_p, p);
  s.chi = wrap_angle(chi_dd + kPi / 2 + 0.04);
  const GuidanceOutput out = commanded_course(s, f, p, GuidancePhase::kCase1, 15.0);
  ASSERT_EQ(out.phase, GuidancePhase::kCase2);
  s = step(s, out.chi_c, {15.0}, {}, p.alpha, 0.01);
  f = closest_point(line, {s.x, s.y});
  const GuidanceOutput next = commanded_course(s, f, p, out.phase, 15.0);
  EXPECT_EQ(next.phase, GuidancePhase::kCase2);
}

TEST(DesiredCourse, Examples) {
  const GuidanceParams p = defaults();
  const double chi_dd = -std::atan(1e-4 * 200.0 * 200.0 * 200.0);
  EXPECT_NEAR(chi_dd, -1.5695, 1e-4);
  // Case 1 with rho = +1: heading far from the field.
  const DesiredCourse c1 = desired_course(200.0, chi_dd + 3.0, 0.0, 1, p, std::nullopt);
  EXPECT_EQ(c1.phase, GuidancePhase::kCase1);
  EXPECT_NEAR(c1.chi_d, chi_dd + kPi / 2, 1e-12);
  EXPECT_NEAR(c1.chi_d, std::atan(1.0 / 800.0), 1e-12);
  const DesiredCourse c3 = desired_course(0.0, 0.2, 0.0, 1, p, std::nullopt);
  EXPECT_EQ(c3.phase, GuidancePhase::kCase3);
  EXPECT_EQ(c3.chi_d, 0.0);
  const DesiredCourse c2 = desired_course(-200.0, 1.5, 0.0, -1, p, std::nullopt);
  EXPECT_EQ(c2.phase, GuidancePhase::kCase2);
  EXPECT_NEAR(c2.chi_d, -chi_dd, 1e-12);
  EXPECT_NEAR(c2.chi_d, 1.5695, 1e-4);
}

TEST(Sat, Examples) {
  EXPECT_EQ(sat(0.5), 0.5);
  EXPECT_EQ(sat(-3.0), -1.0);
  EXPECT_EQ(sat(1.0), 1.0);
  EXPECT_EQ(sat(-0.25), -sat(0.25));
}

TEST(CommandedCourse, OnPathEquilibrium) {
  PathFrame f;
  f.chi_p = 0.7;
  const GuidanceOutput out = commanded_course({0, 0, 0.7}, f, defaults(), std::nullopt, 15.0);
  EXPECT_EQ(out.phase, GuidancePhase::kCase3);
  EXPECT_EQ(out.chi_tilde, 0.0);
  EXPECT_EQ(out.chi_c, 0.7);
  EXPECT_THROW(commanded_course({0, 0, 0.7}, f, defaults(), std::nullopt, 0.0),
               std::invalid_argument);
}

TEST(CommandedCourse, BoundaryLayerReachingTerm) {
  const GuidanceParams p = defaults();
  PathFrame f;
  f.chi_p = 0.0;
  f.d = 0.0;
  const double chi = p.epsilon / 2.0;
  const GuidanceOutput out = commanded_course({0, 0, chi}, f, p, std::nullopt, 15.0);
  ASSERT_EQ(out.phase, GuidancePhase::kCase3);
  EXPECT_NEAR(out.chi_tilde, p.epsilon / 2.0, 1e-15);
  const double beta = p.sigma / (1.0 + p.epsilon / 2.0);
  const double field = p.k1 * 15.0 * std::sin(chi);  // chi_inf * 2 / pi = 1
  const double expected = chi + (-field - beta * 0.5) / p.alpha;
  EXPECT_NEAR(out.chi_c, expected, 1e-12);
}

TEST(CommandedCourse, Case1ClosedLoopFollowsReducedDynamics) {
  // Along a straight line with the Case-1 law, chi_tilde obeys
  // d(chi_tilde)/dt = -eta |chi_tilde|^(n/m) until it reaches zero at t_s.
  const GuidanceParams p = defaults();
  const auto line = ReferencePath::line({0, 0}, 0.0);
  VehicleState s{0.0, 200.0, 0.0};
  PathFrame f = closest_point(line, {s.x, s.y});
  ASSERT_EQ(f.rho, 1);
  const auto case1_target = [&](const PathFrame& fr) {
    return wrap_angle(desired_course_distance_only(fr.d, fr.chi_p, p) + fr.rho * kPi / 2);
  };
  s.chi = wrap_angle(case1_target(f) + 1.0);
  const double t_s = case1_convergence_time(1.0, p);
  const double dt = 0.001;
  double prev_abs_d = std::abs(f.d);
  for (int k = 1; k * dt < 0.98 * t_s; ++k) {
    const double chi_c = phase_command(GuidancePhase::kCase1, s.chi, case1_target(f), f, p, 15.0);
    s = step(s, chi_c, {15.0}, {}, p.alpha, dt);
    f = closest_point(line, {s.x, s.y});
    const double t = k * dt;
    const double analytic = std::pow(1.0 - t / t_s, 2.5);  // (m/(m-n)) = 2.5
    EXPECT_NEAR(angle_diff(s.chi, case1_target(f)), analytic, 0.01);
    EXPECT_GE(std::abs(f.d), prev_abs_d - 1e-9);  // |d| grows during Case 1
    prev_abs_d = std::abs(f.d);
  }
}

TEST(ConvergenceTime, Examples) {
  const GuidanceParams p = defaults();
  EXPECT_EQ(case1_convergence_time(0.0, p), 0.0);
  EXPECT_NEAR(case1_convergence_time(1.0, p), 10.0 / kPi, 1e-12);
  EXPECT_NEAR(case1_convergence_time(0.25, p), (10.0 / kPi) * std::pow(0.25, 0.4), 1e-12);
  EXPECT_NEAR(case1_convergence_time(0.25, p), 1.8282, 1e-4);
  EXPECT_NEAR(case1_convergence_time(-0.25, p), case1_convergence_time(0.25, p), 1e-15);
}

TEST(ConvergenceTime, MatchesIntegratedReducedDynamics) {
  const GuidanceParams p = defaults();
  for (double x0 : {1.0, 0.25, 2.0}) {
    double x = x0;
    double t = 0.0;
    const double h = 1e-5;
    while (x > 0.0) {
      x -= h * p.eta * std::pow(x, 0.6);
      t += h;
    }
    EXPECT_NEAR(t, case1_convergence_time(x0, p), 1e-3);
  }
}

TEST(Curvature, BranchPeaksMatchNumericalMaximization) {
  const GuidanceParams p = defaults();
  const double v = 15.0;
  const CurvatureReport r = validate_curvature_constraint(p, v, 0.1, 0.7 / 15.0);
  const double cubic = maximize([&](double d) { return field_rate_along_field(d, p, true, v); },
                                1e-3, 1000.0);
  const double linear = maximize([&](double d) { return field_rate_along_field(d, p, false, v); },
                                 1e-3, 1000.0);
  EXPECT_NEAR(r.cubic_peak_rate, cubic, 1e-6);
  EXPECT_NEAR(r.linear_peak_rate, linear, 1e-6);
  EXPECT_NEAR(r.cubic_peak_rate / v, 0.04970, 1e-5);
  EXPECT_NEAR(r.linear_peak_rate / v, 0.003849, 1e-6);
  EXPECT_NEAR(r.linear_peak_distance, 1.0 / (std::sqrt(2.0) * 0.01), 1e-9);
  EXPECT_NEAR(r.cubic_peak_distance, std::pow(5.0, 1.0 / 6.0) / std::cbrt(2.0 * 1e-4), 1e-9);
  EXPECT_TRUE(r.cubic_peak_in_branch);
  EXPECT_FALSE(r.linear_peak_in_branch);
}

TEST(Curvature, FeasibilityDecision) {
  GuidanceParams p = defaults();
  const CurvatureReport ok = validate_curvature_constraint(p, 15.0, 0.1, 0.7 / 15.0);
  EXPECT_NEAR(ok.lhs, 0.04970 - 0.1 / 15.0, 1e-5);
  EXPECT_NEAR(ok.lhs, 0.04302, 1e-5);
  EXPECT_TRUE(ok.feasible);
  EXPECT_GT(ok.margin, 0.0);
  p.k1 = 0.2;
  const CurvatureReport bad = validate_curvature_constraint(p, 15.0, 0.1, 0.7 / 15.0);
  EXPECT_NEAR(bad.linear_peak_rate / 15.0, 0.0770, 1e-4);
  EXPECT_FALSE(bad.feasible);
  EXPECT_TRUE(validate_curvature_constraint(p, 15.0, 0.1, 0.0).feasible);
  EXPECT_TRUE(validate_curvature_constraint(p, 15.0, 0.1, INFINITY).feasible);
  EXPECT_THROW(validate_curvature_constraint(p, 0.0, 0.1, 0.1), std::invalid_argument);
  EXPECT_THROW(validate_curvature_constraint(p, 15.0, -0.1, 0.1), std::invalid_argument);
  EXPECT_THROW(validate_curvature_constraint(p, 15.0, 0.1, -1.0), std::invalid_argument);
}
