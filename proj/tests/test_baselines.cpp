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

#include "vfguide/baselines.hpp"
#include "vfguide/sim_engine.hpp"

using namespace vfguide;

TEST(BasicVf, Examples) {
  const BasicVfParams p;
  PathFrame f;
  f.chi_p = 0.3;
  EXPECT_EQ(basic_vf_command({0, 0, 0.3}, f, p), 0.3);
  EXPECT_NEAR(basic_vf_desired_course(1e9, 0.0, p), -kPi / 2, 1e-6);
  EXPECT_NEAR(basic_vf_desired_course(50.0, 0.0, p), -kPi / 4, 1e-12);
  f.chi_p = 0.0;
  f.d = 50.0;
  EXPECT_NEAR(basic_vf_command({0, 50, 1.0}, f, p), -kPi / 4, 1e-12);
}

TEST(Plos, OnPathAlignedIsEquilibrium) {
  const auto line = ReferencePath::line({0, 0}, 0.4);
  const VehicleState s{10 * std::cos(0.4), 10 * std::sin(0.4), 0.4};
  const PathFrame f = closest_point(line, {s.x, s.y});
  EXPECT_NEAR(plos_command(s, f, line, PlosParams{}, 15.0, 1.65), 0.4, 1e-9);
}

TEST(Plos, LargeOffsetPointsTowardPath) {
  const auto line = ReferencePath::line({0, 0}, 0.0);
  for (double d : {200.0, -200.0}) {
    const VehicleState s{0.0, d, 0.0};
    const PathFrame f = closest_point(line, {s.x, s.y});
    const double chi_c = plos_command(s, f, line, PlosParams{}, 15.0, 1.65);
    const double rel = angle_diff(chi_c, f.chi_p);
    EXPECT_EQ(sign(rel), -sign(f.d));
    EXPECT_GT(std::abs(rel), kPi / 4);
  }
}

TEST(Plos, GoldenStraightLineGeometry) {
  // Frozen output for a fixed geometry; guards against silent regressions.
  const auto line = ReferencePath::line({0, 0}, 0.0);
  const VehicleState s{0.0, 120.0, 0.5};
  const PathFrame f = closest_point(line, {s.x, s.y});
  EXPECT_NEAR(plos_command(s, f, line, PlosParams{}, 15.0, 1.65), -1.0006092164212941, 1e-9);
}

TEST(Plos, AtPursuitPointFallsBackToPathCourse) {
  const auto line = ReferencePath::line({0, 0}, 0.0);
  PlosParams p;
  p.lookahead = 0.0;
  const VehicleState s{5.0, 0.0, 0.0};
  const PathFrame f = closest_point(line, {s.x, s.y});
  EXPECT_NEAR(plos_command(s, f, line, p, 15.0, 1.65), 0.0, 1e-12);
}

TEST(Nlgl, OnPathAlignedIsEquilibrium) {
  const auto line = ReferencePath::line({0, 0}, -1.0);
  const VehicleState s{0.0, 0.0, -1.0};
  const PathFrame f = closest_point(line, {s.x, s.y});
  EXPECT_NEAR(nlgl_command(s, line, f, NlglParams{}, 15.0, 1.65), -1.0, 1e-9);
}

TEST(Nlgl, TangentCircleTargetsClosestPoint) {
  const auto line = ReferencePath::line({0, 0}, 0.0);
  const VehicleState s{20.0, 110.0, 0.0};
  const PathFrame f = closest_point(line, {s.x, s.y});
  const PursuitTarget t = nlgl_target(line, s, f, NlglParams{});
  EXPECT_NEAR(t.point.x, 20.0, 1e-3);
  EXPECT_NEAR(t.point.y, 0.0, 1e-9);
  EXPECT_NEAR(t.los, -kPi / 2, 1e-4);
}

TEST(Nlgl, BeyondLookAheadIsInfeasible) {
  const auto line = ReferencePath::line({0, 0}, 0.0);
  const VehicleState s{0.0, 200.0, 0.0};
  const PathFrame f = closest_point(line, {s.x, s.y});
  try {
    nlgl_command(s, line, f, NlglParams{}, 15.0, 1.65);
    FAIL() << "expected InfeasibleError";
  } catch (const InfeasibleError& e) {
    EXPECT_NE(std::string(e.what()).find("look-ahead infeasible"), std::string::npos);
  }
}

TEST(Nlgl, IntersectionLiesOnPathAtL1) {
  const auto sine = default_sinusoid();
  std::mt19937_64 gen(23);
  std::uniform_real_distribution<double> us(0.0, 10000.0);
  std::uniform_real_distribution<double> ud(-100.0, 100.0);
  for (int i = 0; i < 200; ++i) {
    const double s0 = us(gen);
    const Vec2 base = sine.evaluate(s0);
    const Vec2 p{base.x, base.y + ud(gen)};
    const PathFrame f = closest_point(sine, p);
    const PursuitTarget t = nlgl_target(sine, {p.x, p.y, 0.0}, f, NlglParams{});
    EXPECT_NEAR((t.point - p).norm(), 110.0, 1e-3);
    EXPECT_NEAR((sine.evaluate(t.s) - t.point).norm(), 0.0, 1e-3);
    EXPECT_GT(t.s, f.s_star);
  }
}

TEST(CircleCrossing, CirclePathAndOutsideStart) {
  const auto circle = ReferencePath::circle({0, 0}, 100.0);
  const auto s = forward_circle_crossing(circle, {100, 0}, 50.0, 0.0);
  ASSERT_TRUE(s.has_value());
  EXPECT_NEAR((circle.evaluate(*s) - Vec2{100, 0}).norm(), 50.0, 1e-6);
  EXPECT_NEAR(*s, 2.0 * std::asin(0.25), 1e-8);
  EXPECT_FALSE(forward_circle_crossing(circle, {300, 0}, 50.0, 0.0).has_value());
}

TEST(Baselines, CommandsWrappedAndFinite) {
  const auto sine = default_sinusoid();
  std::mt19937_64 gen(29);
  std::uniform_real_distribution<double> us(100.0, 10000.0);
  std::uniform_real_distribution<double> ud(-100.0, 100.0);
  std::uniform_real_distribution<double> uc(-kPi, kPi);
  for (int i = 0; i < 200; ++i) {
    const Vec2 base = sine.evaluate(us(gen));
    const VehicleState st{base.x, base.y + ud(gen), uc(gen)};
    const PathFrame f = closest_point(sine, {st.x, st.y});
    for (double c : {basic_vf_command(st, f, BasicVfParams{}),
                     plos_command(st, f, sine, PlosParams{}, 15.0, 1.65),
                     nlgl_command(st, sine, f, NlglParams{}, 15.0, 1.65)}) {
      EXPECT_TRUE(std::isfinite(c));
      EXPECT_GT(c, -kPi);
      EXPECT_LE(c, kPi);
    }
  }
}

TEST(Baselines, Validation) {
  BaselineParams p;
  EXPECT_NO_THROW(p.validate());
  p.nlgl.l1 = 0.0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = BaselineParams{};
  p.plos.k2 = -1.0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
}
