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

#include <sstream>

#include "vfguide/config.hpp"
#include "vfguide/report.hpp"

using namespace vfguide;

namespace {

RunConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in, "test.cfg");
}

std::string error_key(const std::string& text) {
  try {
    parse(text);
  } catch (const ConfigError& e) {
    return e.key();
  }
  return "<no error>";
}

}  // namespace

TEST(Config, EmptyFileReproducesDefaults) {
  const RunConfig cfg = parse("");
  EXPECT_EQ(dump_config(cfg), dump_config(default_run_config()));
  EXPECT_EQ(cfg.path.kind, PathKind::kSinusoid);
  EXPECT_NEAR(cfg.scenario.initial.s0, default_sinusoid_wavelength() / 2, 1e-9);
  EXPECT_NEAR(cfg.scenario.guidance.k1, 0.01, 0.0);
  EXPECT_NEAR(cfg.scenario.guidance.switching_distance(), 10.0, 1e-12);
  EXPECT_EQ(cfg.trials, 200u);
}

TEST(Config, ParsesSectionsAndComments) {
  const RunConfig cfg = parse(
      "# scenario\n[path]\nkind = circle\nradius = 500 ; metres\n[vehicle]\nwind_speed = 2\n"
      "wind_direction = 0\nintegrator = euler\n[guidance]\nreaching = sign\nn = 1\nm = 3\n"
      "[sim]\nd0 = -50\nrandomize = true\n");
  EXPECT_EQ(cfg.path.kind, PathKind::kCircle);
  EXPECT_EQ(cfg.scenario.path.kind(), PathKind::kCircle);
  EXPECT_EQ(cfg.path.radius, 500.0);
  EXPECT_NEAR(cfg.scenario.wind.wx, 2.0, 1e-12);
  EXPECT_EQ(cfg.scenario.integrator, Integrator::kEuler);
  EXPECT_EQ(cfg.scenario.guidance.reaching, ReachingLaw::kSign);
  EXPECT_EQ(cfg.scenario.guidance.n, 1);
  EXPECT_EQ(cfg.scenario.initial.d0, -50.0);
  EXPECT_EQ(cfg.scenario.initial.s0, 0.0);  // non-sinusoid paths start at s = 0
  EXPECT_TRUE(cfg.randomize);
}

TEST(Config, ErrorsNameTheOffendingKey) {
  EXPECT_EQ(error_key("[guidance]\nkk = 1\n"), "guidance.kk");
  EXPECT_EQ(error_key("[guidance]\nk1 = abc\n"), "guidance.k1");
  EXPECT_EQ(error_key("[guidance]\nk1 = -1\n"), "guidance.k1");
  EXPECT_EQ(error_key("[guidance]\nn = 2\n"), "guidance.n");
  EXPECT_EQ(error_key("[sim]\ndt = 0\n"), "sim.dt");
  EXPECT_EQ(error_key("[path]\nkind = spiral\n"), "path.kind");
  EXPECT_EQ(error_key("[path]\nradius = -3\nkind = circle\n"), "path.radius");
  EXPECT_EQ(error_key("[vehicle]\nwind_speed = 20\n"), "vehicle.wind_speed");
  EXPECT_EQ(error_key("[sim]\nmc_d0_min = 300\n"), "sim.mc_d0_min");
  EXPECT_EQ(error_key("[weather]\nrain = 1\n"), "weather");
  EXPECT_EQ(error_key("[sim]\nrandomize = maybe\n"), "sim.randomize");
  EXPECT_THROW(load_config("/nonexistent/vfguide.cfg"), ConfigError);
}

TEST(Config, DumpRoundTrip) {
  RunConfig cfg = parse(
      "[path]\nwavelength = 1500.123456789\n[guidance]\nk1 = 0.0123\nk3 = 2e-4\n"
      "delta_hys = 0.1\nkappa_max = 0\n[vehicle]\nwind_speed = 2.5\nwind_direction = -2.2\n"
      "[sim]\ndt = 0.005\nchi0 = 0.3\ntrials = 17\n");
  EXPECT_NEAR(cfg.scenario.initial.s0, 1500.123456789 / 2, 1e-9);
  const std::string text = dump_config(cfg);
  RunConfig again = parse(text);
  EXPECT_EQ(dump_config(again), text);
  EXPECT_EQ(again.scenario.guidance.k1, cfg.scenario.guidance.k1);
  EXPECT_EQ(again.scenario.wind.wx, cfg.scenario.wind.wx);
  EXPECT_EQ(again.scenario.wind.wy, cfg.scenario.wind.wy);
  EXPECT_EQ(again.scenario.initial.s0, cfg.scenario.initial.s0);
  EXPECT_EQ(again.trials, 17u);
  // The re-parsed configuration drives an identical run.
  cfg.scenario.t_max = again.scenario.t_max = 20.0;
  const TrialResult a = run_trial(cfg.scenario);
  const TrialResult b = run_trial(again.scenario);
  ASSERT_EQ(a.trajectory.samples.size(), b.trajectory.samples.size());
  EXPECT_EQ(a.trajectory.samples.back().x, b.trajectory.samples.back().x);
  EXPECT_EQ(a.trajectory.samples.back().chi, b.trajectory.samples.back().chi);
}

TEST(Report, TrajectoryCsvFormat) {
  Trajectory traj;
  TrajectorySample s;
  s.t = 0.01;
  s.x = 1.0 / 3.0;
  s.phase = 2;
  traj.samples.push_back(s);
  std::ostringstream os;
  write_trajectory_csv(os, traj);
  EXPECT_EQ(os.str(), "t,x,y,chi,chi_c,chi_d,chi_dot,d,phase\n0.01,0.333333333,0,0,0,0,0,0,2\n");
}

TEST(Report, SummaryColumnsAndExclusions) {
  MonteCarloSummary mc;
  LawSummary law;
  law.law = GuidanceLaw::kPlos;
  law.n_trials = 3;
  law.t_conv = box_stats({1.0, 2.0});
  law.d_rms = box_stats({1.0, 2.0, 3.0});
  mc.laws.push_back(law);
  std::ostringstream os;
  write_summary_csv(os, mc);
  std::istringstream lines(os.str());
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "law,metric,n_used,n_excluded,min,q1,median,q3,max,mean");
  std::getline(lines, line);
  EXPECT_EQ(line, "plos,t_conv,2,1,1,1.25,1.5,1.75,2,1.5");
  std::getline(lines, line);
  EXPECT_EQ(line, "plos,d_rms,3,0,1,1.5,2,2.5,3,2");
}

TEST(Report, FeasibilityOutputs) {
  const CurvatureReport r = validate_curvature_constraint(GuidanceParams{}, 15.0, 0.1, 0.7 / 15);
  std::ostringstream text;
  write_feasibility_text(text, r, {15.0, 0.1});
  EXPECT_NE(text.str().find("PASS"), std::string::npos);
  std::ostringstream csv;
  write_feasibility_csv(csv, r, {15.0, 0.1});
  EXPECT_NE(csv.str().find("lhs,0.0430237"), std::string::npos);
  EXPECT_NE(csv.str().find("feasible,true"), std::string::npos);
}
