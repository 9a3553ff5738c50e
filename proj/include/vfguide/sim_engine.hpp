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

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vfguide/baselines.hpp"
#include "vfguide/path_geometry.hpp"
#include "vfguide/switched_guidance.hpp"
#include "vfguide/vehicle.hpp"

namespace vfguide {

enum class GuidanceLaw { kSwitched, kBasicVf, kPlos, kNlgl };

std::string to_string(GuidanceLaw law);
/// Accepts switched, basic_vf, plos, nlgl.
GuidanceLaw law_from_string(const std::string& name);
std::vector<GuidanceLaw> all_laws();

/// Default reference path: y = 300 sin(2 pi x / L) with L chosen so a 15 m/s
/// vehicle following it turns at most 0.1 rad/s.
ReferencePath default_sinusoid();
double default_sinusoid_wavelength();

/// Start pose: the vehicle sits d0 along the path normal (-sin chi_p, cos chi_p)
/// of the path point at parameter s0, so the initial cross-track error is d0.
/// An explicit position overrides (s0, d0).
struct InitialCondition {
  double s0 = 0.0;
  double d0 = 200.0;
  double chi0 = -kPi / 4.0;
  std::optional<Vec2> position;
};

/// Convergence is declared at the first sample from which |d| <= d_threshold
/// and |wrap(chi - chi_p)| <= align_threshold hold for `dwell` seconds.
struct ConvergenceCriteria {
  double d_threshold = 15.0;
  double align_threshold = 0.2;
  double dwell = 5.0;
};

/// Random initial conditions and wind, drawn uniformly from each range.
struct SamplingSpec {
  double d0_min = 100.0;
  double d0_max = 200.0;
  double chi0_min = -kPi;
  double chi0_max = kPi;
  double wind_speed_min = 2.0;
  double wind_speed_max = 3.0;
  double wind_dir_min = -2.5;
  double wind_dir_max = -2.0;

  void validate() const;
};

struct ScenarioConfig {
  ReferencePath path = default_sinusoid();
  GuidanceLaw law = GuidanceLaw::kSwitched;
  GuidanceParams guidance;  ///< alpha here drives the course loop of every law
  BaselineParams baselines;
  AirspeedSpec airspeed;
  WindModel wind;
  InitialCondition initial;
  double dt = 0.01;
  double t_max = 300.0;
  Integrator integrator = Integrator::kRk4;
  ConvergenceCriteria convergence;
  double chatter_window = 1.0;
  /// When set, run_trial draws d0, chi0 and the wind from it using the seed.
  std::optional<SamplingSpec> sampling;

  void validate() const;
};

struct TrajectorySample {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double chi = 0.0;
  double chi_c = 0.0;
  double chi_d = 0.0;
  double chi_dot = 0.0;
  double d = 0.0;
  double chi_p = 0.0;
  int phase = 0;  ///< 1..3 for the switched law, 0 for baselines
};

struct Trajectory {
  double dt = 0.01;
  std::vector<TrajectorySample> samples;
};

struct TrialMetrics {
  std::optional<double> t_conv;
  double d_rms = 0.0;
  double chi_dot_rms = 0.0;
  double chi_dot_max = 0.0;
  double chattering_index = 0.0;
  bool converged = false;
  std::string failure;  ///< non-empty when the trial aborted
};

struct TrialResult {
  Trajectory trajectory;
  TrialMetrics metrics;
  ScenarioConfig scenario;  ///< after sampling
};

/// Applies `sampling` (if any) with the given seed.
ScenarioConfig sample_scenario(const ScenarioConfig& config, std::uint64_t seed);

VehicleState initial_state(const ScenarioConfig& config);

/// Closed loop at fixed dt: path frame, guidance command, vehicle step.
/// Deterministic in (config, seed). A look-ahead failure ends the trial early
/// and is reported in metrics.failure.
TrialResult run_trial(const ScenarioConfig& config, std::uint64_t seed = 0);

TrialMetrics compute_metrics(const Trajectory& traj, const ScenarioConfig& config);

/// Largest sign-change rate of chi_dot (changes per second) over windows of
/// length `window` centred on phase transitions. Zero samples are skipped.
double chattering_index(const Trajectory& traj, double window);

/// Box-plot statistics; quartiles by linear interpolation between order
/// statistics.
struct BoxStats {
  std::size_t n = 0;
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
  double mean = 0.0;
};

BoxStats box_stats(std::vector<double> values);

struct LawSummary {
  GuidanceLaw law = GuidanceLaw::kSwitched;
  std::size_t n_trials = 0;
  std::size_t n_converged = 0;
  std::size_t n_failed = 0;
  BoxStats t_conv;  ///< converged trials only
  BoxStats d_rms;   ///< the remaining metrics exclude failed trials
  BoxStats chi_dot_rms;
  BoxStats chi_dot_max;
  BoxStats chattering_index;
  std::vector<TrialMetrics> trials;
};

struct MonteCarloSummary {
  std::uint64_t master_seed = 0;
  std::size_t n_trials = 0;
  std::vector<LawSummary> laws;
};

/// Per-trial seed derived from the master seed and trial index. Trial i uses
/// the same seed for every law, so the laws face identical conditions.
std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t index);

/// Runs n_trials sampled trials per law. Uses config.sampling, or the default
/// SamplingSpec when unset. threads = 0 picks the hardware concurrency.
MonteCarloSummary monte_carlo(const ScenarioConfig& config, std::span<const GuidanceLaw> laws,
                              std::size_t n_trials, std::uint64_t master_seed,
                              unsigned threads = 0);

}  // namespace vfguide
