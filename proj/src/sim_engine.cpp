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

#include "vfguide/sim_engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>

namespace vfguide {
namespace {

constexpr double kDefaultAmplitude = 300.0;
constexpr double kDefaultPathRate = 0.1;  // rad/s at the nominal airspeed
constexpr double kNominalSpeed = 15.0;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// std::uniform_real_distribution is implementation-defined; this is not.
double uniform(std::mt19937_64& gen, double lo, double hi) {
  const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

double quantile(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto i = static_cast<std::size_t>(std::floor(pos));
  const std::size_t j = std::min(i + 1, sorted.size() - 1);
  return sorted[i] + (pos - static_cast<double>(i)) * (sorted[j] - sorted[i]);
}

}  // namespace

std::string to_string(GuidanceLaw law) {
  switch (law) {
    case GuidanceLaw::kSwitched:
      return "switched";
    case GuidanceLaw::kBasicVf:
      return "basic_vf";
    case GuidanceLaw::kPlos:
      return "plos";
    case GuidanceLaw::kNlgl:
      return "nlgl";
  }
  return "unknown";
}

GuidanceLaw law_from_string(const std::string& name) {
  for (GuidanceLaw law : all_laws()) {
    if (to_string(law) == name) return law;
  }
  throw std::invalid_argument("unknown guidance law '" + name +
                              "' (expected switched, basic_vf, plos or nlgl)");
}

std::vector<GuidanceLaw> all_laws() {
  return {GuidanceLaw::kSwitched, GuidanceLaw::kBasicVf, GuidanceLaw::kPlos, GuidanceLaw::kNlgl};
}

double default_sinusoid_wavelength() {
  // Peak curvature of A sin(2 pi x / L) is A (2 pi / L)^2.
  return kTwoPi * std::sqrt(kDefaultAmplitude * kNominalSpeed / kDefaultPathRate);
}

ReferencePath default_sinusoid() {
  return ReferencePath::sinusoid(kDefaultAmplitude, default_sinusoid_wavelength(), -2000.0,
                                 12000.0);
}

void SamplingSpec::validate() const {
  if (!(d0_min <= d0_max)) throw std::invalid_argument("sim.mc_d0_min exceeds sim.mc_d0_max");
  if (!(chi0_min <= chi0_max)) throw std::invalid_argument("sim.mc_chi0_min exceeds sim.mc_chi0_max");
  if (!(wind_speed_min >= 0.0 && wind_speed_min <= wind_speed_max)) {
    throw std::invalid_argument("sim.mc_wind_speed_min: bad wind speed range");
  }
  if (!(wind_dir_min <= wind_dir_max)) throw std::invalid_argument("sim.mc_wind_dir_min exceeds sim.mc_wind_dir_max");
}

void ScenarioConfig::validate() const {
  guidance.validate();
  baselines.validate();
  if (!(airspeed.airspeed > 0.0)) throw std::invalid_argument("vehicle.airspeed must be positive");
  if (wind.speed() >= airspeed.airspeed) {
    throw std::invalid_argument("vehicle.wind_speed must be below vehicle.airspeed");
  }
  if (!(dt > 0.0)) throw std::invalid_argument("sim.dt must be positive");
  if (!(t_max > 0.0)) throw std::invalid_argument("sim.t_max must be positive");
  if (!(convergence.d_threshold > 0.0)) throw std::invalid_argument("sim.d_threshold must be positive");
  if (!(convergence.align_threshold > 0.0)) {
    throw std::invalid_argument("sim.align_threshold must be positive");
  }
  if (!(convergence.dwell >= 0.0)) throw std::invalid_argument("sim.dwell must be non-negative");
  if (!(chatter_window > dt)) throw std::invalid_argument("sim.chatter_window must exceed dt");
  if (sampling) {
    sampling->validate();
    if (sampling->wind_speed_max >= airspeed.airspeed) {
      throw std::invalid_argument("sim.mc_wind_speed_max must stay below vehicle.airspeed");
    }
  }
}

ScenarioConfig sample_scenario(const ScenarioConfig& config, std::uint64_t seed) {
  ScenarioConfig out = config;
  if (!config.sampling) return out;
  const SamplingSpec& sp = *config.sampling;
  std::mt19937_64 gen(seed);
  out.initial.d0 = uniform(gen, sp.d0_min, sp.d0_max);
  out.initial.chi0 = uniform(gen, sp.chi0_min, sp.chi0_max);
  const double wind_speed = uniform(gen, sp.wind_speed_min, sp.wind_speed_max);
  const double wind_dir = uniform(gen, sp.wind_dir_min, sp.wind_dir_max);
  out.wind = WindModel::from_polar(wind_speed, wind_dir);
  out.initial.position.reset();
  out.sampling.reset();
  return out;
}

VehicleState initial_state(const ScenarioConfig& config) {
  const InitialCondition& ic = config.initial;
  VehicleState st;
  st.chi = wrap_angle(ic.chi0);
  if (ic.position) {
    st.x = ic.position->x;
    st.y = ic.position->y;
    return st;
  }
  const Vec2 base = config.path.evaluate(ic.s0);
  const Vec2 t = config.path.tangent(ic.s0);
  const Vec2 normal{-t.y, t.x};
  st.x = base.x + ic.d0 * normal.x;
  st.y = base.y + ic.d0 * normal.y;
  return st;
}

TrialResult run_trial(const ScenarioConfig& base_config, std::uint64_t seed) {
  TrialResult result;
  result.scenario = sample_scenario(base_config, seed);
  const ScenarioConfig& cfg = result.scenario;
  cfg.validate();

  const auto steps = static_cast<std::size_t>(std::llround(cfg.t_max / cfg.dt));
  Trajectory& traj = result.trajectory;
  traj.dt = cfg.dt;
  traj.samples.reserve(steps + 1);

  VehicleState state = initial_state(cfg);
  ClosestPointOptions cp_opts;
  PathFrame prev_frame;
  std::optional<GuidancePhase> prev_phase;
  const double alpha = cfg.guidance.alpha;

  for (std::size_t k = 0; k <= steps; ++k) {
    PathFrame frame = closest_point(cfg.path, {state.x, state.y}, cp_opts);
    frame.chi_p_dot = k == 0 ? 0.0 : path_course_rate(frame, prev_frame, cfg.dt);
    cp_opts.hint = frame.s_star;
    const double vg = ground_speed(cfg.airspeed, cfg.wind, state.chi);

    TrajectorySample smp;
    smp.t = static_cast<double>(k) * cfg.dt;
    smp.x = state.x;
    smp.y = state.y;
    smp.chi = state.chi;
    smp.d = frame.d;
    smp.chi_p = frame.chi_p;
    try {
      switch (cfg.law) {
        case GuidanceLaw::kSwitched: {
          const GuidanceOutput out = commanded_course(state, frame, cfg.guidance, prev_phase, vg);
          prev_phase = out.phase;
          smp.chi_c = out.chi_c;
          smp.chi_d = out.chi_d;
          smp.phase = static_cast<int>(out.phase);
          break;
        }
        case GuidanceLaw::kBasicVf:
          smp.chi_c = basic_vf_command(state, frame, cfg.baselines.basic_vf);
          smp.chi_d = smp.chi_c;
          break;
        case GuidanceLaw::kPlos:
          smp.chi_c = plos_command(state, frame, cfg.path, cfg.baselines.plos, vg, alpha);
          smp.chi_d = smp.chi_c;
          break;
        case GuidanceLaw::kNlgl:
          smp.chi_c = nlgl_command(state, cfg.path, frame, cfg.baselines.nlgl, vg, alpha);
          smp.chi_d = smp.chi_c;
          break;
      }
    } catch (const InfeasibleError& e) {
      result.metrics.failure = e.what();
      break;
    }
    smp.chi_dot = turn_rate(smp.chi_c, state.chi, alpha);
    traj.samples.push_back(smp);

    if (k == steps) break;
    state = step(state, smp.chi_c, cfg.airspeed, cfg.wind, alpha, cfg.dt, cfg.integrator);
    prev_frame = frame;
  }

  const std::string failure = result.metrics.failure;
  if (!traj.samples.empty()) result.metrics = compute_metrics(traj, cfg);
  result.metrics.failure = failure;
  if (!failure.empty()) {
    result.metrics.converged = false;
    result.metrics.t_conv.reset();
  }
  return result;
}

TrialMetrics compute_metrics(const Trajectory& traj, const ScenarioConfig& config) {
  TrialMetrics m;
  const auto& s = traj.samples;
  if (s.empty()) throw std::invalid_argument("compute_metrics: empty trajectory");

  double sum_d2 = 0.0;
  double sum_r2 = 0.0;
  for (const auto& p : s) {
    sum_d2 += p.d * p.d;
    sum_r2 += p.chi_dot * p.chi_dot;
    m.chi_dot_max = std::max(m.chi_dot_max, std::abs(p.chi_dot));
  }
  const auto n = static_cast<double>(s.size());
  m.d_rms = std::sqrt(sum_d2 / n);
  m.chi_dot_rms = std::sqrt(sum_r2 / n);

  // Length of the run of samples satisfying the capture condition starting
  // at each index, computed back to front.
  const ConvergenceCriteria& cc = config.convergence;
  const auto dwell_steps = static_cast<std::size_t>(std::llround(cc.dwell / traj.dt));
  std::size_t run = 0;
  std::optional<std::size_t> first;
  for (std::size_t i = s.size(); i-- > 0;) {
    const bool ok = std::abs(s[i].d) <= cc.d_threshold &&
                    std::abs(angle_diff(s[i].chi, s[i].chi_p)) <= cc.align_threshold;
    run = ok ? run + 1 : 0;
    if (run >= dwell_steps + 1) first = i;
  }
  if (first) {
    m.t_conv = s[*first].t;
    m.converged = true;
  }
  m.chattering_index = chattering_index(traj, config.chatter_window);
  return m;
}

double chattering_index(const Trajectory& traj, double window) {
  if (!(window > traj.dt)) throw std::invalid_argument("chattering_index: window must exceed dt");
  const auto& s = traj.samples;
  double worst = 0.0;
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (s[k].phase == s[k - 1].phase) continue;
    const double lo = s[k].t - 0.5 * window;
    const double hi = s[k].t + 0.5 * window;
    int changes = 0;
    double last = 0.0;
    for (const auto& p : s) {
      if (p.t < lo - 1e-9 * window || p.t >= hi - 1e-9 * window) continue;
      if (p.chi_dot == 0.0) continue;
      if (last != 0.0 && (p.chi_dot > 0.0) != (last > 0.0)) ++changes;
      last = p.chi_dot;
    }
    worst = std::max(worst, changes / window);
  }
  return worst;
}

BoxStats box_stats(std::vector<double> values) {
  BoxStats b;
  b.n = values.size();
  if (values.empty()) return b;
  std::sort(values.begin(), values.end());
  b.min = values.front();
  b.max = values.back();
  b.q1 = quantile(values, 0.25);
  b.median = quantile(values, 0.5);
  b.q3 = quantile(values, 0.75);
  double sum = 0.0;
  for (double v : values) sum += v;
  b.mean = sum / static_cast<double>(values.size());
  return b;
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t index) {
  return splitmix64(master_seed ^ splitmix64(static_cast<std::uint64_t>(index) + 1));
}

MonteCarloSummary monte_carlo(const ScenarioConfig& config, std::span<const GuidanceLaw> laws,
                              std::size_t n_trials, std::uint64_t master_seed, unsigned threads) {
  if (n_trials < 1) throw std::invalid_argument("monte_carlo: need at least one trial");
  ScenarioConfig base = config;
  if (!base.sampling) base.sampling = SamplingSpec{};
  base.validate();

  const std::size_t jobs = laws.size() * n_trials;
  std::vector<TrialMetrics> results(jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j = next++; j < jobs; j = next++) {
      ScenarioConfig cfg = base;
      cfg.law = laws[j / n_trials];
      results[j] = run_trial(cfg, trial_seed(master_seed, j % n_trials)).metrics;
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, jobs));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  MonteCarloSummary summary;
  summary.master_seed = master_seed;
  summary.n_trials = n_trials;
  for (std::size_t l = 0; l < laws.size(); ++l) {
    LawSummary ls;
    ls.law = laws[l];
    ls.n_trials = n_trials;
    std::vector<double> t_conv, d_rms, rate_rms, rate_max, chatter;
    for (std::size_t i = 0; i < n_trials; ++i) {
      const TrialMetrics& m = results[l * n_trials + i];
      ls.trials.push_back(m);
      if (!m.failure.empty()) {
        ++ls.n_failed;
        continue;
      }
      if (m.converged) {
        ++ls.n_converged;
        t_conv.push_back(*m.t_conv);
      }
      d_rms.push_back(m.d_rms);
      rate_rms.push_back(m.chi_dot_rms);
      rate_max.push_back(m.chi_dot_max);
      chatter.push_back(m.chattering_index);
    }
    ls.t_conv = box_stats(std::move(t_conv));
    ls.d_rms = box_stats(std::move(d_rms));
    ls.chi_dot_rms = box_stats(std::move(rate_rms));
    ls.chi_dot_max = box_stats(std::move(rate_max));
    ls.chattering_index = box_stats(std::move(chatter));
    summary.laws.push_back(std::move(ls));
  }
  return summary;
}

}  // namespace vfguide
