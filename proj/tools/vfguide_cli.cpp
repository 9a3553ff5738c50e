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

// vfguide command-line front end: single runs, law comparisons, Monte Carlo
// campaigns and curvature feasibility checks.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "vfguide/config.hpp"
#include "vfguide/report.hpp"
#include "vfguide/sim_engine.hpp"

namespace fs = std::filesystem;
using namespace vfguide;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string config;
  std::vector<std::string> laws;
  std::uint64_t seed = 42;
  std::optional<std::size_t> trials;
  std::string out = "out";
  std::optional<double> dt;
  bool dump = false;
  unsigned threads = 0;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config, "INI scenario file (defaults reproduce the reference scenario)");
  cmd->add_option("--law", o.laws, "guidance law(s): switched, basic_vf, plos, nlgl")->delimiter(',');
  cmd->add_option("--seed", o.seed, "seed (master seed for Monte Carlo)");
  cmd->add_option("--out", o.out, "output directory");
  cmd->add_option("--dt", o.dt, "integration step override, s");
  cmd->add_flag("--dump-effective-config", o.dump, "print the effective configuration and exit");
}

RunConfig effective_config(const Options& o) {
  RunConfig cfg = o.config.empty() ? default_run_config() : load_config(o.config);
  if (o.dt) {
    cfg.scenario.dt = *o.dt;
    try {
      cfg.scenario.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError("sim.dt", std::string("--dt: ") + e.what());
    }
  }
  if (o.trials) {
    if (*o.trials < 1) throw ConfigError("sim.trials", "--trials: must be at least 1");
    cfg.trials = *o.trials;
  }
  return cfg;
}

std::vector<GuidanceLaw> selected_laws(const Options& o, std::vector<GuidanceLaw> fallback) {
  if (o.laws.empty()) return fallback;
  std::vector<GuidanceLaw> laws;
  for (const std::string& name : o.laws) {
    try {
      laws.push_back(law_from_string(name));
    } catch (const std::invalid_argument& e) {
      throw ConfigError("--law", e.what());
    }
  }
  return laws;
}

fs::path prepare_out(const Options& o) {
  std::error_code ec;
  fs::create_directories(o.out, ec);
  if (ec) throw ConfigError("--out", "cannot create output directory " + o.out + ": " + ec.message());
  return fs::path(o.out);
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f) throw ConfigError("--out", "cannot write " + path.string());
}

template <class Fn>
std::string render(Fn&& fn) {
  std::ostringstream os;
  fn(os);
  return os.str();
}

// Runs one law and reports it. Returns false on a domain failure.
bool run_one(const RunConfig& cfg, GuidanceLaw law, double d0, std::uint64_t seed,
             const fs::path& trajectory_file, std::vector<NamedMetrics>& table) {
  ScenarioConfig sc = cfg.scenario;
  sc.law = law;
  sc.initial.d0 = d0;
  if (cfg.randomize) sc.sampling = cfg.sampling;
  const TrialResult result = run_trial(sc, seed);
  write_file(trajectory_file, render([&](std::ostream& os) { write_trajectory_csv(os, result.trajectory); }));
  table.push_back({to_string(law), result.metrics});

  const TrialMetrics& m = result.metrics;
  std::cout << to_string(law) << ": ";
  if (!m.failure.empty()) {
    std::cout << "failed (" << m.failure << ")\n";
    std::cerr << "error: " << to_string(law) << ": " << m.failure << "\n";
    return false;
  }
  if (!m.converged) {
    std::cout << "did not converge within " << sc.t_max << " s\n";
    return false;
  }
  std::cout << "t_conv=" << *m.t_conv << " s, d_rms=" << m.d_rms << " m, max|chi_dot|=" << m.chi_dot_max
            << " rad/s, chattering=" << m.chattering_index << " /s\n";
  return true;
}

int cmd_run(const Options& o) {
  const RunConfig cfg = effective_config(o);
  if (o.dump) {
    std::cout << dump_config(cfg);
    return kExitOk;
  }
  const auto laws = selected_laws(o, {cfg.scenario.law});
  if (laws.size() != 1) throw ConfigError("--law", "run takes exactly one law; use compare for several");
  const fs::path out = prepare_out(o);
  std::vector<NamedMetrics> table;
  const bool ok = run_one(cfg, laws.front(), cfg.scenario.initial.d0, o.seed, out / "trajectory.csv", table);
  write_file(out / "metrics.csv", render([&](std::ostream& os) { write_metrics_csv(os, table); }));
  return ok ? kExitOk : kExitDomain;
}

int cmd_compare(const Options& o) {
  const RunConfig cfg = effective_config(o);
  if (o.dump) {
    std::cout << dump_config(cfg);
    return kExitOk;
  }
  const auto laws = selected_laws(o, all_laws());
  if (laws.size() == 1) return cmd_run(o);
  const fs::path out = prepare_out(o);
  std::vector<NamedMetrics> table;
  bool ok = true;
  for (GuidanceLaw law : laws) {
    // The look-ahead law needs the vehicle inside its L1 circle.
    const double d0 = law == GuidanceLaw::kNlgl ? cfg.d0_nlgl : cfg.scenario.initial.d0;
    ok = run_one(cfg, law, d0, o.seed, out / ("trajectory_" + to_string(law) + ".csv"), table) && ok;
  }
  write_file(out / "metrics.csv", render([&](std::ostream& os) { write_metrics_csv(os, table); }));
  return ok ? kExitOk : kExitDomain;
}

int cmd_montecarlo(const Options& o) {
  const RunConfig cfg = effective_config(o);
  if (o.dump) {
    std::cout << dump_config(cfg);
    return kExitOk;
  }
  const auto laws = selected_laws(o, all_laws());
  const fs::path out = prepare_out(o);
  ScenarioConfig sc = cfg.scenario;
  sc.sampling = cfg.sampling;
  const MonteCarloSummary summary = monte_carlo(sc, laws, cfg.trials, o.seed, o.threads);
  write_file(out / "summary.csv", render([&](std::ostream& os) { write_summary_csv(os, summary); }));
  write_file(out / "trials.csv", render([&](std::ostream& os) { write_trials_csv(os, summary); }));
  for (const LawSummary& s : summary.laws) {
    std::cout << to_string(s.law) << ": " << s.n_converged << "/" << s.n_trials << " converged, "
              << s.n_failed << " failed";
    if (s.t_conv.n > 0) std::cout << ", median t_conv=" << s.t_conv.median << " s";
    if (s.chi_dot_max.n > 0) std::cout << ", median max|chi_dot|=" << s.chi_dot_max.median << " rad/s";
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_validate(const Options& o) {
  const RunConfig cfg = effective_config(o);
  if (o.dump) {
    std::cout << dump_config(cfg);
    return kExitOk;
  }
  const fs::path out = prepare_out(o);
  // Worst-case ground speed; the left side is speed-independent anyway since
  // the path term scales with it.
  const double v = cfg.scenario.airspeed.airspeed + cfg.scenario.wind.speed();
  const FeasibilityInputs in{v, max_path_course_rate(cfg.scenario.path, v)};
  const CurvatureReport report =
      validate_curvature_constraint(cfg.scenario.guidance, in.ground_speed, in.chi_p_dot_max, cfg.kappa_max);
  const std::string text = render([&](std::ostream& os) { write_feasibility_text(os, report, in); });
  std::cout << text;
  write_file(out / "feasibility.txt", text);
  write_file(out / "feasibility.csv", render([&](std::ostream& os) { write_feasibility_csv(os, report, in); }));
  return report.feasible ? kExitOk : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Switched vector-field path following: simulation and analysis"};
  app.require_subcommand(1);
  Options o;

  auto* run = app.add_subcommand("run", "simulate one guidance law");
  add_common(run, o);
  auto* compare = app.add_subcommand("compare", "simulate several laws on one scenario");
  add_common(compare, o);
  auto* mc = app.add_subcommand("montecarlo", "randomized campaign with box-plot statistics");
  add_common(mc, o);
  mc->add_option("--trials", o.trials, "trials per law (default 200)");
  mc->add_option("--threads", o.threads, "worker threads, 0 = all cores");
  auto* validate = app.add_subcommand("validate", "check the curvature feasibility constraint");
  add_common(validate, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*run) return cmd_run(o);
    if (*compare) return cmd_compare(o);
    if (*mc) return cmd_montecarlo(o);
    return cmd_validate(o);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InfeasibleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}
