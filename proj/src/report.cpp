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

#include "vfguide/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <utility>

namespace vfguide {
namespace {

std::string fmt(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

// Failure reasons are free text; keep them to a single CSV field.
std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

void metrics_columns(std::ostream& os, const TrialMetrics& m) {
  os << (m.converged ? "true" : "false") << ',' << (m.t_conv ? fmt(*m.t_conv) : "") << ','
     << fmt(m.d_rms) << ',' << fmt(m.chi_dot_rms) << ',' << fmt(m.chi_dot_max) << ','
     << fmt(m.chattering_index) << ',' << csv_field(m.failure);
}

constexpr const char* kMetricColumns =
    "converged,t_conv,d_rms,chi_dot_rms,chi_dot_max,chattering_index,failure";

}  // namespace

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
  os << "t,x,y,chi,chi_c,chi_d,chi_dot,d,phase\n";
  for (const TrajectorySample& s : traj.samples) {
    os << fmt(s.t) << ',' << fmt(s.x) << ',' << fmt(s.y) << ',' << fmt(s.chi) << ','
       << fmt(s.chi_c) << ',' << fmt(s.chi_d) << ',' << fmt(s.chi_dot) << ',' << fmt(s.d) << ','
       << s.phase << '\n';
  }
}

void write_metrics_csv(std::ostream& os, const std::vector<NamedMetrics>& rows) {
  os << "law," << kMetricColumns << '\n';
  for (const NamedMetrics& r : rows) {
    os << r.law << ',';
    metrics_columns(os, r.metrics);
    os << '\n';
  }
}

void write_summary_csv(std::ostream& os, const MonteCarloSummary& summary) {
  os << "law,metric,n_used,n_excluded,min,q1,median,q3,max,mean\n";
  for (const LawSummary& law : summary.laws) {
    const std::pair<const char*, const BoxStats*> metrics[] = {
        {"t_conv", &law.t_conv},
        {"d_rms", &law.d_rms},
        {"chi_dot_rms", &law.chi_dot_rms},
        {"chi_dot_max", &law.chi_dot_max},
        {"chattering_index", &law.chattering_index},
    };
    for (const auto& [name, stats] : metrics) {
      os << to_string(law.law) << ',' << name << ',' << stats->n << ',' << law.n_trials - stats->n;
      if (stats->n == 0) {
        os << ",,,,,,\n";
        continue;
      }
      os << ',' << fmt(stats->min) << ',' << fmt(stats->q1) << ',' << fmt(stats->median) << ','
         << fmt(stats->q3) << ',' << fmt(stats->max) << ',' << fmt(stats->mean) << '\n';
    }
  }
}

void write_trials_csv(std::ostream& os, const MonteCarloSummary& summary) {
  os << "law,trial," << kMetricColumns << '\n';
  for (const LawSummary& law : summary.laws) {
    for (std::size_t i = 0; i < law.trials.size(); ++i) {
      os << to_string(law.law) << ',' << i << ',';
      metrics_columns(os, law.trials[i]);
      os << '\n';
    }
  }
}

void write_feasibility_text(std::ostream& os, const CurvatureReport& r,
                            const FeasibilityInputs& in) {
  const double v = in.ground_speed;
  os << "curvature feasibility\n"
     << "  ground speed                 " << fmt(v) << " m/s\n"
     << "  max path course rate         " << fmt(in.chi_p_dot_max) << " rad/s\n"
     << "  linear-branch peak curvature " << fmt(r.linear_peak_rate / v) << " 1/m (rate "
     << fmt(r.linear_peak_rate) << " rad/s at |d| = " << fmt(r.linear_peak_distance) << " m"
     << (r.linear_peak_in_branch ? "" : ", outside its branch") << ")\n"
     << "  cubic-branch peak curvature  " << fmt(r.cubic_peak_rate / v) << " 1/m (rate "
     << fmt(r.cubic_peak_rate) << " rad/s at |d| = " << fmt(r.cubic_peak_distance) << " m"
     << (r.cubic_peak_in_branch ? "" : ", outside its branch") << ")\n"
     << "  lhs                          " << fmt(r.lhs) << " 1/m\n"
     << "  kappa_max                    "
     << (std::isinf(r.kappa_max) ? std::string("unbounded") : fmt(r.kappa_max) + " 1/m") << "\n"
     << "  margin                       " << fmt(r.margin) << " 1/m\n"
     << "  result                       " << (r.feasible ? "PASS" : "FAIL") << "\n";
}

void write_feasibility_csv(std::ostream& os, const CurvatureReport& r,
                           const FeasibilityInputs& in) {
  const double v = in.ground_speed;
  os << "quantity,value\n"
     << "ground_speed," << fmt(v) << '\n'
     << "chi_p_dot_max," << fmt(in.chi_p_dot_max) << '\n'
     << "linear_peak_rate," << fmt(r.linear_peak_rate) << '\n'
     << "linear_peak_curvature," << fmt(r.linear_peak_rate / v) << '\n'
     << "linear_peak_distance," << fmt(r.linear_peak_distance) << '\n'
     << "linear_peak_in_branch," << (r.linear_peak_in_branch ? "true" : "false") << '\n'
     << "cubic_peak_rate," << fmt(r.cubic_peak_rate) << '\n'
     << "cubic_peak_curvature," << fmt(r.cubic_peak_rate / v) << '\n'
     << "cubic_peak_distance," << fmt(r.cubic_peak_distance) << '\n'
     << "cubic_peak_in_branch," << (r.cubic_peak_in_branch ? "true" : "false") << '\n'
     << "lhs," << fmt(r.lhs) << '\n'
     << "kappa_max," << fmt(r.kappa_max) << '\n'
     << "margin," << fmt(r.margin) << '\n'
     << "feasible," << (r.feasible ? "true" : "false") << '\n';
}

}  // namespace vfguide
