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

#include <iosfwd>
#include <string>
#include <vector>

#include "vfguide/sim_engine.hpp"
#include "vfguide/switched_guidance.hpp"

namespace vfguide {

// CSV writers. Floating-point fields use 9 significant digits; column order is
// fixed so files can be diffed across runs.

/// Header: t,x,y,chi,chi_c,chi_d,chi_dot,d,phase
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

struct NamedMetrics {
  std::string law;
  TrialMetrics metrics;
};

/// One row per law: law,converged,t_conv,d_rms,chi_dot_rms,chi_dot_max,chattering_index,failure
void write_metrics_csv(std::ostream& os, const std::vector<NamedMetrics>& rows);

/// One row per (law, metric): law,metric,n_used,n_excluded,min,q1,median,q3,max,mean
void write_summary_csv(std::ostream& os, const MonteCarloSummary& summary);

/// One row per (law, trial) with the same columns as the metrics table.
void write_trials_csv(std::ostream& os, const MonteCarloSummary& summary);

struct FeasibilityInputs {
  double ground_speed = 0.0;
  double chi_p_dot_max = 0.0;
};

void write_feasibility_text(std::ostream& os, const CurvatureReport& report,
                            const FeasibilityInputs& inputs);
/// Two columns: quantity,value
void write_feasibility_csv(std::ostream& os, const CurvatureReport& report,
                           const FeasibilityInputs& inputs);

}  // namespace vfguide
