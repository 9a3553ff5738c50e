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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "vfguide/config.hpp"
#include "vfguide/report.hpp"
#include "vfguide/sim_engine.hpp"

namespace py = pybind11;
using namespace vfguide;

namespace {

py::dict trajectory_columns(const Trajectory& traj) {
  std::vector<double> t, x, y, chi, chi_c, chi_d, chi_dot, d;
  std::vector<int> phase;
  for (const auto& s : traj.samples) {
    t.push_back(s.t);
    x.push_back(s.x);
    y.push_back(s.y);
    chi.push_back(s.chi);
    chi_c.push_back(s.chi_c);
    chi_d.push_back(s.chi_d);
    chi_dot.push_back(s.chi_dot);
    d.push_back(s.d);
    phase.push_back(s.phase);
  }
  py::dict out;
  out["t"] = t;
  out["x"] = x;
  out["y"] = y;
  out["chi"] = chi;
  out["chi_c"] = chi_c;
  out["chi_d"] = chi_d;
  out["chi_dot"] = chi_dot;
  out["d"] = d;
  out["phase"] = phase;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Switched vector-field path following: geometry, guidance, simulation";

  py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_RuntimeError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::class_<Vec2>(m, "Vec2")
      .def(py::init<double, double>(), py::arg("x") = 0.0, py::arg("y") = 0.0)
      .def_readwrite("x", &Vec2::x)
      .def_readwrite("y", &Vec2::y)
      .def("__repr__", [](const Vec2& v) {
        return "Vec2(" + std::to_string(v.x) + ", " + std::to_string(v.y) + ")";
      });

  py::class_<ReferencePath>(m, "ReferencePath")
      .def_static("line", &ReferencePath::line, py::arg("origin"), py::arg("heading"))
      .def_static("circle", &ReferencePath::circle, py::arg("center"), py::arg("radius"),
                  py::arg("clockwise") = false)
      .def_static("sinusoid", &ReferencePath::sinusoid, py::arg("amplitude"), py::arg("wavelength"),
                  py::arg("x_min"), py::arg("x_max"))
      .def_static("polyline", &ReferencePath::polyline, py::arg("points"))
      .def_static("polyline_from_csv", &ReferencePath::polyline_from_csv, py::arg("file_path"))
      .def("domain", &ReferencePath::domain)
      .def("evaluate", &ReferencePath::evaluate, py::arg("s"))
      .def("curvature", &ReferencePath::curvature, py::arg("s"));

  py::class_<PathFrame>(m, "PathFrame")
      .def_readonly("s_star", &PathFrame::s_star)
      .def_readonly("p_ref", &PathFrame::p_ref)
      .def_readonly("chi_p", &PathFrame::chi_p)
      .def_readonly("d", &PathFrame::d)
      .def_readonly("rho", &PathFrame::rho);

  m.def("closest_point", [](const ReferencePath& path, Vec2 p) { return closest_point(path, p); },
        py::arg("path"), py::arg("p"));
  m.def("tangent_angle", &tangent_angle, py::arg("path"), py::arg("s"));
  m.def("max_path_course_rate", &max_path_course_rate, py::arg("path"), py::arg("ground_speed"));
  m.def("default_sinusoid", &default_sinusoid);
  m.def("default_sinusoid_wavelength", &default_sinusoid_wavelength);

  m.def("ground_speed",
        [](double airspeed, double wx, double wy, double chi) {
          return ground_speed({airspeed}, {wx, wy}, chi);
        },
        py::arg("airspeed"), py::arg("wx"), py::arg("wy"), py::arg("chi"));

  py::enum_<ReachingLaw>(m, "ReachingLaw")
      .value("SATURATED", ReachingLaw::kSaturated)
      .value("SIGN", ReachingLaw::kSign);

  py::class_<GuidanceParams>(m, "GuidanceParams")
      .def(py::init<>())
      .def_readwrite("chi_inf", &GuidanceParams::chi_inf)
      .def_readwrite("k1", &GuidanceParams::k1)
      .def_readwrite("k3", &GuidanceParams::k3)
      .def_readwrite("alpha", &GuidanceParams::alpha)
      .def_readwrite("eta", &GuidanceParams::eta)
      .def_readwrite("n", &GuidanceParams::n)
      .def_readwrite("m", &GuidanceParams::m)
      .def_readwrite("sigma", &GuidanceParams::sigma)
      .def_readwrite("epsilon", &GuidanceParams::epsilon)
      .def_readwrite("delta_hys", &GuidanceParams::delta_hys)
      .def_readwrite("reaching", &GuidanceParams::reaching)
      .def("switching_distance", &GuidanceParams::switching_distance)
      .def("validate", &GuidanceParams::validate);

  m.def("desired_course_distance_only", &desired_course_distance_only, py::arg("d"),
        py::arg("chi_p"), py::arg("params"));
  m.def("case1_convergence_time", &case1_convergence_time, py::arg("chi_tilde0"), py::arg("params"));
  m.def("sat", &sat, py::arg("x"));

  py::class_<CurvatureReport>(m, "CurvatureReport")
      .def_readonly("linear_peak_rate", &CurvatureReport::linear_peak_rate)
      .def_readonly("linear_peak_distance", &CurvatureReport::linear_peak_distance)
      .def_readonly("cubic_peak_rate", &CurvatureReport::cubic_peak_rate)
      .def_readonly("cubic_peak_distance", &CurvatureReport::cubic_peak_distance)
      .def_readonly("lhs", &CurvatureReport::lhs)
      .def_readonly("kappa_max", &CurvatureReport::kappa_max)
      .def_readonly("margin", &CurvatureReport::margin)
      .def_readonly("feasible", &CurvatureReport::feasible);
  m.def("validate_curvature_constraint", &validate_curvature_constraint, py::arg("params"),
        py::arg("ground_speed"), py::arg("chi_p_dot_max"), py::arg("kappa_max"));

  py::class_<TrialMetrics>(m, "TrialMetrics")
      .def_readonly("t_conv", &TrialMetrics::t_conv)
      .def_readonly("d_rms", &TrialMetrics::d_rms)
      .def_readonly("chi_dot_rms", &TrialMetrics::chi_dot_rms)
      .def_readonly("chi_dot_max", &TrialMetrics::chi_dot_max)
      .def_readonly("chattering_index", &TrialMetrics::chattering_index)
      .def_readonly("converged", &TrialMetrics::converged)
      .def_readonly("failure", &TrialMetrics::failure);

  // Scenarios are described with the same INI text the command-line tool reads.
  py::class_<RunConfig>(m, "RunConfig")
      .def_static("default", &default_run_config)
      .def_static("parse",
                  [](const std::string& text) {
                    std::istringstream in(text);
                    return parse_config(in, "<string>");
                  },
                  py::arg("text"))
      .def_static("load", &load_config, py::arg("file_path"))
      .def("dump", [](const RunConfig& c) { return dump_config(c); })
      .def_readwrite("trials", &RunConfig::trials)
      .def_readwrite("d0_nlgl", &RunConfig::d0_nlgl);

  m.def("run_trial",
        [](const RunConfig& cfg, const std::string& law, std::uint64_t seed) {
          ScenarioConfig sc = cfg.scenario;
          sc.law = law_from_string(law);
          if (cfg.randomize) sc.sampling = cfg.sampling;
          TrialResult r;
          {
            py::gil_scoped_release release;
            r = run_trial(sc, seed);
          }
          return py::make_tuple(trajectory_columns(r.trajectory), r.metrics);
        },
        py::arg("config"), py::arg("law") = "switched", py::arg("seed") = 0,
        "Returns (columns, metrics); columns maps each trajectory channel to a list.");

  m.def("monte_carlo_summary_csv",
        [](const RunConfig& cfg, const std::vector<std::string>& law_names, std::size_t n_trials,
           std::uint64_t seed, unsigned threads) {
          std::vector<GuidanceLaw> laws;
          for (const auto& name : law_names) laws.push_back(law_from_string(name));
          ScenarioConfig sc = cfg.scenario;
          sc.sampling = cfg.sampling;
          MonteCarloSummary mc;
          {
            py::gil_scoped_release release;
            mc = monte_carlo(sc, laws, n_trials, seed, threads);
          }
          std::ostringstream os;
          write_summary_csv(os, mc);
          return os.str();
        },
        py::arg("config"), py::arg("laws"), py::arg("n_trials"), py::arg("seed") = 42,
        py::arg("threads") = 0);

  m.attr("__all__") = py::make_tuple(
      "Vec2", "ReferencePath", "PathFrame", "closest_point", "tangent_angle",
      "max_path_course_rate", "default_sinusoid", "default_sinusoid_wavelength", "ground_speed",
      "ReachingLaw", "GuidanceParams", "desired_course_distance_only", "case1_convergence_time",
      "sat", "CurvatureReport", "validate_curvature_constraint", "TrialMetrics", "RunConfig",
      "run_trial", "monte_carlo_summary_csv", "InfeasibleError", "ConfigError");
}
