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

#include "vfguide/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <vector>

namespace vfguide {
namespace {

// Shortest text that parses back to the same double.
std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_number(const std::string& key, const std::string& text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw ConfigError(key, key + ": expected a number, got '" + text + "'");
  }
  return v;
}

long parse_integer(const std::string& key, const std::string& text) {
  long v = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw ConfigError(key, key + ": expected an integer, got '" + text + "'");
  }
  return v;
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ConfigError(key, key + ": expected true or false, got '" + text + "'");
}

PathKind parse_kind(const std::string& key, const std::string& text) {
  for (PathKind k : {PathKind::kLine, PathKind::kCircle, PathKind::kSinusoid, PathKind::kPolyline}) {
    if (to_string(k) == text) return k;
  }
  throw ConfigError(key, key + ": unknown path kind '" + text +
                             "' (expected line, circle, sinusoid or polyline)");
}

// Drops a trailing "; ..." or "# ..." comment that follows whitespace.
std::string strip_inline_comment(const std::string& value) {
  for (std::size_t i = 1; i < value.size(); ++i) {
    if ((value[i] == ';' || value[i] == '#') && std::isspace(static_cast<unsigned char>(value[i - 1]))) {
      std::size_t end = i;
      while (end > 0 && std::isspace(static_cast<unsigned char>(value[end - 1]))) --end;
      return value.substr(0, end);
    }
  }
  return value;
}

struct Field {
  std::string section;
  std::string key;
  std::function<std::string(const RunConfig&)> get;
  std::function<void(RunConfig&, const std::string& key, const std::string& value)> set;
};


// Builds a Field for a double reached through `ref`.
template <class Ref>
Field num(std::string section, std::string key, Ref ref) {
  return Field{section, key,
               [ref](const RunConfig& c) { return format_double(ref(const_cast<RunConfig&>(c))); },
               [ref](RunConfig& c, const std::string& k, const std::string& v) {
                 ref(c) = parse_number(k, v);
               }};
}

template <class Ref>
Field flag(std::string section, std::string key, Ref ref) {
  return Field{section, key,
               [ref](const RunConfig& c) {
                 return std::string(ref(const_cast<RunConfig&>(c)) ? "true" : "false");
               },
               [ref](RunConfig& c, const std::string& k, const std::string& v) {
                 ref(c) = parse_bool(k, v);
               }};
}

#define VFG_REF(expr) [](RunConfig& c) -> auto& { return c.expr; }

const std::vector<Field>& fields() {
  static const std::vector<Field> table = [] {
    std::vector<Field> f;
    // [path]
    f.push_back({"path", "kind", [](const RunConfig& c) { return to_string(c.path.kind); },
                 [](RunConfig& c, const std::string& k, const std::string& v) {
                   c.path.kind = parse_kind(k, v);
                 }});
    f.push_back(num("path", "x0", VFG_REF(path.x0)));
    f.push_back(num("path", "y0", VFG_REF(path.y0)));
    f.push_back(num("path", "heading", VFG_REF(path.heading)));
    f.push_back(num("path", "center_x", VFG_REF(path.center_x)));
    f.push_back(num("path", "center_y", VFG_REF(path.center_y)));
    f.push_back(num("path", "radius", VFG_REF(path.radius)));
    f.push_back(flag("path", "clockwise", VFG_REF(path.clockwise)));
    f.push_back(num("path", "amplitude", VFG_REF(path.amplitude)));
    f.push_back(num("path", "wavelength", VFG_REF(path.wavelength)));
    f.push_back(num("path", "x_min", VFG_REF(path.x_min)));
    f.push_back(num("path", "x_max", VFG_REF(path.x_max)));
    f.push_back({"path", "file", [](const RunConfig& c) { return c.path.file; },
                 [](RunConfig& c, const std::string&, const std::string& v) { c.path.file = v; }});
    // [vehicle]
    f.push_back(num("vehicle", "airspeed", VFG_REF(scenario.airspeed.airspeed)));
    f.push_back({"vehicle", "wind_speed",
                 [](const RunConfig& c) { return format_double(c.scenario.wind.speed()); },
                 [](RunConfig& c, const std::string& k, const std::string& v) {
                   const double dir = std::atan2(c.scenario.wind.wy, c.scenario.wind.wx);
                   c.scenario.wind = WindModel::from_polar(parse_number(k, v), dir);
                 }});
    f.push_back({"vehicle", "wind_direction",
                 [](const RunConfig& c) {
                   return format_double(std::atan2(c.scenario.wind.wy, c.scenario.wind.wx));
                 },
                 [](RunConfig& c, const std::string& k, const std::string& v) {
                   c.scenario.wind = WindModel::from_polar(c.scenario.wind.speed(), parse_number(k, v));
                 }});
    f.push_back({"vehicle", "integrator",
                 [](const RunConfig& c) { return to_string(c.scenario.integrator); },
                 [](RunConfig& c, const std::string& k, const std::string& v) {
                   try {
                     c.scenario.integrator = integrator_from_string(v);
                   } catch (const std::invalid_argument& e) {
                     throw ConfigError(k, k + ": " + e.what());
                   }
                 }});
    // [guidance]
    f.push_back(num("guidance", "chi_inf", VFG_REF(scenario.guidance.chi_inf)));
    f.push_back(num("guidance", "k1", VFG_REF(scenario.guidance.k1)));
    f.push_back(num("guidance", "k3", VFG_REF(scenario.guidance.k3)));
    f.push_back(num("guidance", "alpha", VFG_REF(scenario.guidance.alpha)));
    f.push_back(num("guidance", "eta", VFG_REF(scenario.guidance.eta)));
    for (const char* key : {"n", "m"}) {
      const bool is_n = key[0] == 'n';
      f.push_back({"guidance", key,
                   [is_n](const RunConfig& c) {
                     return std::to_string(is_n ? c.scenario.guidance.n : c.scenario.guidance.m);
                   },
                   [is_n](RunConfig& c, const std::string& k, const std::string& v) {
                     (is_n ? c.scenario.guidance.n : c.scenario.guidance.m) =
                         static_cast<int>(parse_integer(k, v));
                   }});
    }
    f.push_back(num("guidance", "kappa_max", VFG_REF(kappa_max)));
    f.push_back(num("guidance", "sigma", VFG_REF(scenario.guidance.sigma)));
    f.push_back(num("guidance", "epsilon", VFG_REF(scenario.guidance.epsilon)));
    f.push_back(num("guidance", "delta_hys", VFG_REF(scenario.guidance.delta_hys)));
    f.push_back({"guidance", "reaching",
                 [](const RunConfig& c) {
                   return std::string(c.scenario.guidance.reaching == ReachingLaw::kSign ? "sign"
                                                                                         : "sat");
                 },
                 [](RunConfig& c, const std::string& k, const std::string& v) {
                   if (v == "sat") {
                     c.scenario.guidance.reaching = ReachingLaw::kSaturated;
                   } else if (v == "sign") {
                     c.scenario.guidance.reaching = ReachingLaw::kSign;
                   } else {
                     throw ConfigError(k, k + ": expected sat or sign, got '" + v + "'");
                   }
                 }});
    // [baselines]
    f.push_back(num("baselines", "vf_k", VFG_REF(scenario.baselines.basic_vf.k)));
    f.push_back(num("baselines", "vf_chi_inf", VFG_REF(scenario.baselines.basic_vf.chi_inf)));
    f.push_back(num("baselines", "plos_k1", VFG_REF(scenario.baselines.plos.k1)));
    f.push_back(num("baselines", "plos_k2", VFG_REF(scenario.baselines.plos.k2)));
    f.push_back(num("baselines", "plos_lookahead", VFG_REF(scenario.baselines.plos.lookahead)));
    f.push_back(num("baselines", "nlgl_l1", VFG_REF(scenario.baselines.nlgl.l1)));
    // [sim]
    f.push_back(num("sim", "dt", VFG_REF(scenario.dt)));
    f.push_back(num("sim", "t_max", VFG_REF(scenario.t_max)));
    f.push_back(num("sim", "s0", VFG_REF(scenario.initial.s0)));
    f.push_back(num("sim", "d0", VFG_REF(scenario.initial.d0)));
    f.push_back(num("sim", "d0_nlgl", VFG_REF(d0_nlgl)));
    f.push_back(num("sim", "chi0", VFG_REF(scenario.initial.chi0)));
    f.push_back(num("sim", "d_threshold", VFG_REF(scenario.convergence.d_threshold)));
    f.push_back(num("sim", "align_threshold", VFG_REF(scenario.convergence.align_threshold)));
    f.push_back(num("sim", "dwell", VFG_REF(scenario.convergence.dwell)));
    f.push_back(num("sim", "chatter_window", VFG_REF(scenario.chatter_window)));
    f.push_back({"sim", "trials", [](const RunConfig& c) { return std::to_string(c.trials); },
                 [](RunConfig& c, const std::string& k, const std::string& v) {
                   const long n = parse_integer(k, v);
                   if (n < 1) throw ConfigError(k, k + ": must be at least 1");
                   c.trials = static_cast<std::size_t>(n);
                 }});
    f.push_back(flag("sim", "randomize", VFG_REF(randomize)));
    f.push_back(num("sim", "mc_d0_min", VFG_REF(sampling.d0_min)));
    f.push_back(num("sim", "mc_d0_max", VFG_REF(sampling.d0_max)));
    f.push_back(num("sim", "mc_chi0_min", VFG_REF(sampling.chi0_min)));
    f.push_back(num("sim", "mc_chi0_max", VFG_REF(sampling.chi0_max)));
    f.push_back(num("sim", "mc_wind_speed_min", VFG_REF(sampling.wind_speed_min)));
    f.push_back(num("sim", "mc_wind_speed_max", VFG_REF(sampling.wind_speed_max)));
    f.push_back(num("sim", "mc_wind_dir_min", VFG_REF(sampling.wind_dir_min)));
    f.push_back(num("sim", "mc_wind_dir_max", VFG_REF(sampling.wind_dir_max)));
    return f;
  }();
  return table;
}

#undef VFG_REF

// Validation messages start with "section.key"; recover the key from them.
[[noreturn]] void rethrow_as_config_error(const std::exception& e) {
  const std::string what = e.what();
  const std::string key = what.substr(0, what.find_first_of(" :,"));
  throw ConfigError(key.find('.') != std::string::npos ? key : "", what);
}

}  // namespace

ReferencePath PathSpec::build() const {
  const auto require = [](bool ok, const char* key, const char* what) {
    if (!ok) throw ConfigError(key, std::string(key) + ": " + what);
  };
  switch (kind) {
    case PathKind::kLine:
      require(std::isfinite(x0), "path.x0", "must be finite");
      require(std::isfinite(y0), "path.y0", "must be finite");
      require(std::isfinite(heading), "path.heading", "must be finite");
      return ReferencePath::line({x0, y0}, heading);
    case PathKind::kCircle:
      require(std::isfinite(center_x) && std::isfinite(center_y), "path.center_x", "must be finite");
      require(radius > 0.0 && std::isfinite(radius), "path.radius", "must be positive");
      return ReferencePath::circle({center_x, center_y}, radius, clockwise);
    case PathKind::kSinusoid:
      require(std::isfinite(amplitude), "path.amplitude", "must be finite");
      require(wavelength > 0.0 && std::isfinite(wavelength), "path.wavelength", "must be positive");
      require(x_max > x_min, "path.x_max", "must exceed path.x_min");
      return ReferencePath::sinusoid(amplitude, wavelength, x_min, x_max);
    case PathKind::kPolyline:
      if (file.empty()) throw ConfigError("path.file", "path.file: required for polyline paths");
      return ReferencePath::polyline_from_csv(file);
  }
  throw ConfigError("path.kind", "path.kind: unsupported");
}

RunConfig default_run_config() {
  RunConfig c;
  c.scenario.path = c.path.build();
  // Abeam the descending zero crossing, where the reference start pose begins
  // in the course-reversal phase.
  c.scenario.initial.s0 = c.path.wavelength / 2.0;
  return c;
}

RunConfig parse_config(std::istream& in, const std::string& source) {
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError("", source + ": " + e.message() + " (line " + std::to_string(e.line()) + ")");
  }

  std::map<std::string, const Field*> by_name;
  for (const Field& f : fields()) by_name[f.section + "." + f.key] = &f;

  RunConfig cfg = default_run_config();
  bool s0_given = false;
  for (const auto& [section, body] : tree) {
    if (body.empty() && !body.data().empty()) {
      throw ConfigError(section, source + ": key '" + section + "' outside of any section");
    }
    if (section != "path" && section != "vehicle" && section != "guidance" &&
        section != "baselines" && section != "sim") {
      throw ConfigError(section, source + ": unknown section [" + section + "]");
    }
    for (const auto& [key, value] : body) {
      const std::string name = section + "." + key;
      const auto it = by_name.find(name);
      if (it == by_name.end()) throw ConfigError(name, source + ": unknown key " + name);
      it->second->set(cfg, name, strip_inline_comment(value.data()));
      s0_given = s0_given || name == "sim.s0";
    }
  }
  if (!s0_given) {
    cfg.scenario.initial.s0 = cfg.path.kind == PathKind::kSinusoid ? cfg.path.wavelength / 2.0 : 0.0;
  }
  try {
    cfg.scenario.path = cfg.path.build();
    ScenarioConfig probe = cfg.scenario;
    probe.sampling = cfg.sampling;
    probe.validate();
    if (!(cfg.kappa_max >= 0.0)) {
      throw ConfigError("guidance.kappa_max", "guidance.kappa_max: must be non-negative");
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    rethrow_as_config_error(e);
  } catch (const GeometryError& e) {
    throw ConfigError("path.file", std::string("path.file: ") + e.what());
  }
  return cfg;
}

RunConfig load_config(const std::string& file_path) {
  std::ifstream in(file_path);
  if (!in) throw ConfigError("", "cannot open config file: " + file_path);
  return parse_config(in, file_path);
}

std::string dump_config(const RunConfig& config) {
  std::ostringstream os;
  std::string section;
  for (const Field& f : fields()) {
    if (f.section != section) {
      if (!section.empty()) os << "\n";
      section = f.section;
      os << "[" << section << "]\n";
    }
    os << f.key << " = " << f.get(config) << "\n";
  }
  return os.str();
}

}  // namespace vfguide
