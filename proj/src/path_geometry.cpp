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

#include "vfguide/path_geometry.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace vfguide {
namespace {

constexpr double kInvPhi = 0.6180339887498949;  // 1 / golden ratio

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double sinusoid_rate(const SinusoidShape& sh) { return kTwoPi / sh.wavelength; }

// Golden-section minimisation of f over [a, b].
template <class F>
double golden_section(F&& f, double a, double b, double tol) {
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

bool parse_double(const std::string& text, double& out) {
  std::istringstream is(text);
  is >> out;
  if (is.fail()) return false;
  is >> std::ws;
  return is.eof();
}

PathFrame frame_at(const ReferencePath& path, double s, Vec2 p) {
  PathFrame f;
  f.s_star = s;
  f.p_ref = path.evaluate(s);
  const Vec2 t = path.tangent(s);
  const Vec2 disp = p - f.p_ref;
  f.chi_p = wrap_angle(std::atan2(t.y, t.x));
  f.rho = t.cross(disp) >= 0.0 ? 1 : -1;
  f.d = f.rho * disp.norm();
  return f;
}

double sinusoid_closest(const SinusoidShape& sh, Vec2 p, const ClosestPointOptions& opt) {
  const double k = sinusoid_rate(sh);
  auto dist2 = [&](double s) {
    const double dx = s - p.x;
    const double dy = sh.amplitude * std::sin(k * s) - p.y;
    return dx * dx + dy * dy;
  };
  // Any path point bounds the minimum distance D, and |x - p.x| <= D for
  // every candidate, so [p.x - D, p.x + D] contains the minimiser.
  double bound2 = dist2(std::clamp(p.x, sh.x_min, sh.x_max));
  if (opt.hint) {
    const double h = std::clamp(*opt.hint, sh.x_min, sh.x_max);
    bound2 = std::min(bound2, dist2(h));
  }
  const double bound = std::sqrt(bound2);
  const double lo = std::max(sh.x_min, p.x - bound);
  const double hi = std::min(sh.x_max, p.x + bound);
  if (!(hi > lo)) return lo;

  const double spacing = opt.max_spacing > 0.0 ? opt.max_spacing : sh.wavelength / 256.0;
  const int n = std::clamp(static_cast<int>(std::ceil((hi - lo) / spacing)), 8,
                           std::max(8, opt.max_samples));
  const double h = (hi - lo) / n;
  int best = 0;
  double best_val = std::numeric_limits<double>::infinity();
  for (int i = 0; i <= n; ++i) {
    const double v = dist2(lo + i * h);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  const double a = lo + std::max(0, best - 1) * h;
  const double b = lo + std::min(n, best + 1) * h;
  const double refined = golden_section(dist2, a, b, opt.tolerance);
  const double best_s = lo + best * h;
  return dist2(refined) < best_val ? refined : best_s;
}

}  // namespace

std::string to_string(PathKind kind) {
  switch (kind) {
    case PathKind::kLine:
      return "line";
    case PathKind::kCircle:
      return "circle";
    case PathKind::kSinusoid:
      return "sinusoid";
    case PathKind::kPolyline:
      return "polyline";
  }
  return "unknown";
}

ReferencePath ReferencePath::line(Vec2 origin, double heading) {
  if (!std::isfinite(origin.x) || !std::isfinite(origin.y) || !std::isfinite(heading)) {
    throw std::invalid_argument("line: non-finite origin or heading");
  }
  return ReferencePath(LineShape{origin, wrap_angle(heading)});
}

ReferencePath ReferencePath::circle(Vec2 center, double radius, bool clockwise) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("circle: radius must be positive");
  }
  return ReferencePath(CircleShape{center, radius, clockwise});
}

ReferencePath ReferencePath::sinusoid(double amplitude, double wavelength, double x_min,
                                      double x_max) {
  if (!std::isfinite(amplitude)) throw std::invalid_argument("sinusoid: bad amplitude");
  if (!(wavelength > 0.0)) throw std::invalid_argument("sinusoid: wavelength must be positive");
  if (!(x_max > x_min)) throw std::invalid_argument("sinusoid: empty domain");
  return ReferencePath(SinusoidShape{amplitude, wavelength, x_min, x_max});
}

ReferencePath ReferencePath::polyline(std::vector<Vec2> points) {
  if (points.size() < 2) throw GeometryError("polyline: need at least two points");
  PolylineShape sh;
  sh.cumulative.reserve(points.size());
  sh.cumulative.push_back(0.0);
  for (std::size_t i = 1; i < points.size(); ++i) {
    const double len = (points[i] - points[i - 1]).norm();
    if (!(len > 0.0)) {
      throw GeometryError("polyline: repeated consecutive point at index " + std::to_string(i));
    }
    sh.cumulative.push_back(sh.cumulative.back() + len);
  }
  sh.points = std::move(points);
  return ReferencePath(std::move(sh));
}

ReferencePath ReferencePath::polyline_from_csv(const std::string& file_path) {
  std::ifstream in(file_path);
  if (!in) throw ConfigError("path.file", "cannot open polyline file: " + file_path);
  std::vector<Vec2> pts;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[0] == '#') continue;
    const auto comma = line.find(',');
    double x = 0.0;
    double y = 0.0;
    const bool ok = comma != std::string::npos && parse_double(line.substr(0, comma), x) &&
                    parse_double(line.substr(comma + 1), y);
    if (!ok) {
      if (pts.empty() && line_no == 1) continue;  // header
      throw ConfigError("path.file", file_path + ":" + std::to_string(line_no) +
                                         ": expected two numeric columns");
    }
    pts.push_back({x, y});
  }
  return polyline(std::move(pts));
}

PathKind ReferencePath::kind() const { return static_cast<PathKind>(shape_.index()); }

std::pair<double, double> ReferencePath::domain() const {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return std::visit(Overloaded{
                        [](const LineShape&) { return std::pair{-inf, inf}; },
                        [](const CircleShape&) { return std::pair{0.0, kTwoPi}; },
                        [](const SinusoidShape& sh) { return std::pair{sh.x_min, sh.x_max}; },
                        [](const PolylineShape& sh) { return std::pair{0.0, sh.cumulative.back()}; },
                    },
                    shape_);
}

double ReferencePath::checked(double s) const {
  if (!std::isfinite(s)) throw DomainError("path parameter is not finite");
  if (const auto* sh = std::get_if<SinusoidShape>(&shape_)) {
    if (s >= sh->x_min && s <= sh->x_max) return s;
  }
  if (periodic()) {
    double r = std::fmod(s, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    return r;
  }
  const auto [lo, hi] = domain();
  if (s < lo || s > hi) {
    throw DomainError("path parameter " + std::to_string(s) + " outside [" + std::to_string(lo) +
                      ", " + std::to_string(hi) + "]");
  }
  return s;
}

Vec2 ReferencePath::evaluate(double s) const {
  s = checked(s);
  return std::visit(
      Overloaded{
          [s](const LineShape& sh) {
            return sh.origin + Vec2{std::cos(sh.heading), std::sin(sh.heading)} * s;
          },
          [s](const CircleShape& sh) {
            const double th = sh.clockwise ? -s : s;
            return sh.center + Vec2{std::cos(th), std::sin(th)} * sh.radius;
          },
          [s](const SinusoidShape& sh) {
            return Vec2{s, sh.amplitude * std::sin(sinusoid_rate(sh) * s)};
          },
          [s](const PolylineShape& sh) {
            auto it = std::upper_bound(sh.cumulative.begin(), sh.cumulative.end(), s);
            std::size_t i = std::min<std::size_t>(it - sh.cumulative.begin(),
                                                  sh.cumulative.size() - 1);
            i = std::max<std::size_t>(i, 1) - 1;
            const double len = sh.cumulative[i + 1] - sh.cumulative[i];
            const double t = (s - sh.cumulative[i]) / len;
            return sh.points[i] + (sh.points[i + 1] - sh.points[i]) * t;
          },
      },
      shape_);
}

Vec2 ReferencePath::tangent(double s) const {
  s = checked(s);
  return std::visit(
      Overloaded{
          [](const LineShape& sh) { return Vec2{std::cos(sh.heading), std::sin(sh.heading)}; },
          [s](const CircleShape& sh) {
            return sh.clockwise ? Vec2{-std::sin(s), -std::cos(s)}
                                : Vec2{-std::sin(s), std::cos(s)};
          },
          [s](const SinusoidShape& sh) {
            const double k = sinusoid_rate(sh);
            const double slope = sh.amplitude * k * std::cos(k * s);
            const double n = std::sqrt(1.0 + slope * slope);
            return Vec2{1.0 / n, slope / n};
          },
          [s](const PolylineShape& sh) {
            auto it = std::upper_bound(sh.cumulative.begin(), sh.cumulative.end(), s);
            std::size_t i = std::min<std::size_t>(it - sh.cumulative.begin(),
                                                  sh.cumulative.size() - 1);
            i = std::max<std::size_t>(i, 1) - 1;
            const Vec2 seg = sh.points[i + 1] - sh.points[i];
            const double len = seg.norm();
            if (!(len > 0.0)) throw GeometryError("polyline: zero-length segment");
            return seg * (1.0 / len);
          },
      },
      shape_);
}

double ReferencePath::curvature(double s) const {
  s = checked(s);
  return std::visit(Overloaded{
                        [](const LineShape&) { return 0.0; },
                        [](const CircleShape& sh) {
                          return (sh.clockwise ? -1.0 : 1.0) / sh.radius;
                        },
                        [s](const SinusoidShape& sh) {
                          const double k = sinusoid_rate(sh);
                          const double y1 = sh.amplitude * k * std::cos(k * s);
                          const double y2 = -sh.amplitude * k * k * std::sin(k * s);
                          return y2 / std::pow(1.0 + y1 * y1, 1.5);
                        },
                        [](const PolylineShape&) { return 0.0; },
                    },
                    shape_);
}

double ReferencePath::speed(double s) const {
  s = checked(s);
  return std::visit(Overloaded{
                        [](const LineShape&) { return 1.0; },
                        [](const CircleShape& sh) { return sh.radius; },
                        [s](const SinusoidShape& sh) {
                          const double k = sinusoid_rate(sh);
                          const double slope = sh.amplitude * k * std::cos(k * s);
                          return std::sqrt(1.0 + slope * slope);
                        },
                        [](const PolylineShape&) { return 1.0; },
                    },
                    shape_);
}

Vec2 evaluate(const ReferencePath& path, double s) { return path.evaluate(s); }

double tangent_angle(const ReferencePath& path, double s) {
  const Vec2 t = path.tangent(s);
  if (!(t.norm() > 0.0)) throw GeometryError("zero-length tangent");
  return wrap_angle(std::atan2(t.y, t.x));
}

PathFrame closest_point(const ReferencePath& path, Vec2 p, const ClosestPointOptions& options) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
    throw std::invalid_argument("closest_point: non-finite position");
  }
  const double s = std::visit(
      Overloaded{
          [&](const LineShape& sh) {
            return (p - sh.origin).dot(Vec2{std::cos(sh.heading), std::sin(sh.heading)});
          },
          [&](const CircleShape& sh) {
            const Vec2 r = p - sh.center;
            if (r.norm() == 0.0) return 0.0;  // every point ties
            double th = std::atan2(r.y, r.x);
            if (sh.clockwise) th = -th;
            th = std::fmod(th, kTwoPi);
            return th < 0.0 ? th + kTwoPi : th;
          },
          [&](const SinusoidShape& sh) { return sinusoid_closest(sh, p, options); },
          [&](const PolylineShape& sh) {
            double best_s = 0.0;
            double best_d2 = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i + 1 < sh.points.size(); ++i) {
              const Vec2 a = sh.points[i];
              const Vec2 ab = sh.points[i + 1] - a;
              const double len2 = ab.dot(ab);
              const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
              const Vec2 q = a + ab * t;
              const double d2 = (p - q).dot(p - q);
              if (d2 < best_d2) {
                best_d2 = d2;
                best_s = sh.cumulative[i] + t * std::sqrt(len2);
              }
            }
            return best_s;
          },
      },
      path.shape());
  return frame_at(path, s, p);
}

double path_course_rate(const PathFrame& now, const PathFrame& prev, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("path_course_rate: dt must be positive");
  return angle_diff(now.chi_p, prev.chi_p) / dt;
}

double max_path_course_rate(const ReferencePath& path, double ground_speed) {
  if (!(ground_speed > 0.0)) {
    throw std::invalid_argument("max_path_course_rate: ground speed must be positive");
  }
  const double kappa = std::visit(
      Overloaded{
          [](const LineShape&) { return 0.0; },
          [](const CircleShape& sh) { return 1.0 / sh.radius; },
          [&](const SinusoidShape& sh) {
            const double span = sh.x_max - sh.x_min;
            // One wavelength covers every curvature value; never sample more.
            const double sampled = std::min(span, sh.wavelength);
            const int n = std::max(
                16, static_cast<int>(std::ceil(kCurvatureSamplesPerWavelength * sampled /
                                               sh.wavelength)));
            double best = 0.0;
            for (int i = 0; i <= n; ++i) {
              best = std::max(best, std::abs(path.curvature(sh.x_min + sampled * i / n)));
            }
            return best;
          },
          [](const PolylineShape& sh) {
            double best = 0.0;
            for (std::size_t i = 1; i + 1 < sh.points.size(); ++i) {
              const Vec2 a = sh.points[i] - sh.points[i - 1];
              const Vec2 b = sh.points[i + 1] - sh.points[i];
              const double turn = std::abs(std::atan2(a.cross(b), a.dot(b)));
              const double mean_len = 0.5 * (a.norm() + b.norm());
              best = std::max(best, turn / mean_len);
            }
            return best;
          },
      },
      path.shape());
  return ground_speed * kappa;
}

}  // namespace vfguide
