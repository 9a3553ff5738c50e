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

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "vfguide/common.hpp"

namespace vfguide {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  /// z-component of the 2-D cross product.
  double cross(const Vec2& o) const { return x * o.y - y * o.x; }
  double norm() const { return std::sqrt(x * x + y * y); }
  bool operator==(const Vec2&) const = default;
};

enum class PathKind { kLine, kCircle, kSinusoid, kPolyline };

std::string to_string(PathKind kind);

/// Infinite straight line through `origin` with direction `heading`.
/// Parameter: signed arc length from `origin`.
struct LineShape {
  Vec2 origin;
  double heading = 0.0;
};

/// Circle traversed counter-clockwise (or clockwise). Parameter: polar angle
/// of the point for counter-clockwise circles, its negation for clockwise
/// ones, so s always increases along the direction of travel. Periodic.
struct CircleShape {
  Vec2 center;
  double radius = 1.0;
  bool clockwise = false;
};

/// y = amplitude * sin(2 pi x / wavelength) for x in [x_min, x_max].
/// Parameter: x.
struct SinusoidShape {
  double amplitude = 300.0;
  double wavelength = 1.0;
  double x_min = 0.0;
  double x_max = 1.0;
};

/// Piecewise-linear path. Parameter: arc length from the first vertex.
struct PolylineShape {
  std::vector<Vec2> points;
  std::vector<double> cumulative;  // arc length at each vertex
};

/// A planar reference path. Immutable once built; construct through the
/// static factories, which validate their arguments.
class ReferencePath {
 public:
  using Shape = std::variant<LineShape, CircleShape, SinusoidShape, PolylineShape>;

  static ReferencePath line(Vec2 origin, double heading);
  static ReferencePath circle(Vec2 center, double radius, bool clockwise = false);
  static ReferencePath sinusoid(double amplitude, double wavelength, double x_min,
                                double x_max);
  /// Requires >= 2 points and no repeated consecutive points.
  static ReferencePath polyline(std::vector<Vec2> points);
  /// Two-column "x,y" text file; a non-numeric first line is treated as a
  /// header. Blank lines and lines starting with '#' are skipped.
  static ReferencePath polyline_from_csv(const std::string& file_path);

  PathKind kind() const;
  const Shape& shape() const { return shape_; }

  /// Parameter domain [lo, hi]. Infinite for lines; [0, 2 pi) for circles.
  std::pair<double, double> domain() const;
  bool periodic() const { return kind() == PathKind::kCircle; }

  Vec2 evaluate(double s) const;
  /// Unit tangent in the direction of increasing s.
  Vec2 tangent(double s) const;
  /// Signed curvature (positive when the path turns counter-clockwise).
  double curvature(double s) const;

  /// Arc-length step that corresponds to a parameter step of `ds` near s
  /// (|dp/ds|). Used by the samplers to pick parameter spacings.
  double speed(double s) const;

 private:
  explicit ReferencePath(Shape shape) : shape_(std::move(shape)) {}
  /// Maps a finite s into the domain for periodic paths, throws DomainError
  /// for bounded ones.
  double checked(double s) const;

  Shape shape_;
};

/// Local path frame at the closest point to the vehicle.
struct PathFrame {
  double s_star = 0.0;
  Vec2 p_ref;
  double chi_p = 0.0;      ///< tangent angle, (-pi, pi]
  double d = 0.0;          ///< signed cross-track error
  int rho = 1;             ///< side indicator, sign(d) when d != 0
  double chi_p_dot = 0.0;  ///< path course rate, filled by the caller
};

struct ClosestPointOptions {
  /// Upper bound on coarse samples over the search window.
  int max_samples = 2048;
  /// Coarse sample spacing in parameter units. Zero picks a per-kind default
  /// (wavelength / 256 for sinusoids).
  double max_spacing = 0.0;
  /// Golden-section tolerance on the parameter.
  double tolerance = 1e-6;
  /// Previous closest parameter. Only used to shrink the search window, the
  /// result is still the global minimiser.
  std::optional<double> hint;
};

Vec2 evaluate(const ReferencePath& path, double s);

/// Tangent angle at s, wrapped to (-pi, pi].
double tangent_angle(const ReferencePath& path, double s);

/// Global closest point. The side indicator is +1 when the vehicle lies on
/// the side the left-rotated tangent (-sin chi_p, cos chi_p) points to, which
/// makes d' = V_g sin(chi - chi_p). Drawn with x north and y east this is the
/// right-hand side of the path. Ties go to the smallest parameter.
PathFrame closest_point(const ReferencePath& path, Vec2 p,
                        const ClosestPointOptions& options = {});

/// Finite-difference path course rate: wrap(chi_p_now - chi_p_prev) / dt.
double path_course_rate(const PathFrame& now, const PathFrame& prev, double dt);

/// Samples used per wavelength (sinusoid) when estimating max curvature.
inline constexpr int kCurvatureSamplesPerWavelength = 4096;

/// V_g times the maximum absolute path curvature over the domain. Sinusoids
/// are sampled at kCurvatureSamplesPerWavelength points per wavelength,
/// polylines use the turning angle at each vertex divided by the mean length
/// of its two segments.
double max_path_course_rate(const ReferencePath& path, double ground_speed);

}  // namespace vfguide
