#pragma once

// Cone over a polygon base with apex above the base plane.
//
// The lateral boundary is one triangle per edge, with slant height
// sqrt(d_i^2 + h^2) where d_i is the distance from the apex projection to the
// edge line. The planar case fixes the isoperimetric exponents at
// (n + 1, n) = (3, 2), which makes the ratio scale invariant.

#include <algorithm>
#include <cmath>
#include <limits>

#include "coneiso/errors.hpp"
#include "coneiso/geometry.hpp"
#include "coneiso/vec2.hpp"

namespace coneiso {

/// Apex of a cone: its projection onto the base plane and its height.
class Apex {
 public:
  Apex(Vec2 projection, double height) : projection_(projection), height_(height) {
    require_positive_height(height);
  }

  const Vec2& projection() const { return projection_; }
  double height() const { return height_; }

 private:
  Vec2 projection_;
  double height_;
};

struct ConeMetrics {
  double base_area = 0.0;
  double lateral_area = 0.0;
  double boundary_area = 0.0;
  double volume = 0.0;
  double ratio = 0.0;
};

namespace detail {

inline double lateral_sum(const Polygon& poly, const Vec2& point, double height) {
  double sum = 0.0;
  for (const auto& e : poly.edges()) sum += e.length * std::hypot(e.signed_distance(point), height);
  return 0.5 * sum;
}

}  // namespace detail

/// Sum over edges of half the edge length times the slant height. Only the
/// squared distances enter, so this is also the definition used for
/// nonconvex bases.
inline double lateral_area(const Polygon& poly, const Apex& apex) {
  return detail::lateral_sum(poly, apex.projection(), apex.height());
}

inline double boundary_area(const Polygon& poly, const Apex& apex) { return poly.area() + lateral_area(poly, apex); }

/// Volume depends only on the height: base area * height / 3.
inline double cone_volume(const Polygon& poly, double height) {
  require_positive_height(height);
  return poly.area() * height / 3.0;
}

/// Scale-invariant ratio boundary_area^3 / volume^2.
inline double isoperimetric_ratio(const Polygon& poly, const Apex& apex) {
  const double b = boundary_area(poly, apex);
  const double v = cone_volume(poly, apex.height());
  return b * b * b / (v * v);
}

inline ConeMetrics cone_metrics(const Polygon& poly, const Apex& apex) {
  ConeMetrics m;
  m.base_area = poly.area();
  m.lateral_area = lateral_area(poly, apex);
  m.boundary_area = m.base_area + m.lateral_area;
  m.volume = cone_volume(poly, apex.height());
  m.ratio = m.boundary_area * m.boundary_area * m.boundary_area / (m.volume * m.volume);
  return m;
}

/// Height profile of the ratio over a triangle with the apex above its
/// incenter: f = (9 S / r^2) * phi(h / r). Minimal at t = 2 sqrt(2), value 8.
inline double phi(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) {
    throw Error(ErrorKind::NonpositiveArgument, "phi is defined for t > 0 only");
  }
  const double s = 1.0 + std::sqrt(1.0 + t * t);
  return s * s * s / (t * t);
}

/// Spread max_i s_i - min_i s_i of s_i = d_i / sqrt(d_i^2 + h^2), the cosines
/// of the angles the lateral faces make with the base. Zero exactly when all
/// faces are equally inclined.
inline double equal_angle_residual(const Polygon& poly, const Vec2& point, double height) {
  require_positive_height(height);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& e : poly.edges()) {
    const double d = e.signed_distance(point);
    const double s = d / std::hypot(d, height);
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  return hi - lo;
}

}  // namespace coneiso
