#pragma once

#include <cmath>

namespace coneiso {

/// Point or vector in the base plane.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2& operator+=(const Vec2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr Vec2& operator-=(const Vec2& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  constexpr Vec2& operator*=(double s) {
    x *= s;
    y *= s;
    return *this;
  }

  friend constexpr Vec2 operator+(Vec2 a, const Vec2& b) { return a += b; }
  friend constexpr Vec2 operator-(Vec2 a, const Vec2& b) { return a -= b; }
  friend constexpr Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
  friend constexpr Vec2 operator*(Vec2 a, double s) { return a *= s; }
  friend constexpr Vec2 operator*(double s, Vec2 a) { return a *= s; }
  friend constexpr Vec2 operator/(const Vec2& a, double s) { return {a.x / s, a.y / s}; }
  friend constexpr bool operator==(const Vec2&, const Vec2&) = default;
};

constexpr double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

/// z-component of the 3-D cross product; positive when b is counterclockwise of a.
constexpr double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

inline double norm(const Vec2& a) { return std::hypot(a.x, a.y); }

inline double distance(const Vec2& a, const Vec2& b) { return norm(a - b); }

inline bool is_finite(const Vec2& a) { return std::isfinite(a.x) && std::isfinite(a.y); }

/// Symmetric 2x2 matrix [[xx, xy], [xy, yy]].
struct Sym2 {
  double xx = 0.0;
  double xy = 0.0;
  double yy = 0.0;

  constexpr double det() const { return xx * yy - xy * xy; }
  constexpr double trace() const { return xx + yy; }

  /// Eigenvalues, smallest first.
  void eigenvalues(double& lo, double& hi) const {
    const double mean = 0.5 * (xx + yy);
    const double rad = std::hypot(0.5 * (xx - yy), xy);
    lo = mean - rad;
    hi = mean + rad;
  }

  /// Solves M v = rhs by Cramer's rule. Caller checks conditioning.
  Vec2 solve(const Vec2& rhs) const {
    const double d = det();
    return {(yy * rhs.x - xy * rhs.y) / d, (xx * rhs.y - xy * rhs.x) / d};
  }

  Vec2 apply(const Vec2& v) const { return {xx * v.x + xy * v.y, xy * v.x + yy * v.y}; }
};

}  // namespace coneiso
