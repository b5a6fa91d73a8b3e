#pragma once

// Planar polygons, the signed-distance machinery over their edge lines, and
// the classical centers (incenter, max-min point, centroid).

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "coneiso/errors.hpp"
#include "coneiso/simplex.hpp"
#include "coneiso/vec2.hpp"

namespace coneiso {

/// Supporting line of one polygon edge, normalized so that
/// `signed_distance(x) = dot(unit_normal, x) + offset` is positive on the
/// interior side.
struct EdgeLine {
  Vec2 unit_normal;
  double offset = 0.0;
  double length = 0.0;

  double signed_distance(const Vec2& p) const { return dot(unit_normal, p) + offset; }
};

struct BoundingBox {
  Vec2 lo;
  Vec2 hi;

  Vec2 extent() const { return hi - lo; }
  Vec2 center() const { return 0.5 * (lo + hi); }
};

/// Shoelace signed area of a closed vertex loop; positive when counterclockwise.
inline double signed_area(std::span<const Vec2> pts) {
  if (pts.empty()) return 0.0;
  // Relative to the first vertex, so far-off translations do not cancel.
  const Vec2 o = pts.front();
  double twice = 0.0;
  const std::size_t n = pts.size();
  for (std::size_t i = 1; i + 1 < n; ++i) twice += cross(pts[i] - o, pts[i + 1] - o);
  return 0.5 * twice;
}

namespace detail {

inline int orientation_sign(const Vec2& a, const Vec2& b, const Vec2& c, double eps) {
  const double v = cross(b - a, c - a);
  if (v > eps) return 1;
  if (v < -eps) return -1;
  return 0;
}

inline bool on_segment(const Vec2& a, const Vec2& b, const Vec2& p, double eps) {
  return std::min(a.x, b.x) - eps <= p.x && p.x <= std::max(a.x, b.x) + eps &&
         std::min(a.y, b.y) - eps <= p.y && p.y <= std::max(a.y, b.y) + eps;
}

// Closed-segment intersection test, touching counts.
inline bool segments_touch(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d, double area_eps,
                           double len_eps) {
  const int o1 = orientation_sign(a, b, c, area_eps);
  const int o2 = orientation_sign(a, b, d, area_eps);
  const int o3 = orientation_sign(c, d, a, area_eps);
  const int o4 = orientation_sign(c, d, b, area_eps);
  if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) return true;
  if (o1 == 0 && on_segment(a, b, c, len_eps)) return true;
  if (o2 == 0 && on_segment(a, b, d, len_eps)) return true;
  if (o3 == 0 && on_segment(c, d, a, len_eps)) return true;
  if (o4 == 0 && on_segment(c, d, b, len_eps)) return true;
  return false;
}

}  // namespace detail

/// A validated simple polygon with counterclockwise vertex order.
///
/// Construction rejects fewer than three points, non-finite coordinates,
/// repeated consecutive vertices, near-zero area (below 1e-12 * diameter^2)
/// and self-intersections (pairwise segment test, quadratic in the vertex
/// count). Clockwise input is reversed, keeping the first vertex in place.
class Polygon {
 public:
  explicit Polygon(std::vector<Vec2> points) : vertices_(std::move(points)) {
    const std::size_t n = vertices_.size();
    if (n < 3) {
      throw Error(ErrorKind::DegenerateInput, "a polygon needs at least 3 vertices, got " + std::to_string(n));
    }
    for (const auto& p : vertices_) {
      if (!is_finite(p)) throw Error(ErrorKind::DegenerateInput, "vertex coordinates must be finite");
    }
    diameter_ = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) diameter_ = std::max(diameter_, distance(vertices_[i], vertices_[j]));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (distance(vertices_[i], vertices_[(i + 1) % n]) <= 1e-14 * diameter_) {
        throw Error(ErrorKind::DegenerateInput, "consecutive vertices " + std::to_string(i) + " and " +
                                                    std::to_string((i + 1) % n) + " coincide");
      }
    }
    double a = signed_area(vertices_);
    if (std::abs(a) <= 1e-12 * diameter_ * diameter_) {
      throw Error(ErrorKind::DegenerateInput, "polygon area is zero (collinear vertices)");
    }
    if (a < 0.0) {
      std::reverse(vertices_.begin() + 1, vertices_.end());
      a = -a;
    }
    area_ = a;
    check_simple();

    edges_.reserve(n);
    perimeter_ = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const Vec2& p = vertices_[i];
      const Vec2 d = vertices_[(i + 1) % n] - p;
      const double len = norm(d);
      const Vec2 normal{-d.y / len, d.x / len};
      edges_.push_back({normal, -dot(normal, p), len});
      perimeter_ += len;
    }
  }

  const std::vector<Vec2>& vertices() const { return vertices_; }
  const std::vector<EdgeLine>& edges() const { return edges_; }
  std::size_t size() const { return vertices_.size(); }
  double area() const { return area_; }
  double perimeter() const { return perimeter_; }
  double diameter() const { return diameter_; }

  BoundingBox bounding_box() const {
    BoundingBox box{vertices_.front(), vertices_.front()};
    for (const auto& p : vertices_) {
      box.lo.x = std::min(box.lo.x, p.x);
      box.lo.y = std::min(box.lo.y, p.y);
      box.hi.x = std::max(box.hi.x, p.x);
      box.hi.y = std::max(box.hi.y, p.y);
    }
    return box;
  }

  /// True when every turn is a left turn (collinear runs allowed).
  bool is_convex() const {
    const std::size_t n = vertices_.size();
    const double eps = 1e-12 * diameter_ * diameter_;
    for (std::size_t i = 0; i < n; ++i) {
      const Vec2& a = vertices_[i];
      const Vec2& b = vertices_[(i + 1) % n];
      const Vec2& c = vertices_[(i + 2) % n];
      if (cross(b - a, c - b) < -eps) return false;
    }
    return true;
  }

 private:
  void check_simple() const {
    const std::size_t n = vertices_.size();
    const double area_eps = 1e-14 * diameter_ * diameter_;
    const double len_eps = 1e-14 * diameter_;
    for (std::size_t i = 0; i < n; ++i) {
      const Vec2& a = vertices_[i];
      const Vec2& b = vertices_[(i + 1) % n];
      for (std::size_t j = i + 1; j < n; ++j) {
        const Vec2& c = vertices_[j];
        const Vec2& d = vertices_[(j + 1) % n];
        const bool next = j == i + 1;
        const bool prev = i == 0 && j == n - 1;
        if (next || prev) {
          // Adjacent edges share one endpoint; they overlap only when the
          // far endpoint of one folds back onto the other.
          const Vec2& shared = next ? b : a;
          const Vec2& far_self = next ? a : b;
          const Vec2& far_other = next ? d : c;
          if (detail::orientation_sign(far_self, shared, far_other, area_eps) == 0 &&
              dot(far_self - shared, far_other - shared) > 0.0) {
            throw Error(ErrorKind::SelfIntersecting,
                        "edges " + std::to_string(i) + " and " + std::to_string(j) + " fold back onto each other");
          }
          continue;
        }
        if (detail::segments_touch(a, b, c, d, area_eps, len_eps)) {
          throw Error(ErrorKind::SelfIntersecting,
                      "edges " + std::to_string(i) + " and " + std::to_string(j) + " intersect");
        }
      }
    }
  }

  std::vector<Vec2> vertices_;
  std::vector<EdgeLine> edges_;
  double area_ = 0.0;
  double perimeter_ = 0.0;
  double diameter_ = 0.0;
};

inline Polygon build_polygon(std::vector<Vec2> points) { return Polygon(std::move(points)); }

/// Signed distances of one point to every edge line, in edge order.
struct DistanceProfile {
  Vec2 point;
  std::vector<double> distances;

  double min() const { return *std::min_element(distances.begin(), distances.end()); }
  double max() const { return *std::max_element(distances.begin(), distances.end()); }
};

inline DistanceProfile signed_distances(const Polygon& poly, const Vec2& point) {
  DistanceProfile out{point, {}};
  out.distances.reserve(poly.size());
  for (const auto& e : poly.edges()) out.distances.push_back(e.signed_distance(point));
  return out;
}

struct IncircleResult {
  Vec2 center;
  double radius = 0.0;
};

/// Closed-form incenter: edge-length weighted average of the opposite vertices.
inline IncircleResult triangle_incenter(const Polygon& poly) {
  if (poly.size() != 3) {
    throw Error(ErrorKind::NotATriangle, "incenter needs 3 vertices, got " + std::to_string(poly.size()));
  }
  const auto& v = poly.vertices();
  // Edge i runs from vertex i to vertex i+1, so it is opposite vertex i+2.
  const auto& e = poly.edges();
  const double wa = e[1].length;  // opposite v[0]
  const double wb = e[2].length;  // opposite v[1]
  const double wc = e[0].length;  // opposite v[2]
  const double p = wa + wb + wc;
  return {(wa * v[0] + wb * v[1] + wc * v[2]) / p, 2.0 * poly.area() / p};
}

struct ChebyshevResult {
  Vec2 center;
  double radius = 0.0;
};

inline Vec2 centroid(const Polygon& poly) {
  // Shift to the first vertex to keep the cross products well scaled.
  const auto& v = poly.vertices();
  const Vec2 o = v.front();
  const std::size_t n = v.size();
  double twice_area = 0.0;
  Vec2 acc;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 p = v[i] - o;
    const Vec2 q = v[(i + 1) % n] - o;
    const double w = cross(p, q);
    twice_area += w;
    acc += w * (p + q);
  }
  return o + acc / (3.0 * twice_area);
}

/// Largest inscribed disc of a convex polygon via the linear program
///   maximize rho  s.t.  n_i . x + offset_i >= rho  for every edge.
/// The optimum may be attained on a whole segment; the simplex returns one
/// vertex of that optimal face.
inline ChebyshevResult chebyshev_center(const Polygon& poly) {
  if (!poly.is_convex()) {
    throw Error(ErrorKind::NotConvex, "max-min point via linear programming requires a convex polygon");
  }
  // Work relative to the centroid: it is interior, so the origin with rho = 0
  // is feasible and every right-hand side is nonnegative.
  const Vec2 origin = centroid(poly);
  const double scale = poly.diameter();
  lp::Problem prob;
  // Variables: x+, x-, y+, y-, rho (all >= 0), coordinates in units of the diameter.
  prob.objective = {0.0, 0.0, 0.0, 0.0, 1.0};
  for (const auto& e : poly.edges()) {
    const double nx = e.unit_normal.x;
    const double ny = e.unit_normal.y;
    prob.lhs.push_back({-nx, nx, -ny, ny, 1.0});
    prob.rhs.push_back(e.signed_distance(origin) / scale);
  }
  const auto sol = lp::maximize(prob);
  const Vec2 offset{sol.variables[0] - sol.variables[1], sol.variables[2] - sol.variables[3]};
  const Vec2 center = origin + scale * offset;
  const double radius = signed_distances(poly, center).min();
  if (!(radius > 0.0)) throw Error(ErrorKind::DegenerateInput, "polygon has no interior disc");
  return {center, radius};
}

}  // namespace coneiso
