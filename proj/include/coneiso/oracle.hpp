#pragma once

// Brute-force reference answers. Nothing here touches the optimizer; the grid
// searches call only the cone evaluators.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "coneiso/cone.hpp"
#include "coneiso/errors.hpp"
#include "coneiso/geometry.hpp"
#include "coneiso/vec2.hpp"

namespace coneiso::oracle {

struct GridSpec {
  BoundingBox box;
  std::size_t resolution = 201;
  std::size_t refine_rounds = 6;
  double refine_zoom = 5.0;

  void validate() const {
    if (resolution < 3) throw Error(ErrorKind::InvalidGridSpec, "grid resolution must be at least 3");
    if (!(refine_zoom > 1.0)) throw Error(ErrorKind::InvalidGridSpec, "refine zoom must exceed 1");
    const Vec2 ext = box.extent();
    if (!(ext.x > 0.0) || !(ext.y > 0.0)) {
      throw Error(ErrorKind::InvalidGridSpec, "grid box needs positive extent on both axes");
    }
  }
};

/// Bounding box padded by one diameter on every side.
inline GridSpec default_grid(const Polygon& poly) {
  GridSpec spec;
  spec.box = poly.bounding_box();
  const double pad = poly.diameter();
  spec.box.lo -= Vec2{pad, pad};
  spec.box.hi += Vec2{pad, pad};
  return spec;
}

struct GridMinimum {
  Vec2 point;
  double value = 0.0;
  double final_spacing = 0.0;          // max grid step of the last round
  std::vector<double> round_values;    // best value after each round
  BoundingBox final_box;
};

namespace detail {

inline double axis_coord(double lo, double hi, std::size_t i, std::size_t n) {
  return i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
}

// Smaller value wins; ties go to the lexicographically smaller point.
inline bool better(double v, const Vec2& p, double best_v, const Vec2& best_p) {
  if (v != best_v) return v < best_v;
  return p.x != best_p.x ? p.x < best_p.x : p.y < best_p.y;
}

inline BoundingBox zoom_box(const BoundingBox& outer, const BoundingBox& current, const Vec2& center,
                            double zoom) {
  const Vec2 half = 0.5 * current.extent() / zoom;
  BoundingBox b{center - half, center + half};
  // Slide back inside the declared box rather than evaluating outside it.
  auto clamp_axis = [](double& lo, double& hi, double olo, double ohi) {
    const double w = hi - lo;
    if (lo < olo) {
      lo = olo;
      hi = std::min(ohi, olo + w);
    }
    if (hi > ohi) {
      hi = ohi;
      lo = std::max(olo, ohi - w);
    }
  };
  clamp_axis(b.lo.x, b.hi.x, outer.lo.x, outer.hi.x);
  clamp_axis(b.lo.y, b.hi.y, outer.lo.y, outer.hi.y);
  return b;
}

}  // namespace detail

/// Minimizes an arbitrary function of the plane by repeated grid scans, each
/// round re-centred on the incumbent and shrunk by `refine_zoom`.
template <class F>
GridMinimum grid_minimize(F&& objective, const GridSpec& spec) {
  spec.validate();
  GridMinimum out;
  out.value = std::numeric_limits<double>::infinity();
  BoundingBox box = spec.box;
  const std::size_t n = spec.resolution;
  for (std::size_t round = 0; round <= spec.refine_rounds; ++round) {
    for (std::size_t i = 0; i < n; ++i) {
      const double x = detail::axis_coord(box.lo.x, box.hi.x, i, n);
      for (std::size_t j = 0; j < n; ++j) {
        const Vec2 p{x, detail::axis_coord(box.lo.y, box.hi.y, j, n)};
        const double v = objective(p);
        if (detail::better(v, p, out.value, out.point)) {
          out.value = v;
          out.point = p;
        }
      }
    }
    out.round_values.push_back(out.value);
    out.final_box = box;
    out.final_spacing = std::max(box.extent().x, box.extent().y) / static_cast<double>(n - 1);
    if (round < spec.refine_rounds) box = detail::zoom_box(spec.box, box, out.point, spec.refine_zoom);
  }
  return out;
}

/// Grid oracle for the fixed-height center: minimizes the boundary area.
inline GridMinimum grid_min_boundary(const Polygon& poly, double height, const GridSpec& spec) {
  require_positive_height(height);
  return grid_minimize([&](const Vec2& p) { return boundary_area(poly, Apex(p, height)); }, spec);
}

struct RatioMinimum {
  Vec2 point;
  double height = 0.0;
  double value = 0.0;
  double final_height_spacing = 0.0;
};

/// Grid oracle for the optimal cone. Heights are sampled geometrically over
/// h_range; each round re-centres (in log h) on the best height and shrinks
/// the log-range by the grid's zoom factor.
inline RatioMinimum grid_min_ratio(const Polygon& poly, const GridSpec& spec_xy, std::pair<double, double> h_range,
                                   std::size_t h_samples) {
  spec_xy.validate();
  const auto [h_lo, h_hi] = h_range;
  if (!(h_lo > 0.0) || !(h_hi > h_lo)) {
    throw Error(ErrorKind::NonpositiveHeight, "height range must satisfy 0 < lo < hi");
  }
  if (h_samples < 3) throw Error(ErrorKind::InvalidGridSpec, "need at least 3 height samples");

  const double log_lo0 = std::log(h_lo);
  const double log_hi0 = std::log(h_hi);
  double log_lo = log_lo0;
  double log_hi = log_hi0;
  RatioMinimum best;
  best.value = std::numeric_limits<double>::infinity();
  for (std::size_t round = 0; round <= spec_xy.refine_rounds; ++round) {
    for (std::size_t k = 0; k < h_samples; ++k) {
      const double h = std::exp(detail::axis_coord(log_lo, log_hi, k, h_samples));
      const GridMinimum m = grid_min_boundary(poly, h, spec_xy);
      const double v = cone_volume(poly, h);
      const double ratio = m.value * m.value * m.value / (v * v);
      if (ratio < best.value) {
        best = {m.point, h, ratio, 0.0};
      }
    }
    const double step = (log_hi - log_lo) / static_cast<double>(h_samples - 1);
    best.final_height_spacing = best.height * (std::exp(step) - 1.0);
    const double half = 0.5 * (log_hi - log_lo) / spec_xy.refine_zoom;
    const double c = std::log(best.height);
    log_lo = std::max(log_lo0, c - half);
    log_hi = std::min(log_hi0, c + half);
  }
  return best;
}

/// Central differences, one coordinate at a time.
template <class F>
Vec2 finite_diff_gradient(F&& objective, const Vec2& point, double step) {
  if (!(step > 0.0)) throw Error(ErrorKind::NonpositiveArgument, "finite-difference step must be positive");
  const Vec2 ex{step, 0.0};
  const Vec2 ey{0.0, step};
  return {(objective(point + ex) - objective(point - ex)) / (2.0 * step),
          (objective(point + ey) - objective(point - ey)) / (2.0 * step)};
}

}  // namespace coneiso::oracle
