#pragma once

// Minimization of the cone boundary area over the apex projection at fixed
// height, and of the isoperimetric ratio over apex projection and height.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "coneiso/cone.hpp"
#include "coneiso/errors.hpp"
#include "coneiso/geometry.hpp"
#include "coneiso/vec2.hpp"

namespace coneiso {

/// Lateral area as a function of the apex projection at fixed height,
///   g(x) = sum_i (a_i / 2) sqrt(l_i(x)^2 + h^2),  l_i(x) = n_i . x + offset_i.
/// Each term is the norm of an affine map, so g is convex; its Hessian
///   sum_i (a_i / 2) h^2 / (l_i^2 + h^2)^(3/2) n_i n_i^T
/// is positive definite whenever the edge normals span the plane.
class BoundaryObjective {
 public:
  BoundaryObjective(const Polygon& poly, double height) : poly_(&poly), height_(height) {
    require_positive_height(height);
  }

  double height() const { return height_; }
  const Polygon& polygon() const { return *poly_; }

  double value(const Vec2& x) const { return detail::lateral_sum(*poly_, x, height_); }

  Vec2 gradient(const Vec2& x) const {
    Vec2 g;
    for (const auto& e : poly_->edges()) {
      const double l = e.signed_distance(x);
      g += (0.5 * e.length * l / std::hypot(l, height_)) * e.unit_normal;
    }
    return g;
  }

  Sym2 hessian(const Vec2& x) const {
    Sym2 h;
    const double hh = height_ * height_;
    for (const auto& e : poly_->edges()) {
      const double l = e.signed_distance(x);
      const double s = std::hypot(l, height_);
      const double w = 0.5 * e.length * hh / (s * s * s);
      h.xx += w * e.unit_normal.x * e.unit_normal.x;
      h.xy += w * e.unit_normal.x * e.unit_normal.y;
      h.yy += w * e.unit_normal.y * e.unit_normal.y;
    }
    return h;
  }

 private:
  const Polygon* poly_;
  double height_;
};

struct CenterResult {
  Vec2 center;
  double height = 0.0;
  double boundary_area = 0.0;
  double gradient_norm = 0.0;
  DistanceProfile distance_profile;
  std::size_t iterations = 0;
  bool converged = false;
};

struct NewtonOptions {
  std::size_t max_iterations = 200;
  double armijo_slope = 1e-4;
  double backtrack_factor = 0.5;
  double max_condition = 1e12;
  // Extra Newton steps taken once the gradient test passes; they cost little
  // and pin the position down on badly conditioned (thin) polygons.
  std::size_t polish_steps = 3;
};

/// Cone isoperimetric center of the given height: the apex projection that
/// minimizes the cone boundary area. Damped Newton from the centroid with
/// Armijo backtracking; gradient steps replace Newton steps when the Hessian
/// condition number exceeds `max_condition`. Convergence means
/// |grad g| <= tol * perimeter / 2 at the returned point. Running out of
/// iterations is reported through `converged == false`, never thrown.
inline CenterResult center_at_height(const Polygon& poly, double height, double tol = 1e-10,
                                     const NewtonOptions& opts = {}) {
  require_positive_height(height);
  if (!(tol > 0.0)) throw Error(ErrorKind::NonpositiveArgument, "tolerance must be positive");

  const BoundaryObjective g(poly, height);
  const double grad_tol = tol * 0.5 * poly.perimeter();
  const double step_floor = 1e-14 * poly.diameter();

  Vec2 x = centroid(poly);
  double gx = g.value(x);
  std::size_t iter = 0;
  std::size_t polished = 0;
  for (; iter < opts.max_iterations; ++iter) {
    const Vec2 grad = g.gradient(x);
    const double gnorm = norm(grad);

    const Sym2 hess = g.hessian(x);
    double lo = 0.0;
    double hi = 0.0;
    hess.eigenvalues(lo, hi);
    Vec2 step;
    if (lo > 0.0 && hi < opts.max_condition * lo) {
      step = -hess.solve(grad);
    } else {
      step = -grad / std::max(hi, 1e-300);
    }

    if (gnorm <= grad_tol) {
      if (norm(step) <= step_floor || polished >= opts.polish_steps) break;
      ++polished;
    }
    if (gnorm == 0.0) break;

    const double slope = dot(grad, step);
    // Below this the value cannot tell iterates apart; fall back to the gradient.
    const double noise = 16.0 * std::numeric_limits<double>::epsilon() * gx;
    double t = 1.0;
    bool accepted = false;
    while (t > 1e-20) {
      const Vec2 trial = x + t * step;
      const double gt = g.value(trial);
      const bool armijo = gt <= gx + opts.armijo_slope * t * slope;
      const bool flat = std::abs(gt - gx) <= noise && norm(g.gradient(trial)) < gnorm;
      if (armijo || flat) {
        x = trial;
        gx = gt;
        accepted = true;
        break;
      }
      t *= opts.backtrack_factor;
    }
    if (!accepted) break;  // no representable decrease left
  }

  CenterResult out;
  out.center = x;
  out.height = height;
  out.boundary_area = poly.area() + g.value(x);
  out.gradient_norm = norm(g.gradient(x));
  out.distance_profile = signed_distances(poly, x);
  out.iterations = iter;
  out.converged = out.gradient_norm <= grad_tol;
  return out;
}

/// Result of a one-dimensional golden-section search.
struct ScalarMinimum {
  double argument = 0.0;
  double value = 0.0;
  std::size_t evaluations = 0;
};

/// Golden-section search for a unimodal function on [lo, hi]; stops when the
/// bracket is narrower than rel_tol * |midpoint|.
inline ScalarMinimum golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                                             double rel_tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  std::size_t evals = 2;
  while (b - a > rel_tol * std::abs(0.5 * (a + b)) && evals < 500) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    ++evals;
  }
  return fc < fd ? ScalarMinimum{c, fc, evals} : ScalarMinimum{d, fd, evals};
}

/// Sample of the outer objective recorded while bracketing.
struct HeightSample {
  double height = 0.0;
  double ratio = 0.0;
};

class BracketingFailed : public Error {
 public:
  BracketingFailed(const std::string& what, std::vector<HeightSample> samples)
      : Error(ErrorKind::BracketingFailed, what), samples_(std::move(samples)) {}

  const std::vector<HeightSample>& samples() const { return samples_; }

 private:
  std::vector<HeightSample> samples_;
};

struct OptimalCone {
  Vec2 center;
  double height = 0.0;
  double ratio = 0.0;
  std::optional<double> height_over_inradius;  // triangles only
  std::vector<CenterResult> inner_results;
  bool converged = false;
};

/// Natural length scale for the height search: the inradius of a triangle,
/// the max-min radius of a convex polygon, and 2 * area / perimeter otherwise.
inline double reference_height(const Polygon& poly) {
  if (poly.size() == 3) return triangle_incenter(poly).radius;
  if (poly.is_convex()) return chebyshev_center(poly).radius;
  return 2.0 * poly.area() / poly.perimeter();
}

/// Apex of the isoperimetrically optimal cone. The outer objective
///   F(h) = (min_x boundary_area(x, h))^3 / (S h / 3)^2
/// is sampled on the geometric grid h0 * 2^k, k = -6..6, widened by factors of
/// 64 (at most three times) until the smallest sample is interior; golden
/// section then runs on the two neighbouring samples.
inline OptimalCone optimal_cone(const Polygon& poly, double tol = 1e-10, double inner_tol = 1e-10) {
  if (!(tol > 0.0)) throw Error(ErrorKind::NonpositiveArgument, "tolerance must be positive");

  OptimalCone out;
  const double area = poly.area();
  auto outer = [&](double h) {
    out.inner_results.push_back(center_at_height(poly, h, inner_tol));
    const double b = out.inner_results.back().boundary_area;
    const double v = area * h / 3.0;
    return b * b * b / (v * v);
  };

  const double h0 = reference_height(poly);
  std::vector<HeightSample> samples;
  for (int k = -6; k <= 6; ++k) {
    const double h = std::ldexp(h0, k);
    samples.push_back({h, outer(h)});
  }
  constexpr int kMaxWidenings = 3;
  auto best_index = [&] {
    return static_cast<std::size_t>(
        std::min_element(samples.begin(), samples.end(),
                         [](const HeightSample& a, const HeightSample& b) { return a.ratio < b.ratio; }) -
        samples.begin());
  };
  std::size_t best = best_index();
  for (int widen = 0; widen < kMaxWidenings && (best == 0 || best + 1 == samples.size()); ++widen) {
    if (best == 0) {
      std::vector<HeightSample> lower;
      for (int k = 6; k >= 1; --k) {
        const double h = std::ldexp(samples.front().height, -k);
        lower.push_back({h, outer(h)});
      }
      samples.insert(samples.begin(), lower.begin(), lower.end());
    } else {
      for (int k = 1; k <= 6; ++k) {
        const double h = std::ldexp(samples.back().height, 1);
        samples.push_back({h, outer(h)});
      }
    }
    best = best_index();
  }
  if (best == 0 || best + 1 == samples.size()) {
    throw BracketingFailed("ratio keeps decreasing towards h = " + std::to_string(samples[best].height) +
                               "; no interior minimum found",
                           samples);
  }

  const auto found = golden_section_minimize(outer, samples[best - 1].height, samples[best + 1].height, tol);
  const double h_star = found.value <= samples[best].ratio ? found.argument : samples[best].height;

  const CenterResult final_center = center_at_height(poly, h_star, inner_tol);
  out.inner_results.push_back(final_center);
  out.center = final_center.center;
  out.height = h_star;
  out.ratio = isoperimetric_ratio(poly, Apex(final_center.center, h_star));
  if (poly.size() == 3) out.height_over_inradius = h_star / triangle_incenter(poly).radius;
  out.converged = std::all_of(out.inner_results.begin(), out.inner_results.end(),
                              [](const CenterResult& r) { return r.converged; });
  return out;
}

/// One row of a height sweep. Failed entries carry `error` and no result.
struct SweepEntry {
  double height = 0.0;
  std::optional<CenterResult> result;
  double volume = 0.0;
  double ratio = 0.0;
  double equal_angle_residual = 0.0;
  std::optional<ErrorKind> error_kind;
  std::string error;
};

/// Independent fixed-height solves, output in input order. With workers > 1
/// entries are solved concurrently; results do not depend on scheduling.
inline std::vector<SweepEntry> height_sweep(const Polygon& poly, const std::vector<double>& heights,
                                            double tol = 1e-10, std::size_t workers = 1) {
  std::vector<SweepEntry> out(heights.size());
  auto solve = [&](std::size_t i) {
    SweepEntry& entry = out[i];
    entry.height = heights[i];
    try {
      entry.result = center_at_height(poly, heights[i], tol);
      const Apex apex(entry.result->center, heights[i]);
      entry.volume = cone_volume(poly, heights[i]);
      entry.ratio = isoperimetric_ratio(poly, apex);
      entry.equal_angle_residual = equal_angle_residual(poly, entry.result->center, heights[i]);
    } catch (const Error& e) {
      entry.result.reset();
      entry.error_kind = e.kind();
      entry.error = e.what();
    }
  };

  if (workers <= 1 || heights.size() < 2) {
    for (std::size_t i = 0; i < heights.size(); ++i) solve(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  const std::size_t n_threads = std::min(workers, heights.size());
  for (std::size_t t = 0; t < n_threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < heights.size(); i = next++) solve(i);
    });
  }
  pool.clear();  // joins
  return out;
}

}  // namespace coneiso
