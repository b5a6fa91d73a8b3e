// Compares the classical centers of the trapezoid 0 <= x <= 2, |y| <= 1 + x/2
// with its cone isoperimetric centers.

#include <cstdio>

#include "coneiso/coneiso.hpp"

int main() {
  using namespace coneiso;
  const Polygon trap({{0, -1}, {2, -2}, {2, 2}, {0, 1}});

  const Vec2 g = centroid(trap);
  const auto cheb = chebyshev_center(trap);
  std::printf("centroid           (%.6f, %.6f)\n", g.x, g.y);
  std::printf("max-min point      (%.6f, %.6f)  radius %.6f\n", cheb.center.x, cheb.center.y, cheb.radius);

  for (const auto& row : height_sweep(trap, {1.0, 2.0, 3.0, 4.0})) {
    std::printf("center at h=%.0f     (%.6f, %.6f)  ratio %.6f\n", row.height, row.result->center.x,
                row.result->center.y, row.ratio);
  }

  const OptimalCone best = optimal_cone(trap);
  std::printf("optimal cone       (%.6f, %.6f)  h=%.6f  ratio %.6f\n", best.center.x, best.center.y, best.height,
              best.ratio);
  return 0;
}
