#include "coneiso/cone.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "test_support.hpp"

namespace coneiso {
namespace {

using testing::equilateral_side_two;
using testing::relative_error;
using testing::trapezoid;
using testing::unit_right_triangle;
using testing::unit_square;

const double kSqrt2 = std::sqrt(2.0);
const double kRightInradius = (2.0 - kSqrt2) / 2.0;

TEST(ApexTest, RejectsNonpositiveHeight) {
  EXPECT_THROW(Apex({0, 0}, 0.0), Error);
  EXPECT_THROW(Apex({0, 0}, -1.0), Error);
  EXPECT_THROW(Apex({0, 0}, NAN), Error);
  try {
    Apex({0, 0}, 0.0);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonpositiveHeight);
  }
}

TEST(LateralAreaTest, RightTriangleAtOptimalHeight) {
  // Every slant height is sqrt(r^2 + 8 r^2) = 3r, so the lateral area is
  // (perimeter / 2) * 3r = 1.5.
  const Apex apex({kRightInradius, kRightInradius}, 2.0 * kSqrt2 * kRightInradius);
  EXPECT_NEAR(lateral_area(unit_right_triangle(), apex), 1.5, 1e-15);
}

TEST(LateralAreaTest, FlatLimitOverIncenterIsBaseArea) {
  const Apex apex({kRightInradius, kRightInradius}, 1e-9);
  EXPECT_NEAR(lateral_area(unit_right_triangle(), apex), 0.5, 1e-12);
}

TEST(LateralAreaTest, UnitSquare) {
  EXPECT_NEAR(lateral_area(unit_square(), Apex({0.5, 0.5}, 0.5)), kSqrt2, 1e-15);
}

TEST(BoundaryAreaTest, HandValues) {
  const Apex right({kRightInradius, kRightInradius}, 2.0 * kSqrt2 * kRightInradius);
  EXPECT_NEAR(boundary_area(unit_right_triangle(), right), 2.0, 1e-15);
  EXPECT_NEAR(boundary_area(unit_square(), Apex({0.5, 0.5}, 0.5)), 1.0 + kSqrt2, 1e-15);
  const double r = std::sqrt(3.0) / 3.0;
  EXPECT_NEAR(boundary_area(equilateral_side_two(), Apex({1.0, r}, 2.0 * kSqrt2 * r)), 4.0 * std::sqrt(3.0), 1e-14);
}

TEST(VolumeTest, HandValues) {
  EXPECT_NEAR(cone_volume(unit_right_triangle(), 3.0), 0.5, 1e-15);
  EXPECT_NEAR(cone_volume(trapezoid(), 3.25), 6.5, 1e-15);
  try {
    cone_volume(trapezoid(), 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonpositiveHeight);
  }
}

TEST(RatioTest, TrianglesAtOptimalHeight) {
  // f = (9 S / r^2) * phi(2 sqrt 2) = 72 S / r^2.
  const Apex right({kRightInradius, kRightInradius}, 2.0 * kSqrt2 * kRightInradius);
  const double want_right = 72.0 * 0.5 / (kRightInradius * kRightInradius);
  EXPECT_NEAR(want_right, 419.647, 1e-3);
  EXPECT_LE(relative_error(isoperimetric_ratio(unit_right_triangle(), right), want_right), 1e-13);

  const double r = std::sqrt(3.0) / 3.0;
  const Apex eq({1.0, r}, 2.0 * kSqrt2 * r);
  EXPECT_NEAR(216.0 * std::sqrt(3.0), 374.123, 1e-3);
  EXPECT_LE(relative_error(isoperimetric_ratio(equilateral_side_two(), eq), 216.0 * std::sqrt(3.0)), 1e-13);
}

TEST(RatioTest, ScaleInvariant) {
  const testing::Similarity triple{3.0, 0.0, {}};
  const Polygon t = unit_right_triangle();
  const Apex apex({0.2, 0.3}, 0.7);
  const Apex scaled(triple(apex.projection()), 3.0 * apex.height());
  EXPECT_LE(relative_error(isoperimetric_ratio(triple(t), scaled), isoperimetric_ratio(t, apex)), 1e-10);
}

TEST(PhiTest, MinimumAtTwoRootTwo) {
  EXPECT_LE(relative_error(phi(2.0 * kSqrt2), 8.0), 1e-12);
  EXPECT_GT(phi(2.0 * kSqrt2 - 0.01), 8.0);
  EXPECT_GT(phi(2.0 * kSqrt2 + 0.01), 8.0);
  EXPECT_LE(relative_error(phi(1.0), std::pow(1.0 + kSqrt2, 3)), 1e-14);
  EXPECT_NEAR(phi(1.0), 14.0711, 1e-4);
}

TEST(PhiTest, RejectsNonpositiveArgument) {
  for (double t : {0.0, -1.0}) {
    try {
      phi(t);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::NonpositiveArgument);
    }
  }
}

TEST(PhiTest, ProfileMatchesRatioOverIncenter) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> ut(0.05, 20.0);
  for (int trial = 0; trial < 50; ++trial) {
    const Polygon tri = testing::random_triangle(rng);
    const auto inc = triangle_incenter(tri);
    const double t = ut(rng);
    const double f = isoperimetric_ratio(tri, Apex(inc.center, t * inc.radius));
    EXPECT_LE(relative_error(f, 9.0 * tri.area() / (inc.radius * inc.radius) * phi(t)), 1e-11);
  }
}

TEST(EqualAngleTest, ZeroAtIncenter) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const Polygon tri = testing::random_triangle(rng);
    const Vec2 c = triangle_incenter(tri).center;
    for (double h : {0.01, 1.0, 100.0}) EXPECT_LE(equal_angle_residual(tri, c, h), 1e-12);
  }
  EXPECT_LE(equal_angle_residual(unit_square(), {0.5, 0.5}, 0.3), 1e-15);
}

TEST(EqualAngleTest, PositiveAtRightTriangleCentroid) {
  // Distances 1/3, 1/(3 sqrt 2), 1/3 give cosines 1/sqrt(10) and 1/sqrt(19).
  const double want = 1.0 / std::sqrt(10.0) - 1.0 / std::sqrt(19.0);
  EXPECT_NEAR(want, 0.086812, 1e-6);
  EXPECT_NEAR(equal_angle_residual(unit_right_triangle(), {1.0 / 3.0, 1.0 / 3.0}, 1.0), want, 1e-14);
  EXPECT_THROW(equal_angle_residual(unit_right_triangle(), {0, 0}, 0.0), Error);
}

TEST(ConeMetricsTest, Consistency) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> uh(0.01, 10.0);
  std::uniform_real_distribution<double> ux(-10.0, 10.0);
  for (int trial = 0; trial < 100; ++trial) {
    const Polygon p = testing::random_convex_polygon(rng);
    const Apex apex({ux(rng), ux(rng)}, uh(rng));
    const ConeMetrics m = cone_metrics(p, apex);
    EXPECT_EQ(m.boundary_area, m.base_area + m.lateral_area);
    EXPECT_LE(relative_error(m.volume, p.area() * apex.height() / 3.0), 1e-12);
    EXPECT_LE(relative_error(m.ratio, std::pow(m.boundary_area, 3) / (m.volume * m.volume)), 1e-12);
    EXPECT_GE(m.lateral_area, 0.5 * p.perimeter() * apex.height());
    EXPECT_GT(m.boundary_area, p.area() + 0.5 * p.perimeter() * apex.height());
    EXPECT_EQ(m.ratio, isoperimetric_ratio(p, apex));
  }
}

TEST(ConeMetricsTest, RigidMotionInvariance) {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> uh(0.05, 5.0);
  std::uniform_real_distribution<double> ux(-8.0, 8.0);
  for (int trial = 0; trial < 100; ++trial) {
    const Polygon p = testing::random_convex_polygon(rng);
    const Apex apex({ux(rng), ux(rng)}, uh(rng));
    const auto motion = testing::random_rigid_motion(rng);
    const Polygon q = motion(p);
    const Apex moved(motion(apex.projection()), apex.height());
    EXPECT_LE(relative_error(boundary_area(q, moved), boundary_area(p, apex)), 1e-10);
    EXPECT_LE(relative_error(cone_volume(q, moved.height()), cone_volume(p, apex.height())), 1e-10);
    EXPECT_LE(relative_error(isoperimetric_ratio(q, moved), isoperimetric_ratio(p, apex)), 1e-10);
  }
}

TEST(ConeMetricsTest, RatioScaleInvariance) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const Polygon p = testing::random_convex_polygon(rng);
    const Apex apex(centroid(p) + Vec2{0.3, -0.2}, 1.3);
    for (double lambda : {0.1, 1.0, 7.3}) {
      const testing::Similarity s{lambda, 0.0, {}};
      const Apex scaled(s(apex.projection()), lambda * apex.height());
      EXPECT_LE(relative_error(isoperimetric_ratio(s(p), scaled), isoperimetric_ratio(p, apex)), 1e-10);
    }
  }
}

TEST(ConeMetricsTest, TriangleClosedFormOverIncenter) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> uh(0.01, 20.0);
  for (int trial = 0; trial < 100; ++trial) {
    const Polygon tri = testing::random_triangle(rng);
    const auto inc = triangle_incenter(tri);
    const double h = uh(rng);
    const double q = h / inc.radius;
    const double closed = tri.area() * (1.0 + std::sqrt(1.0 + q * q));
    EXPECT_LE(relative_error(boundary_area(tri, Apex(inc.center, h)), closed), 1e-12);
  }
}

TEST(ConeMetricsTest, BoundaryAreaIncreasesWithHeight) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    const Polygon p = testing::random_convex_polygon(rng);
    const Vec2 x = centroid(p) + Vec2{1.0, 2.0};
    double prev = 0.0;
    for (double h = 0.01; h < 50.0; h *= 1.3) {
      const double b = boundary_area(p, Apex(x, h));
      EXPECT_GT(b, prev);
      prev = b;
    }
  }
}

TEST(ConeMetricsTest, NonconvexBaseUsesEdgeSum) {
  const Polygon l({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
  const Apex apex({0.5, 0.5}, 1.0);
  double want = 0.0;
  for (const auto& e : l.edges()) want += 0.5 * e.length * std::hypot(e.signed_distance(apex.projection()), 1.0);
  EXPECT_NEAR(lateral_area(l, apex), want, 1e-14);
}

}  // namespace
}  // namespace coneiso
