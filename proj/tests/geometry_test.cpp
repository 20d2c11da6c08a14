#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "hullfilter/geometry.hpp"
#include "hullfilter/monotone_chain.hpp"
#include "oracles.hpp"

namespace hullfilter {
namespace {

const ConvexPolygon kUnitSquare({{0, 0}, {1, 0}, {1, 1}, {0, 1}});

bool bit_identical(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

TEST(Orientation, UnitTurns) {
  EXPECT_EQ(orientation({0, 0}, {1, 0}, {0, 1}), 1.0);
  EXPECT_EQ(orientation({0, 0}, {1, 0}, {2, 0}), 0.0);
  EXPECT_EQ(orientation({0, 0}, {0, 1}, {1, 0}), -1.0);
}

TEST(Orientation, AntisymmetricInLastTwoArguments) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 10000; ++i) {
    const Point2 a{u(rng), u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)};
    EXPECT_EQ(orientation(a, b, c), -orientation(a, c, b));
  }
}

TEST(PointSet, RejectsNonFinite) {
  EXPECT_THROW(PointSet({{0, 0}, {std::nan(""), 1}}), std::invalid_argument);
  EXPECT_THROW(PointSet({{INFINITY, 0}}), std::invalid_argument);
  EXPECT_NO_THROW(PointSet({{0, 0}, {0, 0}}));
}

TEST(UnitDirection, SymmetricAtSpecialAngles) {
  EXPECT_EQ(unit_direction(0).cos, 1.0);
  EXPECT_EQ(unit_direction(0).sin, 0.0);
  EXPECT_EQ(unit_direction(90).cos, 0.0);
  EXPECT_EQ(unit_direction(90).sin, 1.0);
  EXPECT_EQ(unit_direction(45).cos, unit_direction(45).sin);
  EXPECT_EQ(unit_direction(30).sin, 0.5);
  EXPECT_EQ(unit_direction(60).cos, 0.5);
  EXPECT_EQ(unit_direction(-90).sin, -1.0);
  EXPECT_EQ(unit_direction(450).sin, 1.0);
  for (double deg : {12.5, 77.0, 133.0, 200.0, 271.0, 359.0}) {
    const double rad = deg * std::numbers::pi / 180.0;
    EXPECT_NEAR(unit_direction(deg).cos, std::cos(rad), 1e-15) << deg;
    EXPECT_NEAR(unit_direction(deg).sin, std::sin(rad), 1e-15) << deg;
  }
}

TEST(RotateSet, QuarterTurn) {
  const PointSet r = rotate_set(PointSet{{1, 0}}, 90.0);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0], (Point2{0, 1}));
}

TEST(RotateSet, ZeroIsBitIdentical) {
  const PointSet s{{-0.0, 1.5}, {3.25, -0.0}, {1e-300, -7}};
  const PointSet r = rotate_set(s, 0.0);
  ASSERT_EQ(r.size(), s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    EXPECT_TRUE(bit_identical(r[i].x, s[i].x));
    EXPECT_TRUE(bit_identical(r[i].y, s[i].y));
  }
}

TEST(RotateSet, FortyFive) {
  const PointSet r = rotate_set(PointSet{{1, 0}}, 45.0);
  EXPECT_NEAR(r[0].x, std::sqrt(2.0) / 2, 1e-12);
  EXPECT_NEAR(r[0].y, std::sqrt(2.0) / 2, 1e-12);
}

TEST(RotateSet, RejectsNonFiniteAngle) {
  EXPECT_THROW(rotate_set(PointSet{{1, 0}}, std::nan("")), std::invalid_argument);
}

TEST(RotateSet, RoundTripAndDistancePreservation) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  std::uniform_real_distribution<double> angle(-720, 720);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Point2> pts(40);
    for (auto& p : pts) p = {u(rng), u(rng)};
    const PointSet s(pts);
    const double theta = angle(rng);
    const PointSet r = rotate_set(s, theta);
    const PointSet back = rotate_set(r, -theta);
    ASSERT_EQ(back.size(), s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      EXPECT_NEAR(back[i].x, s[i].x, 1e-9);
      EXPECT_NEAR(back[i].y, s[i].y, 1e-9);
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        const double d0 = oracle::dist2(s[i], s[j]);
        const double d1 = oracle::dist2(r[i], r[j]);
        EXPECT_LE(std::abs(d1 - d0), 1e-9 * d0);
      }
    }
  }
}

TEST(PointInConvexPolygon, InsideAndBoundary) {
  EXPECT_EQ(point_in_convex_polygon({0.5, 0.5}, kUnitSquare), Containment::StrictlyInside);
  EXPECT_EQ(point_in_convex_polygon({0, 0.5}, kUnitSquare), Containment::BoundaryOrOutside);
  EXPECT_EQ(point_in_convex_polygon({2, 0.5}, kUnitSquare), Containment::BoundaryOrOutside);
  for (const Point2& v : kUnitSquare.vertices()) {
    EXPECT_EQ(point_in_convex_polygon(v, kUnitSquare), Containment::BoundaryOrOutside);
  }
}

TEST(PointInConvexPolygon, DegeneratePolygonContainsNothing) {
  const ConvexPolygon segment({{0, 0}, {1, 1}});
  EXPECT_EQ(point_in_convex_polygon({0.5, 0.5}, segment), Containment::BoundaryOrOutside);
  EXPECT_EQ(point_in_convex_polygon({0, 0}, ConvexPolygon{}), Containment::BoundaryOrOutside);
}

TEST(PointInConvexPolygon, MatchesHalfPlaneOracle) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1.2, 1.2);
  for (int poly_trial = 0; poly_trial < 20; ++poly_trial) {
    const auto cloud = oracle::sample(oracle::Distribution::Disk, 30, 1000 + poly_trial);
    const ConvexPolygon poly(oracle::gift_wrap(cloud));
    ASSERT_FALSE(poly.degenerate());
    for (const Point2& v : poly.vertices()) {
      EXPECT_EQ(point_in_convex_polygon(v, poly), Containment::BoundaryOrOutside);
    }
    for (int i = 0; i < 1000; ++i) {
      const Point2 p{u(rng), u(rng)};
      const bool expected = oracle::strictly_inside(p, poly.vertices());
      EXPECT_EQ(point_in_convex_polygon(p, poly) == Containment::StrictlyInside, expected);
    }
  }
}

TEST(ConvexPolygon, StrictConvexityCheck) {
  EXPECT_TRUE(is_strictly_convex_ccw(kUnitSquare.vertices()));
  const std::vector<Point2> cw{{0, 0}, {0, 1}, {1, 1}, {1, 0}};
  EXPECT_FALSE(is_strictly_convex_ccw(cw));
  const std::vector<Point2> collinear{{0, 0}, {1, 0}, {2, 0}, {1, 1}};
  EXPECT_FALSE(is_strictly_convex_ccw(collinear));
}

}  // namespace
}  // namespace hullfilter
