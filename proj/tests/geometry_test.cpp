#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "test_support.hpp"
#include "wsod/geometry.hpp"

using namespace wsod;
using wsod::testing::square;

namespace {

PolygonSite polygon(Ring exterior, std::vector<Ring> holes = {}) {
  return {SiteId("p"), std::move(exterior), std::move(holes), {}};
}

// Fan-triangulation area, written independently of the shoelace sum.
double fan_area(const Ring &ring) {
  double a = 0.0;
  for (std::size_t i = 1; i + 1 < ring.size(); ++i) {
    const Point2 u{ring[i].x - ring[0].x, ring[i].y - ring[0].y};
    const Point2 v{ring[i + 1].x - ring[0].x, ring[i + 1].y - ring[0].y};
    a += 0.5 * (u.x * v.y - u.y * v.x);
  }
  return std::abs(a);
}

} // namespace

TEST(PolygonArea, UnitSquare) { EXPECT_DOUBLE_EQ(polygon_area(square("s", 0, 0)), 1.0); }

TEST(PolygonArea, RightTriangle) {
  // (2 * 2) / 2
  EXPECT_DOUBLE_EQ(polygon_area(polygon({{0, 0}, {2, 0}, {0, 2}})), 2.0);
}

TEST(PolygonArea, SquareWithCenteredHole) {
  auto p = polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{{0.25, 0.25}, {0.75, 0.25}, {0.75, 0.75}, {0.25, 0.75}}});
  EXPECT_DOUBLE_EQ(polygon_area(p), 0.75);
}

TEST(PolygonArea, OrientationDoesNotMatter) {
  EXPECT_DOUBLE_EQ(polygon_area(polygon({{0, 1}, {1, 1}, {1, 0}, {0, 0}})), 1.0);
}

TEST(PolygonArea, DegenerateRingsThrow) {
  EXPECT_THROW(polygon_area(polygon({{0, 0}, {1, 1}, {2, 2}})), GeometryError);
  EXPECT_THROW(polygon_area(polygon({{0, 0}, {1, 0}})), GeometryError);
  EXPECT_THROW(polygon_area(polygon({{0, 0}, {1, 0}, {1, 0}, {0, 0}})), GeometryError);
  // bow tie
  EXPECT_THROW(polygon_area(polygon({{0, 0}, {1, 1}, {1, 0}, {0, 1}})), GeometryError);
}

TEST(PolygonCentroid, UnitSquare) {
  const auto c = polygon_centroid(square("s", 0, 0));
  EXPECT_DOUBLE_EQ(c.x, 0.5);
  EXPECT_DOUBLE_EQ(c.y, 0.5);
}

TEST(PolygonCentroid, RightTriangle) {
  // vertex mean of a triangle: ((0+2+0)/3, (0+0+2)/3)
  const auto c = polygon_centroid(polygon({{0, 0}, {2, 0}, {0, 2}}));
  EXPECT_NEAR(c.x, 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(c.y, 2.0 / 3.0, 1e-15);
}

TEST(PolygonCentroid, TranslatedSquare) {
  const auto c = polygon_centroid(square("s", 10, 10));
  EXPECT_DOUBLE_EQ(c.x, 10.5);
  EXPECT_DOUBLE_EQ(c.y, 10.5);
}

TEST(PolygonCentroid, OffCenterHoleShiftsCentroid) {
  // 2x2 square minus unit square in its lower-left quadrant: an L of area 3,
  // centroid (4*1 - 1*0.5) / 3 in each axis.
  auto p = polygon({{0, 0}, {2, 0}, {2, 2}, {0, 2}}, {{{0, 0}, {1, 0}, {1, 1}, {0, 1}}});
  // hole touching the boundary is still a ring of positive area
  const auto c = polygon_centroid(p);
  EXPECT_NEAR(c.x, 3.5 / 3.0, 1e-12);
  EXPECT_NEAR(c.y, 3.5 / 3.0, 1e-12);
}

TEST(PolygonCentroid, VertexDensityDoesNotMatter) {
  // extra collinear vertices along one side leave the area centroid alone
  const auto c = polygon_centroid(polygon({{0, 0}, {0.25, 0}, {0.5, 0}, {0.75, 0}, {1, 0}, {1, 1}, {0, 1}}));
  EXPECT_NEAR(c.x, 0.5, 1e-15);
  EXPECT_NEAR(c.y, 0.5, 1e-15);
}

TEST(SiteDistance, PointsThreeFourFive) {
  PointSite a{"a", {0, 0}, {}}, b{"b", {3, 4}, {}};
  EXPECT_DOUBLE_EQ(site_distance(a, b), 5.0);
  EXPECT_DOUBLE_EQ(site_distance(b, a), 5.0);
}

TEST(SiteDistance, PolygonsUseCentroids) {
  EXPECT_DOUBLE_EQ(site_distance(square("a", 0, 0), square("b", 3, 0)), 3.0);
}

TEST(SiteDistance, CoincidentLocationsThrow) {
  PointSite a{"a", {1, 2}, {}}, b{"b", {1, 2}, {}};
  EXPECT_THROW(site_distance(a, b), DegenerateDistanceError);
  EXPECT_THROW(site_distance(square("a", 0, 0), square("b", 0, 0)), DegenerateDistanceError);
}

TEST(Geometry, NormalizeRingDropsClosingVertex) {
  EXPECT_EQ(geometry::normalize_ring({{0, 0}, {1, 0}, {1, 1}, {0, 0}}).size(), 3u);
  EXPECT_EQ(geometry::normalize_ring({{0, 0}, {1, 0}, {1, 1}}).size(), 3u);
}

TEST(Geometry, CollinearOverlap) {
  EXPECT_DOUBLE_EQ(geometry::collinear_overlap({0, 0}, {2, 0}, {1, 0}, {3, 0}), 1.0);
  EXPECT_DOUBLE_EQ(geometry::collinear_overlap({0, 0}, {2, 0}, {3, 0}, {2, 0}), 0.0);
  EXPECT_DOUBLE_EQ(geometry::collinear_overlap({0, 0}, {2, 0}, {1, 0.5}, {3, 0.5}), 0.0);
  EXPECT_DOUBLE_EQ(geometry::collinear_overlap({1, 0}, {1, 1}, {1, 1}, {1, 0}), 1.0);
}

class RandomPolygonTest : public ::testing::Test {
protected:
  std::mt19937 rng{wsod::testing::kSeed};
  static constexpr int kIterations = 200;
};

TEST_F(RandomPolygonTest, AreaMatchesFanOracle) {
  for (int it = 0; it < kIterations; ++it) {
    const auto ring = wsod::testing::random_star(rng, {1.0, -2.0}, 3 + it % 12);
    EXPECT_NEAR(polygon_area(polygon(ring)), fan_area(ring), 1e-12 * fan_area(ring) + 1e-14);
  }
}

TEST_F(RandomPolygonTest, AreaIsTranslationAndRotationInvariantAndScalesQuadratically) {
  std::uniform_real_distribution<double> shift(-1e3, 1e3), angle(0.0, 2 * M_PI), scale(0.1, 10.0);
  for (int it = 0; it < kIterations; ++it) {
    const auto ring = wsod::testing::random_star(rng, {0.0, 0.0}, 3 + it % 12);
    const double area = polygon_area(polygon(ring));
    const double dx = shift(rng), dy = shift(rng), th = angle(rng), s = scale(rng);
    Ring moved, turned, scaled;
    for (const auto &p : ring) {
      moved.push_back({p.x + dx, p.y + dy});
      turned.push_back(wsod::testing::rotate(p, th));
      scaled.push_back({s * p.x, s * p.y});
    }
    EXPECT_NEAR(polygon_area(polygon(moved)), area, 1e-9 * area);
    EXPECT_NEAR(polygon_area(polygon(turned)), area, 1e-9 * area);
    EXPECT_NEAR(polygon_area(polygon(scaled)), s * s * area, 1e-9 * s * s * area);
  }
}

TEST_F(RandomPolygonTest, CentroidIsTranslationEquivariant) {
  std::uniform_real_distribution<double> shift(-1e3, 1e3);
  for (int it = 0; it < kIterations; ++it) {
    const auto ring = wsod::testing::random_star(rng, {0.0, 0.0}, 3 + it % 12);
    const auto c = polygon_centroid(polygon(ring));
    const double dx = shift(rng), dy = shift(rng);
    Ring moved;
    for (const auto &p : ring)
      moved.push_back({p.x + dx, p.y + dy});
    const auto cm = polygon_centroid(polygon(moved));
    EXPECT_NEAR(cm.x, c.x + dx, 1e-9);
    EXPECT_NEAR(cm.y, c.y + dy, 1e-9);
  }
}

TEST_F(RandomPolygonTest, DistanceIsSymmetricAndPositive) {
  std::uniform_real_distribution<double> coord(-50.0, 50.0);
  for (int it = 0; it < kIterations; ++it) {
    PointSite a{"a", {coord(rng), coord(rng)}, {}}, b{"b", {coord(rng), coord(rng)}, {}};
    EXPECT_GT(site_distance(a, b), 0.0);
    EXPECT_EQ(site_distance(a, b), site_distance(b, a));
  }
}
