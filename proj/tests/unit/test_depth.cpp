#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "ibi/depth.hpp"
#include "ibi/errors.hpp"
#include "../support/oracles.hpp"

namespace {

using namespace ibi;

std::vector<Point2> diamond() {
  return {Point2(1, 0), Point2(-1, 0), Point2(0, 1), Point2(0, -1)};
}

TEST(TukeyDepth, SymmetricDiamondCenter) {
  const auto cloud = diamond();
  EXPECT_DOUBLE_EQ(tukey_depth(Point2(0, 0), cloud), 0.5);
  EXPECT_EQ(oracle::brute_force_depth(Point2(0, 0), cloud), 2u);
}

TEST(TukeyDepth, FarPointHasZeroDepth) {
  EXPECT_EQ(tukey_depth_count(Point2(10, 10), diamond()), 0u);
}

TEST(TukeyDepth, CloudPointsHaveDepthAtLeastOne) {
  std::mt19937_64 gen(2);
  std::normal_distribution<double> z;
  std::vector<Point2> cloud(40);
  for (auto& p : cloud) p = Point2(z(gen), z(gen));
  for (const auto& p : cloud) EXPECT_GE(tukey_depth_count(p, cloud), 1u);
}

TEST(TukeyDepth, EmptyCloudThrows) {
  EXPECT_THROW(tukey_depth(Point2(0, 0), std::vector<Point2>{}),
               InsufficientData);
}

TEST(TukeyDepth, CollinearAndDuplicatePoints) {
  const std::vector<Point2> line{Point2(0, 0), Point2(1, 0), Point2(2, 0),
                                 Point2(3, 0), Point2(2, 0)};
  for (const auto& q : line) {
    EXPECT_EQ(tukey_depth_count(q, line), oracle::brute_force_depth(q, line));
  }
  EXPECT_EQ(tukey_depth_count(Point2(2, 0), line), 3u);
  EXPECT_EQ(tukey_depth_count(Point2(1, 1), line), 0u);
}

TEST(TukeyDepth, IntegerGridAgreesWithBruteForce) {
  std::mt19937_64 gen(4);
  std::uniform_int_distribution<int> coord(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Point2> cloud(25);
    for (auto& p : cloud) p = Point2(coord(gen), coord(gen));
    const Point2 q(coord(gen), coord(gen));
    EXPECT_EQ(tukey_depth_count(q, cloud), oracle::brute_force_depth(q, cloud));
  }
}

TEST(TukeyDepth, ThreadCountDoesNotChangeDepths) {
  std::mt19937_64 gen(6);
  std::normal_distribution<double> z;
  std::vector<Point2> cloud(300);
  for (auto& p : cloud) p = Point2(z(gen), z(gen));
  EXPECT_EQ(tukey_depth_counts(cloud, 1), tukey_depth_counts(cloud, 4));
}

TEST(ConvexHull, SquareWithInteriorAndCollinearPoints) {
  const std::vector<Point2> pts{Point2(0, 0), Point2(1, 0), Point2(2, 0),
                                Point2(2, 2), Point2(0, 2), Point2(1, 1),
                                Point2(0, 1)};
  const auto hull = convex_hull(pts);
  ASSERT_EQ(hull.size(), 4u);
  EXPECT_DOUBLE_EQ(polygon_area(hull), 4.0);
  for (const auto& p : pts) EXPECT_TRUE(hull_contains(hull, p));
  EXPECT_FALSE(hull_contains(hull, Point2(2.1, 1)));
}

TEST(ConvexHull, DegenerateInputs) {
  EXPECT_TRUE(convex_hull(std::vector<Point2>{}).empty());
  const std::vector<Point2> one{Point2(1, 2)};
  EXPECT_EQ(convex_hull(one).size(), 1u);
  EXPECT_TRUE(hull_contains(convex_hull(one), Point2(1, 2)));
  const std::vector<Point2> seg{Point2(0, 0), Point2(1, 1), Point2(2, 2)};
  const auto hull = convex_hull(seg);
  EXPECT_EQ(hull.size(), 2u);
  EXPECT_EQ(polygon_area(hull), 0.0);
  EXPECT_TRUE(hull_contains(hull, Point2(1, 1)));
  EXPECT_FALSE(hull_contains(hull, Point2(1, 1.1)));
}

}  // namespace
