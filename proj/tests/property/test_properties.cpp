// Randomized property suites, 1000 cases each, with fixed seeds.

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "ibi/depth.hpp"
#include "ibi/ibi_metrics.hpp"
#include "../support/oracles.hpp"

namespace {

using namespace ibi;
using std::numbers::pi;

constexpr int kCases = 1000;

ShapePoint random_disk_point(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> r(0.0, 1.0), a(0.0, 2 * pi);
  return ShapePoint::from_polar(std::sqrt(r(gen)), a(gen));
}

TEST(Property, SimilarityInvariance) {
  std::mt19937_64 gen(101);
  for (int i = 0; i < kCases; ++i) {
    const int p = 2 + i % 3;
    const auto x = oracle::random_configuration(gen, p);
    const auto y = oracle::random_similarity(x, gen);
    const auto sx = shape_point(x), sy = shape_point(y);
    ASSERT_NEAR(sx.r(), sy.r(), 1e-9) << "case " << i;
    ASSERT_NEAR(sx.u(), sy.u(), 1e-9) << "case " << i;
    ASSERT_NEAR(sx.v(), sy.v(), 1e-9) << "case " << i;
  }
}

TEST(Property, TauFormsAgree) {
  std::mt19937_64 gen(102);
  for (int i = 0; i < kCases; ++i) {
    const auto x = oracle::random_configuration(gen, 2 + i % 4);
    const auto s = shape_point(x);
    const double polar = s.r() * std::cos(pi / 3 - s.phi());
    const double rect = 0.5 * s.u() + std::sqrt(3.0) / 2 * s.v();
    const double sides = 3 * oracle::direct_sides(x)[1] - 1;
    ASSERT_NEAR(polar, rect, 1e-12) << "case " << i;
    ASSERT_NEAR(rect, sides, 1e-9) << "case " << i;
    ASSERT_NEAR(tau_ibi(s), rect, 1e-12) << "case " << i;
  }
}

TEST(Property, SidesCoordinatesRoundTrip) {
  std::mt19937_64 gen(103);
  for (int i = 0; i < kCases; ++i) {
    const auto x = oracle::random_configuration(gen, 2 + i % 3);
    const auto direct = oracle::direct_sides(x);
    const auto via_shape = sides_from_shape(shape_point(x));
    ASSERT_NEAR(via_shape.a2, direct[0], 1e-9) << "case " << i;
    ASSERT_NEAR(via_shape.b2, direct[1], 1e-9) << "case " << i;
    ASSERT_NEAR(via_shape.c2, direct[2], 1e-9) << "case " << i;
    const auto s = side_lengths(x);
    ASSERT_NEAR(s.a2 + s.b2 + s.c2, 1.0, 1e-12);
    const auto back = shape_from_sides(s);
    ASSERT_NEAR(back.u(), shape_point(x).u(), 1e-9) << "case " << i;
    ASSERT_NEAR(back.v(), shape_point(x).v(), 1e-9) << "case " << i;
  }
}

TEST(Property, TauIsCosineOfTwiceMidpointDistance) {
  std::mt19937_64 gen(104);
  const auto mid = midpoint_shape();
  for (int i = 0; i < kCases; ++i) {
    const auto s = random_disk_point(gen);
    const double rho = distance_to_midpoint(s);
    ASSERT_NEAR(tau_ibi(s), std::cos(2 * rho), 1e-12) << "case " << i;
    ASSERT_NEAR(rho, riemannian_distance(s, mid), 1e-12) << "case " << i;
  }
}

TEST(Property, DiskDistanceMatchesPreShapeDistance) {
  std::mt19937_64 gen(105);
  int checked = 0;
  while (checked < kCases) {
    const auto x1 = oracle::random_configuration(gen, 2);
    const auto x2 = oracle::random_configuration(gen, 2);
    const auto z1 = preshape(x1), z2 = preshape(x2);
    if ((z1.z.transpose() * z2.z).determinant() < 0) continue;
    const double a = riemannian_distance(z1, z2);
    const double b = riemannian_distance(shape_point(x1), shape_point(x2));
    ASSERT_NEAR(a, b, 1e-9) << "case " << checked;
    ++checked;
  }
}

TEST(Property, DiskDistanceIsAMetric) {
  std::mt19937_64 gen(106);
  for (int i = 0; i < kCases; ++i) {
    const auto a = random_disk_point(gen);
    const auto b = random_disk_point(gen);
    const auto c = random_disk_point(gen);
    const double ab = riemannian_distance(a, b);
    ASSERT_GE(ab, 0.0);
    ASSERT_LE(ab, pi / 2 + 1e-15);
    ASSERT_EQ(ab, riemannian_distance(b, a));
    ASSERT_NEAR(riemannian_distance(a, a), 0.0, 1e-7);
    ASSERT_LE(ab, riemannian_distance(a, c) + riemannian_distance(c, b) + 1e-9)
        << "case " << i;
  }
}

TEST(Property, KendallCoordinatesMatchDisk) {
  std::mt19937_64 gen(107);
  for (int i = 0; i < kCases; ++i) {
    const auto x = oracle::random_configuration(gen, 2 + i % 3);
    const auto k = kendall_spherical(x);
    const auto s = shape_point(x);
    ASSERT_NEAR(std::sin(k.theta), s.r(), 1e-9) << "case " << i;
    ASSERT_NEAR(oracle::angle_gap(2 * pi / 3 - k.psi, s.phi()), 0.0, 1e-9)
        << "case " << i;
  }
}

TEST(Property, DiskContainmentAndBoundaryIffCollinear) {
  std::mt19937_64 gen(108);
  std::uniform_real_distribution<double> t(-3, 3);
  for (int i = 0; i < kCases; ++i) {
    const auto x = oracle::random_configuration(gen, 2);
    const auto s = shape_point(x);
    ASSERT_LE(s.u() * s.u() + s.v() * s.v(), 1 + 1e-12);
    // Collinear: B = A + t (C - A).
    Matrix3Xp m = x.matrix();
    m.col(1) = m.col(0) + t(gen) * (m.col(2) - m.col(0));
    if (Configuration(m).is_degenerate()) continue;
    ASSERT_NEAR(shape_point(Configuration(m)).r(), 1.0, 1e-9) << "case " << i;
  }
}

TEST(Property, CosineIndexOnDegenerateTriangles) {
  std::mt19937_64 gen(109);
  std::uniform_real_distribution<double> inside(0.05, 0.95), outside(1.05, 3.0);
  for (int i = 0; i < kCases; ++i) {
    const auto x = oracle::random_configuration(gen, 2);
    Matrix3Xp m = x.matrix();
    double t = inside(gen);  // B between A and C
    if (i % 3 == 1) t = outside(gen);         // beyond C
    if (i % 3 == 2) t = 1.0 - outside(gen);   // beyond A
    m.col(1) = m.col(0) + t * (m.col(2) - m.col(0));
    const auto sides = side_lengths(Configuration(m));
    const double want = (t > 0 && t < 1) ? 1.0 : -1.0;
    ASSERT_NEAR(cosine_ibi(sides), want, 1e-9) << "case " << i << " t=" << t;
  }
}

TEST(Property, ContinuityOfShapeCoordinates) {
  std::mt19937_64 gen(110);
  std::normal_distribution<double> z;
  const double eps = 1e-6;
  int checked = 0;
  while (checked < kCases) {
    const auto x = oracle::random_configuration(gen, 2);
    const auto s = shape_point(x);
    if (s.r() < 0.1) continue;
    Matrix3Xp m = x.matrix();
    m(static_cast<int>(gen() % 2), static_cast<int>(gen() % 3)) += eps * z(gen);
    const auto t = shape_point(Configuration(m));
    const double scale = x.matrix().norm();
    ASSERT_LT(std::hypot(s.u() - t.u(), s.v() - t.v()), 100 * eps / scale)
        << "case " << checked;
    ++checked;
  }
}

TEST(Property, TukeyDepthMatchesBruteForce) {
  std::mt19937_64 gen(111);
  std::normal_distribution<double> z;
  std::uniform_int_distribution<int> size(1, 50);
  for (int i = 0; i < kCases; ++i) {
    std::vector<Point2> cloud(static_cast<std::size_t>(size(gen)));
    for (auto& p : cloud) p = Point2(z(gen), z(gen));
    const Point2 q = (i % 3 == 0) ? cloud[gen() % cloud.size()] : Point2(z(gen), z(gen));
    ASSERT_EQ(tukey_depth_count(q, cloud), oracle::brute_force_depth(q, cloud))
        << "case " << i;
  }
}

}  // namespace
