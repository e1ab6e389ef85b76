#include "ibi/shape_core.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

namespace ibi {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kDiskSlack = 1e-9;
constexpr double kAngleTolerance = 1e-10;

double wrap_angle(double a) {
  double w = std::fmod(a, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  // fmod can return exactly 2 pi after the shift for tiny negative inputs.
  return w >= kTwoPi ? 0.0 : w;
}

// Pads a one-dimensional configuration with a zero coordinate; pairwise
// distances are unchanged.
Matrix3Xp planar_or_higher(const Matrix3Xp& x) {
  if (x.rows() >= 2) return x;
  Matrix3Xp out = Matrix3Xp::Zero(2, 3);
  out.row(0) = x.row(0);
  return out;
}

double acos_clamped(double x) { return std::acos(std::clamp(x, -1.0, 1.0)); }

}  // namespace

Configuration::Configuration(Matrix3Xp landmarks) : x_(std::move(landmarks)) {
  if (x_.rows() == 0) {
    throw InvalidArgument("configuration needs dimension p >= 1");
  }
  if (!x_.allFinite()) {
    throw InvalidArgument("configuration has non-finite coordinates");
  }
}

Configuration Configuration::from_points(const Eigen::VectorXd& a,
                                         const Eigen::VectorXd& b,
                                         const Eigen::VectorXd& c) {
  if (a.size() != b.size() || a.size() != c.size()) {
    throw DimensionMismatch("landmarks must share one dimension");
  }
  Matrix3Xp x(a.size(), 3);
  x.col(0) = a;
  x.col(1) = b;
  x.col(2) = c;
  return Configuration(std::move(x));
}

bool Configuration::is_degenerate() const noexcept {
  const Eigen::VectorXd mean = x_.rowwise().mean();
  const double size = (x_.colwise() - mean).norm();
  const double magnitude = x_.cwiseAbs().maxCoeff();
  return size < 1e-12 * (1.0 + magnitude);
}

ShapePoint ShapePoint::from_polar(double r, double phi) {
  if (!(r >= 0.0) || r > 1.0 + kDiskSlack || !std::isfinite(phi)) {
    throw OutOfDisk("polar radius " + std::to_string(r) +
                    " outside the unit disk");
  }
  r = std::min(r, 1.0);
  if (r == 0.0) return ShapePoint(0.0, 0.0, 0.0, 0.0, true);
  const double a = wrap_angle(phi);
  return ShapePoint(r, a, r * std::cos(a), r * std::sin(a), false);
}

ShapePoint ShapePoint::from_rectangular(double u, double v) {
  const double r = std::hypot(u, v);
  if (!std::isfinite(r) || r > 1.0 + kDiskSlack) {
    throw OutOfDisk("point (" + std::to_string(u) + ", " + std::to_string(v) +
                    ") outside the unit disk");
  }
  if (r == 0.0) return ShapePoint(0.0, 0.0, 0.0, 0.0, true);
  return ShapePoint(std::min(r, 1.0), wrap_angle(std::atan2(v, u)), u, v,
                    false);
}

const Eigen::Matrix<double, 2, 3>& helmert() {
  static const Eigen::Matrix<double, 2, 3> delta = [] {
    Eigen::Matrix<double, 2, 3> d;
    const double s2 = 1.0 / std::sqrt(2.0);
    const double s6 = 1.0 / std::sqrt(6.0);
    d << s2, -s2, 0.0,  //
        s6, s6, -2.0 * s6;
    return d;
  }();
  return delta;
}

const Eigen::Matrix3d& pairwise_difference() {
  static const Eigen::Matrix3d t = [] {
    Eigen::Matrix3d m;
    m << 1, -1, 0,  //
        0, 1, -1,   //
        -1, 0, 1;
    return m;
  }();
  return t;
}

Configuration center(const Configuration& config) {
  const Eigen::VectorXd mean = config.matrix().rowwise().mean();
  return Configuration(config.matrix().colwise() - mean);
}

EdgeMatrix edge_matrix(const Configuration& config) {
  return EdgeMatrix{config.matrix() * pairwise_difference()};
}

MatrixP2 transformation_matrix(const Configuration& config) {
  const Matrix3Xp x = planar_or_higher(config.matrix());
  return (x * pairwise_difference()) * helmert().transpose();
}

ShapeDecomposition shape_decomposition(const Configuration& config) {
  if (config.is_degenerate()) throw DegenerateConfiguration();
  const MatrixP2 m = transformation_matrix(config);
  Eigen::JacobiSVD<MatrixP2> svd(m, Eigen::ComputeThinV);
  Eigen::Vector2d d = svd.singularValues();
  Eigen::Matrix2d v = svd.matrixV();
  // Fix V in SO(2) so that the half-angle is well defined.
  if (v.determinant() < 0.0) v.col(1) = -v.col(1);

  const double scale = d.norm();
  ShapeDecomposition out;
  out.d1 = d(0) / scale;
  out.d2 = d(1) / scale;
  out.vt = v.transpose();
  out.residual = Eigen::Vector2d(out.d1, out.d2).asDiagonal() * out.vt;
  return out;
}

ShapePoint shape_point(const Configuration& config) {
  const ShapeDecomposition dec = shape_decomposition(config);
  // sqrt(1 - 4 d1^2 d2^2 / (d1^2 + d2^2)^2) == (d1^2 - d2^2) / (d1^2 + d2^2),
  // and the right-hand side keeps full precision near the boundary.
  const double d1s = dec.d1 * dec.d1;
  const double d2s = dec.d2 * dec.d2;
  const double r = std::clamp((d1s - d2s) / (d1s + d2s), 0.0, 1.0);
  if (dec.d1 - dec.d2 < kAngleTolerance) {
    return ShapePoint(r, 0.0, r, 0.0, true);
  }
  const double phi = wrap_angle(2.0 * std::atan2(dec.vt(0, 1), dec.vt(0, 0)));
  return ShapePoint(r, phi, r * std::cos(phi), r * std::sin(phi), false);
}

SideLengths side_lengths(const Configuration& config) {
  if (config.is_degenerate()) throw DegenerateConfiguration();
  const auto& x = config.matrix();
  const double a = (x.col(1) - x.col(2)).squaredNorm();
  const double b = (x.col(0) - x.col(2)).squaredNorm();
  const double c = (x.col(0) - x.col(1)).squaredNorm();
  const double total = a + b + c;
  return SideLengths{a / total, b / total, c / total};
}

SideLengths sides_from_shape(const ShapePoint& sp) {
  const double u = sp.u();
  const double v = sp.v();
  if (u * u + v * v > 1.0 + kDiskSlack) {
    throw OutOfDisk("shape point outside the unit disk");
  }
  const double h = std::sqrt(3.0) / 2.0;
  return SideLengths{(1.0 - u) / 3.0, (1.0 + 0.5 * u + h * v) / 3.0,
                     (1.0 + 0.5 * u - h * v) / 3.0};
}

ShapePoint shape_from_sides(const SideLengths& sides) {
  const double u = 1.0 - 3.0 * sides.a2;
  const double v = std::sqrt(3.0) * (sides.b2 - sides.c2);
  return ShapePoint::from_rectangular(u, v);
}

PreShape preshape(const Configuration& config) {
  if (config.is_degenerate()) throw DegenerateConfiguration();
  Eigen::Matrix<double, 2, Eigen::Dynamic> hx =
      helmert() * config.matrix().transpose();
  hx /= hx.norm();
  return PreShape{std::move(hx)};
}

double riemannian_distance(const PreShape& z1, const PreShape& z2) {
  if (z1.z.cols() != z2.z.cols()) {
    throw DimensionMismatch("pre-shapes have different ambient dimensions");
  }
  const Eigen::MatrixXd inner = z1.z.transpose() * z2.z;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(inner);
  return acos_clamped(svd.singularValues().sum());
}

double riemannian_distance(const ShapePoint& s1, const ShapePoint& s2) {
  const double r1 = s1.r();
  const double r2 = s2.r();
  // r1 r2 cos(phi1 - phi2) == <(u1, v1), (u2, v2)>
  const double inner = s1.u() * s2.u() + s1.v() * s2.v();
  const double radial =
      std::sqrt(std::max(0.0, (1.0 - r1 * r1) * (1.0 - r2 * r2)));
  return 0.5 * acos_clamped(inner + radial);
}

ShapePoint midpoint_shape() { return ShapePoint::from_polar(1.0, kMidpointPhi); }

double distance_to_midpoint(const ShapePoint& s) {
  return 0.5 * acos_clamped(s.r() * std::cos(s.phi() - kMidpointPhi));
}

KendallSpherical kendall_spherical(const Configuration& config) {
  if (config.is_degenerate()) throw DegenerateConfiguration();
  const Configuration centered = center(config);
  Eigen::Matrix<double, 2, 3> planar;
  if (config.dim() == 1) {
    planar.setZero();
    planar.row(0) = centered.matrix().row(0);
  } else if (config.dim() == 2) {
    planar = centered.matrix();
  } else {
    // Coordinates within the plane spanned by the centered landmarks.
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(centered.matrix(),
                                          Eigen::ComputeThinU);
    planar = svd.matrixU().leftCols<2>().transpose() * centered.matrix();
  }

  // Helmertized landmarks as complex numbers.
  const Eigen::Matrix2d h = helmert() * planar.transpose();
  const std::complex<double> z1(h(0, 0), h(0, 1));
  const std::complex<double> z2(h(1, 0), h(1, 1));

  KendallSpherical out;
  if (std::abs(z1) == 0.0) {
    // A == B: the pole at infinity of the Kendall plane.
    out.theta = kPi / 2.0;
    out.psi = 0.0;
    return out;
  }
  const std::complex<double> w = z2 / z1;
  const double uk = w.real();
  // The hemisphere identifies reflections.
  const double vk = std::abs(w.imag());
  const double rk2 = uk * uk + vk * vk;
  const double l1 = -(1.0 - rk2) / (2.0 * (1.0 + rk2));
  const double l2 = uk / (1.0 + rk2);
  const double l3 = vk / (1.0 + rk2);
  out.theta = acos_clamped(2.0 * l3);
  out.psi = wrap_angle(std::atan2(l2, l1));
  return out;
}

}  // namespace ibi
