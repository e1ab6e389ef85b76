#pragma once

// Triangle shape space: configurations of three landmarks, their edge,
// transformation and pre-shape matrices, unit-disk shape coordinates and
// Riemannian shape distances.
//
// Orientation: a configuration is stored as a p x 3 matrix whose columns are
// the landmarks A, B, C. The edge matrix is E = X T with T the pairwise
// difference matrix, so its columns are (A - C, B - A, C - B), and the
// transformation matrix is M = E * Delta^T (p x 2).

#include <array>
#include <cstddef>
#include <numbers>

#include <Eigen/Dense>

#include "ibi/errors.hpp"

namespace ibi {

using Matrix3Xp = Eigen::Matrix<double, Eigen::Dynamic, 3>;  // p x 3
using MatrixP2 = Eigen::Matrix<double, Eigen::Dynamic, 2>;   // p x 2

enum class Landmark : int { A = 0, B = 1, C = 2 };

/// Three landmarks in R^p with finite coordinates.
class Configuration {
 public:
  /// Columns are landmarks A, B, C. Throws InvalidArgument on p == 0 or
  /// non-finite entries.
  explicit Configuration(Matrix3Xp landmarks);

  static Configuration from_points(const Eigen::VectorXd& a,
                                   const Eigen::VectorXd& b,
                                   const Eigen::VectorXd& c);

  std::size_t dim() const noexcept {
    return static_cast<std::size_t>(x_.rows());
  }
  const Matrix3Xp& matrix() const noexcept { return x_; }
  auto landmark(Landmark l) const { return x_.col(static_cast<int>(l)); }
  auto landmark(int i) const { return x_.col(i); }

  /// True when the centered configuration has (numerically) zero size.
  bool is_degenerate() const noexcept;

 private:
  Matrix3Xp x_;
};

/// p x 3 edge vectors of a closed triangle; columns sum to zero.
struct EdgeMatrix {
  Matrix3Xp e;
};

/// Helmertized, unit-norm configuration: a 2 x p matrix.
struct PreShape {
  Eigen::Matrix<double, 2, Eigen::Dynamic> z;
};

/// A point of the closed unit disk representing a triangle's shape.
class ShapePoint {
 public:
  ShapePoint() = default;

  /// Throws OutOfDisk if r is outside [0, 1 + 1e-9]. r is clamped to 1.
  static ShapePoint from_polar(double r, double phi);
  /// Throws OutOfDisk if u^2 + v^2 > 1 + 1e-9.
  static ShapePoint from_rectangular(double u, double v);

  double r() const noexcept { return r_; }
  /// Angle in [0, 2 pi).
  double phi() const noexcept { return phi_; }
  double u() const noexcept { return u_; }
  double v() const noexcept { return v_; }

  /// Set when the angle is not numerically meaningful (equilateral or
  /// near-equal singular values). phi() is then reported as 0.
  bool angle_degenerate() const noexcept { return angle_degenerate_; }

 private:
  ShapePoint(double r, double phi, double u, double v, bool angle_degenerate)
      : r_(r), phi_(phi), u_(u), v_(v), angle_degenerate_(angle_degenerate) {}
  friend ShapePoint shape_point(const Configuration&);

  double r_ = 0.0;
  double phi_ = 0.0;
  double u_ = 0.0;
  double v_ = 0.0;
  bool angle_degenerate_ = true;
};

/// Squared side lengths normalized to sum to one. a is the side opposite A
/// (|B - C|), b opposite B (|A - C|), c opposite C (|A - B|).
struct SideLengths {
  double a2 = 1.0 / 3.0;
  double b2 = 1.0 / 3.0;
  double c2 = 1.0 / 3.0;
};

/// Kendall's spherical coordinates on the hemisphere of radius 1/2.
struct KendallSpherical {
  double theta = 0.0;  // [0, pi/2]
  double psi = 0.0;    // [0, 2 pi)
};

/// Singular-value view of the transformation matrix.
struct ShapeDecomposition {
  double d1 = 0.0;  // normalized so that d1^2 + d2^2 == 1, d1 >= d2 >= 0
  double d2 = 0.0;
  Eigen::Matrix2d vt;        // V^T in SO(2): [[cos h, sin h], [-sin h, cos h]]
  Eigen::Matrix2d residual;  // diag(d1, d2) * V^T, rotation and scale removed
};

/// The 2 x 3 Helmert submatrix; its rows are orthonormal.
const Eigen::Matrix<double, 2, 3>& helmert();
/// The pairwise difference matrix T.
const Eigen::Matrix3d& pairwise_difference();

Configuration center(const Configuration& config);
EdgeMatrix edge_matrix(const Configuration& config);
/// M = E * Delta^T; p x 2. One-dimensional inputs are embedded into the
/// plane by appending a zero coordinate.
MatrixP2 transformation_matrix(const Configuration& config);
ShapeDecomposition shape_decomposition(const Configuration& config);

ShapePoint shape_point(const Configuration& config);
SideLengths side_lengths(const Configuration& config);
/// Linear map from rectangular disk coordinates to side lengths.
SideLengths sides_from_shape(const ShapePoint& sp);
/// Inverse of sides_from_shape.
ShapePoint shape_from_sides(const SideLengths& sides);

PreShape preshape(const Configuration& config);

/// arccos of the sum of singular values of Z1^T Z2; in [0, pi/2].
double riemannian_distance(const PreShape& z1, const PreShape& z2);
/// Closed-form distance between two disk points; in [0, pi/2].
double riemannian_distance(const ShapePoint& s1, const ShapePoint& s2);

/// Disk location of the B-midpoint triangle (B halfway between A and C).
inline constexpr double kMidpointPhi = std::numbers::pi / 3.0;
ShapePoint midpoint_shape();

/// Distance from s to the B-midpoint triangle.
double distance_to_midpoint(const ShapePoint& s);

KendallSpherical kendall_spherical(const Configuration& config);

}  // namespace ibi
