#include "ibi/sampling.hpp"

#include <cmath>

namespace ibi {

void GroupSpec::validate() const {
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) {
    throw InvalidArgument("sigma2 must be positive and finite");
  }
  const auto p = means[0].size();
  if (p < 1) throw InvalidArgument("group means need dimension >= 1");
  for (int g = 0; g < 3; ++g) {
    if (means[g].size() != p) {
      throw DimensionMismatch("group means have different dimensions");
    }
    if (n[g] < 2) throw InvalidArgument("each group needs n >= 2");
  }
}

Configuration sample_null_configuration(int p, SeededRng& rng) {
  if (p < 2) throw InvalidArgument("null configurations need p >= 2");
  Matrix3Xp x(p, 3);
  for (int j = 0; j < 3; ++j) {
    for (int i = 0; i < p; ++i) x(i, j) = rng.normal();
  }
  return Configuration(std::move(x));
}

Configuration mean_configuration_from_shape(double r, double phi, int p) {
  if (p < 2) throw InvalidArgument("mean configurations need p >= 2");
  const SideLengths s = sides_from_shape(ShapePoint::from_polar(r, phi));
  const double a = std::sqrt(std::max(s.a2, 0.0));
  const double b = std::sqrt(std::max(s.b2, 0.0));
  const double c = std::sqrt(std::max(s.c2, 0.0));

  // A at the origin, C on the first axis, B from the law of cosines. b is
  // never zero because the side lengths sum to one and b^2 >= 0 with
  // equality only when A == C, handled by placing C at A.
  Matrix3Xp x = Matrix3Xp::Zero(p, 3);
  if (b > 0.0) {
    const double bx = (b * b + c * c - a * a) / (2.0 * b);
    const double by = std::sqrt(std::max(c * c - bx * bx, 0.0));
    x(0, 1) = bx;
    x(1, 1) = by;
    x(0, 2) = b;
  } else {
    x(0, 1) = c;
  }
  const Eigen::VectorXd mean = x.rowwise().mean();
  x.colwise() -= mean;
  x /= x.norm();
  return Configuration(std::move(x));
}

GroupedDataset sample_grouped_dataset(const GroupSpec& spec, SeededRng& rng) {
  spec.validate();
  const double sd = std::sqrt(spec.sigma2);
  const auto p = spec.means[0].size();
  std::array<Eigen::MatrixXd, 3> groups;
  for (int g = 0; g < 3; ++g) {
    const auto n = static_cast<Eigen::Index>(spec.n[g]);
    groups[g].resize(n, p);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < p; ++j) {
        groups[g](i, j) = spec.means[g](j) + sd * rng.normal();
      }
    }
  }
  return GroupedDataset(std::move(groups));
}

}  // namespace ibi
