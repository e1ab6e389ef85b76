#include "ibi/ibi_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/special_functions/beta.hpp>

namespace ibi {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_dimension(int p) {
  if (p < 2) throw DomainError("dimension p must be >= 2");
}

// base^exponent with the boundary conventions used throughout: base == 0
// gives +inf for negative exponents and 1 for a zero exponent.
double boundary_pow(double base, double exponent) {
  if (base <= 0.0) {
    if (exponent < 0.0) return kInf;
    return exponent == 0.0 ? 1.0 : 0.0;
  }
  return std::pow(base, exponent);
}

}  // namespace

double cosine_ibi(const SideLengths& sides) {
  if (sides.a2 <= 0.0 || sides.c2 <= 0.0) throw UndefinedCosineIbi();
  const double g =
      (2.0 * sides.b2 - 1.0) / (2.0 * std::sqrt(sides.a2 * sides.c2));
  return std::clamp(g, -1.0, 1.0);
}

std::optional<double> try_cosine_ibi(const SideLengths& sides) noexcept {
  if (sides.a2 <= 0.0 || sides.c2 <= 0.0) return std::nullopt;
  return cosine_ibi(sides);
}

double tau_ibi(const ShapePoint& sp) noexcept {
  return std::clamp(0.5 * sp.u() + 0.5 * std::sqrt(3.0) * sp.v(), -1.0, 1.0);
}

double tau_ibi(const SideLengths& sides) noexcept {
  return std::clamp(3.0 * sides.b2 - 1.0, -1.0, 1.0);
}

IbiPair ibi_pair(const Configuration& config) {
  const SideLengths s = side_lengths(config);
  return IbiPair{tau_ibi(s), try_cosine_ibi(s)};
}

double null_density_polar(double r, int p) {
  return null_density_radius(r, p) / (2.0 * std::numbers::pi);
}

double null_density_radius(double r, int p) {
  require_dimension(p);
  if (!(r >= 0.0 && r <= 1.0)) {
    throw DomainError("radius " + std::to_string(r) + " outside [0, 1]");
  }
  if (r == 0.0) return 0.0;
  return (p - 1) * r * boundary_pow(1.0 - r * r, 0.5 * (p - 3));
}

double null_cdf_radius(double r, int p) {
  require_dimension(p);
  if (!(r >= 0.0 && r <= 1.0)) {
    throw DomainError("radius " + std::to_string(r) + " outside [0, 1]");
  }
  return 1.0 - std::pow(1.0 - r * r, 0.5 * (p - 1));
}

double null_density_uv(double u, double v, int p) {
  require_dimension(p);
  const double rr = u * u + v * v;
  if (!(rr <= 1.0)) throw DomainError("point outside the closed unit disk");
  return (p - 1) / (2.0 * std::numbers::pi) *
         boundary_pow(1.0 - rr, 0.5 * (p - 3));
}

double null_density_sides(const SideLengths& sides, int p) {
  require_dimension(p);
  const double q = -0.25 + sides.a2 * sides.b2 + sides.a2 * sides.c2 +
                   sides.b2 * sides.c2;
  if (q < -1e-12) {
    throw DomainError("side lengths do not form a triangle");
  }
  // (a^2, b^2) = affine image of (u, v) with |Jacobian| = sqrt(3) / 18, and
  // 1 - u^2 - v^2 = 12 q.
  const double jacobian = 6.0 * std::sqrt(3.0);
  return jacobian * (p - 1) / (2.0 * std::numbers::pi) *
         boundary_pow(12.0 * std::max(q, 0.0), 0.5 * (p - 3));
}

double tau_null_density(double t, int p) {
  require_dimension(p);
  if (!(t >= -1.0 && t <= 1.0)) {
    throw DomainError("tau " + std::to_string(t) + " outside [-1, 1]");
  }
  const double log_norm = std::lgamma(0.5 * (p + 1)) -
                          0.5 * std::log(std::numbers::pi) -
                          std::lgamma(0.5 * p);
  return std::exp(log_norm) * boundary_pow(1.0 - t * t, 0.5 * (p - 2));
}

double tau_null_cdf(double t, int p) {
  require_dimension(p);
  if (!(t >= -1.0 && t <= 1.0)) {
    throw DomainError("tau " + std::to_string(t) + " outside [-1, 1]");
  }
  const double x = std::clamp(0.5 * (t + 1.0), 0.0, 1.0);
  return boost::math::ibeta(0.5 * p, 0.5 * p, x);
}

double offset_normal_density(double rho, double kappa) {
  if (!(rho >= 0.0 && rho <= std::numbers::pi / 2.0)) {
    throw DomainError("rho outside [0, pi/2]");
  }
  if (!(kappa >= 0.0) || !std::isfinite(kappa)) {
    throw DomainError("kappa must be finite and >= 0");
  }
  const double c = std::cos(2.0 * rho);
  return (1.0 + kappa * (1.0 + c)) * std::exp(-kappa * (1.0 - c));
}

double offset_normal_kappa(const Configuration& mean, double sigma2) {
  if (!(sigma2 > 0.0)) throw DomainError("sigma2 must be > 0");
  const double size = center(mean).matrix().norm();
  return size * size / (4.0 * sigma2);
}

}  // namespace ibi
