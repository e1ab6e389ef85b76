#pragma once

// In-betweenness indices and closed-form shape densities for triangles whose
// landmarks are iid isotropic normal.

#include <optional>

#include "ibi/shape_core.hpp"

namespace ibi {

/// Both indices lie in [-1, 1]. gamma is empty where it is undefined
/// (side a or c of zero length).
struct IbiPair {
  double tau = 0.0;
  std::optional<double> gamma;
};

/// gamma = cos(pi - B) = (2 b^2 - 1) / (2 a c). Throws UndefinedCosineIbi
/// when a == 0 or c == 0.
double cosine_ibi(const SideLengths& sides);
/// Same as cosine_ibi but returns an empty optional at the discontinuities.
std::optional<double> try_cosine_ibi(const SideLengths& sides) noexcept;

/// tau = u/2 + sqrt(3)/2 v = r cos(phi - pi/3) = 3 b^2 - 1.
double tau_ibi(const ShapePoint& sp) noexcept;
double tau_ibi(const SideLengths& sides) noexcept;

IbiPair ibi_pair(const Configuration& config);

// Null densities. p is the ambient dimension of the landmarks (p >= 2).
// Where a density diverges on the disk boundary (p == 2) it returns +inf.

/// Joint density of (r, phi) on [0, 1] x [0, 2 pi).
double null_density_polar(double r, int p);
/// Marginal density of r: (p - 1) r (1 - r^2)^((p - 3) / 2).
double null_density_radius(double r, int p);
/// P(R <= r) = 1 - (1 - r^2)^((p - 1) / 2).
double null_cdf_radius(double r, int p);
/// Density of (u, v) on the unit disk.
double null_density_uv(double u, double v, int p);

/// Density of the squared side lengths, expressed through
/// q = -1/4 + a^2 b^2 + a^2 c^2 + b^2 c^2 = (1 - r^2) / 12 and normalized
/// with respect to Lebesgue measure in the (a^2, b^2) coordinates.
double null_density_sides(const SideLengths& sides, int p);

/// Density of tau: Gamma((p+1)/2) / (sqrt(pi) Gamma(p/2)) (1 - t^2)^((p-2)/2).
double tau_null_density(double t, int p);
/// CDF of tau; (tau + 1) / 2 follows Beta(p/2, p/2).
double tau_null_cdf(double t, int p);

/// Unnormalized isotropic offset-normal shape kernel in the Riemannian
/// distance rho to the mean shape:
/// {1 + kappa [1 + cos 2 rho]} exp{-kappa [1 - cos 2 rho]}.
double offset_normal_density(double rho, double kappa);

/// kappa = S^2(mu) / (4 sigma^2) for a mean configuration mu.
double offset_normal_kappa(const Configuration& mean, double sigma2);

}  // namespace ibi
