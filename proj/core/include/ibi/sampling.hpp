#pragma once

#include <array>
#include <cstddef>

#include <Eigen/Dense>

#include "ibi/dataset.hpp"
#include "ibi/rng.hpp"
#include "ibi/shape_core.hpp"

namespace ibi {

/// Isotropic normal groups sharing a variance; n[g] observations in group g.
struct GroupSpec {
  std::array<Eigen::VectorXd, 3> means;
  double sigma2 = 1.0;
  std::array<std::size_t, 3> n{2, 2, 2};

  /// Throws InvalidArgument unless sigma2 > 0, every n >= 2 and the means
  /// share one dimension.
  void validate() const;
};

/// Three iid standard normal landmarks in R^p (p >= 2).
Configuration sample_null_configuration(int p, SeededRng& rng);

/// A centered configuration in R^p with unit centroid size whose shape is
/// (r, phi). The triangle lies in the plane of the first two coordinates.
Configuration mean_configuration_from_shape(double r, double phi, int p);

GroupedDataset sample_grouped_dataset(const GroupSpec& spec, SeededRng& rng);

}  // namespace ibi
