#pragma once

// Inference for the in-betweenness of group B relative to groups A and C:
// feature standardization, the stratified bootstrap, percentile intervals,
// Tukey-depth confidence regions and label-permutation tests.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ibi/dataset.hpp"
#include "ibi/depth.hpp"
#include "ibi/ibi_metrics.hpp"
#include "ibi/shape_core.hpp"

namespace ibi {

enum class StandardizeMode { kNone, kPerFeature, kWhiten };

std::string_view to_string(StandardizeMode mode) noexcept;
/// Accepts "none", "feature" (or "per-feature") and "whiten".
StandardizeMode parse_standardize_mode(std::string_view text);

/// kPerFeature: subtract the overall mean and divide by the overall sample
/// standard deviation of each feature. kWhiten: subtract the overall mean and
/// multiply by the inverse square root of the pooled within-group covariance.
/// Throws SingularCovariance for constant features or an ill-conditioned
/// pooled covariance (condition number >= 1e12).
GroupedDataset standardize(const GroupedDataset& ds, StandardizeMode mode);

/// Landmark g is the mean of group g.
Configuration centroid_configuration(const GroupedDataset& ds);

/// gamma and tau of the centroid triangle. Throws DegenerateConfiguration.
IbiPair observed_ibi(const GroupedDataset& ds);

struct BootstrapReplicate {
  double tau = 0.0;
  std::optional<double> gamma;
  double u = 0.0;
  double v = 0.0;
  SideLengths sides;

  Point2 uv() const { return Point2(u, v); }
};

struct BootstrapOptions {
  std::size_t replicates = 1000;
  std::uint64_t seed = 1;
  unsigned threads = 0;  // 0: default_thread_count()
  bool resample = true;  // false: every replicate is the original data
};

struct BootstrapEnsemble {
  /// Non-degenerate replicates in replicate-index order.
  std::vector<BootstrapReplicate> replicates;
  std::size_t requested = 0;
  std::size_t degenerate = 0;
  std::uint64_t seed = 0;

  std::vector<double> taus() const;
  /// gamma of replicates where it is defined.
  std::vector<double> gammas() const;
  std::vector<Point2> points() const;
};

/// Replicate k resamples n_g rows with replacement inside every group g
/// using the stream (seed, k), then recomputes the centroid triangle.
/// Replicates whose centroids coincide are counted in `degenerate` and
/// dropped. Results do not depend on the thread count.
BootstrapEnsemble stratified_bootstrap(const GroupedDataset& ds,
                                       const BootstrapOptions& options);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Linear-interpolation (type 7) quantile of sorted data, q in [0, 1].
double quantile_sorted(std::span<const double> sorted, double q);

/// Empirical (1 - level)/2 and (1 + level)/2 quantiles (type 7). Throws
/// InsufficientData for fewer than two values, InvalidArgument for a level
/// outside (0, 1) or non-finite values.
Interval percentile_ci(std::span<const double> values, double level);

struct ConfidenceRegion {
  double level = 0.95;
  /// Tukey depth count cutoff; members have depth count >= threshold.
  std::size_t depth_threshold = 0;
  std::size_t cloud_size = 0;
  /// Indices into the ensemble's replicate list.
  std::vector<std::size_t> members;
  /// Depth count of every member, aligned with `members`.
  std::vector<std::size_t> member_depths;
  std::vector<Point2> hull;
  double area = 0.0;

  double member_fraction() const {
    return cloud_size ? static_cast<double>(members.size()) /
                            static_cast<double>(cloud_size)
                      : 0.0;
  }
  double depth_fraction() const {
    return cloud_size ? static_cast<double>(depth_threshold) /
                            static_cast<double>(cloud_size)
                      : 0.0;
  }
};

/// Depth counts of every replicate (u, v) against the replicate cloud.
std::vector<std::size_t> replicate_depths(const BootstrapEnsemble& ens,
                                          unsigned threads = 0);

/// Members are replicates whose depth is at least the largest threshold that
/// keeps a fraction >= level of the cloud. Throws InsufficientReplicates on
/// an empty ensemble; fewer than 100 replicates is allowed but imprecise.
ConfidenceRegion confidence_region(const BootstrapEnsemble& ens, double level,
                                   unsigned threads = 0);
/// Variant reusing depths from replicate_depths().
ConfidenceRegion confidence_region(const BootstrapEnsemble& ens, double level,
                                   std::span<const std::size_t> depths);

struct SummaryShape {
  std::size_t replicate = 0;
  ShapePoint shape;
  SideLengths sides;
  double tau = 0.0;
  std::optional<double> gamma;
};

struct RegionSummary {
  SummaryShape median;   // deepest member, ties to the smallest index
  SummaryShape max_tau;  // ties to the smallest index
  SummaryShape min_tau;
};

RegionSummary region_summary(const ConfidenceRegion& cr,
                             const BootstrapEnsemble& ens);

struct PermutationResult {
  double p_tau = 1.0;
  /// Empty when gamma of the observed data is undefined.
  std::optional<double> p_gamma;
  std::size_t permutations = 0;
};

/// Shuffles group labels (group sizes preserved) K times with streams
/// (seed, k). Two-sided: p = (1 + #{|stat_k| >= |stat_obs|}) / (K + 1);
/// permutations with undefined gamma count as exceeding.
PermutationResult permutation_test(const GroupedDataset& ds, std::size_t K,
                                   std::uint64_t seed, unsigned threads = 0);

struct CoverageParams {
  double r = 0.5;
  double phi = kMidpointPhi;
  int p = 2;
  std::size_t n_per_group = 100;
  double sigma2 = 1.0;
  std::size_t simulations = 300;
  std::size_t bootstrap = 500;
  std::uint64_t seed = 1;
  double level = 0.95;
  /// Root-mean-square distance of the mean landmarks from their centroid.
  double landmark_radius = 1.0;
  unsigned threads = 0;
};

struct CoverageResult {
  double ci_coverage = 0.0;
  double ci_length = 0.0;
  /// True (u, v) has depth >= the region's cutoff in the replicate cloud.
  double cr_coverage = 0.0;
  /// True (u, v) lies inside the convex hull of the region's members.
  double cr_hull_coverage = 0.0;
  /// As cr_coverage, but the true point also counts itself as a member of
  /// the cloud when its depth is evaluated.
  double cr_inclusive_coverage = 0.0;
  double cr_area = 0.0;
  std::size_t simulations = 0;
  std::size_t degenerate_replicates = 0;
};

/// Simulates datasets around the mean configuration with shape (r, phi) and
/// records how often the bootstrap interval for tau and the depth region for
/// (u, v) contain the truth.
CoverageResult coverage_simulation(const CoverageParams& params);

}  // namespace ibi
