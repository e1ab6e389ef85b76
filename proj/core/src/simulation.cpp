#include <cmath>

#include "ibi/inference.hpp"
#include "ibi/parallel.hpp"
#include "ibi/rng.hpp"
#include "ibi/sampling.hpp"

namespace ibi {

CoverageResult coverage_simulation(const CoverageParams& params) {
  if (params.p < 2) throw InvalidArgument("simulation needs p >= 2");
  if (params.n_per_group < 2) throw InvalidArgument("n per group must be >= 2");
  if (!(params.sigma2 > 0.0)) throw InvalidArgument("sigma2 must be > 0");
  if (params.simulations < 1 || params.bootstrap < 1) {
    throw InvalidArgument("simulations and bootstrap replicates must be >= 1");
  }
  if (!(params.level > 0.0 && params.level < 1.0)) {
    throw InvalidArgument("level must lie in (0, 1)");
  }
  if (!(params.landmark_radius > 0.0)) {
    throw InvalidArgument("landmark radius must be > 0");
  }

  const ShapePoint truth = ShapePoint::from_polar(params.r, params.phi);
  const double true_tau = tau_ibi(truth);
  const Point2 true_uv(truth.u(), truth.v());

  // Unit centroid size scaled so that the RMS landmark radius matches.
  const Configuration mean =
      mean_configuration_from_shape(params.r, params.phi, params.p);
  const Matrix3Xp mu = mean.matrix() * (std::sqrt(3.0) * params.landmark_radius);

  GroupSpec spec;
  for (int g = 0; g < 3; ++g) {
    spec.means[g] = mu.col(g);
    spec.n[g] = params.n_per_group;
  }
  spec.sigma2 = params.sigma2;
  spec.validate();

  struct SimOutcome {
    bool ci_hit = false;
    double ci_length = 0.0;
    bool cr_hit = false;
    bool cr_hull_hit = false;
    bool cr_inclusive_hit = false;
    double cr_area = 0.0;
    std::size_t degenerate = 0;
  };
  std::vector<SimOutcome> outcomes(params.simulations);

  parallel_for(params.simulations, params.threads, [&](std::size_t i) {
    SeededRng data_rng(params.seed, i);
    const GroupedDataset ds = sample_grouped_dataset(spec, data_rng);

    BootstrapOptions opts;
    opts.replicates = params.bootstrap;
    opts.seed = derive_seed(params.seed, 0x5eed0000ULL + i);
    opts.threads = 1;
    const BootstrapEnsemble ens = stratified_bootstrap(ds, opts);

    SimOutcome& out = outcomes[i];
    out.degenerate = ens.degenerate;
    const auto taus = ens.taus();
    if (taus.size() < 2) return;
    const Interval ci = percentile_ci(taus, params.level);
    out.ci_hit = ci.lo <= true_tau && true_tau <= ci.hi;
    out.ci_length = ci.hi - ci.lo;

    const auto cloud = ens.points();
    const auto depths = tukey_depth_counts(cloud, 1);
    const ConfidenceRegion cr = confidence_region(ens, params.level, depths);
    const std::size_t truth_depth = tukey_depth_count(true_uv, cloud);
    out.cr_hit = truth_depth >= cr.depth_threshold;
    out.cr_inclusive_hit = truth_depth + 1 >= cr.depth_threshold;
    out.cr_hull_hit = hull_contains(cr.hull, true_uv);
    out.cr_area = cr.area;
  });

  CoverageResult result;
  result.simulations = params.simulations;
  for (const auto& o : outcomes) {
    result.ci_coverage += o.ci_hit;
    result.ci_length += o.ci_length;
    result.cr_coverage += o.cr_hit;
    result.cr_hull_coverage += o.cr_hull_hit;
    result.cr_inclusive_coverage += o.cr_inclusive_hit;
    result.cr_area += o.cr_area;
    result.degenerate_replicates += o.degenerate;
  }
  const auto n = static_cast<double>(params.simulations);
  result.ci_coverage /= n;
  result.ci_length /= n;
  result.cr_coverage /= n;
  result.cr_hull_coverage /= n;
  result.cr_inclusive_coverage /= n;
  result.cr_area /= n;
  return result;
}

}  // namespace ibi
