#include "ibi/inference.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ibi/parallel.hpp"
#include "ibi/rng.hpp"

namespace ibi {
namespace {

constexpr double kMaxCondition = 1e12;

Eigen::RowVectorXd group_mean(const Eigen::MatrixXd& g) {
  return g.colwise().mean();
}

Configuration configuration_from_means(const std::array<Eigen::RowVectorXd, 3>& m) {
  Matrix3Xp x(m[0].size(), 3);
  for (int g = 0; g < 3; ++g) x.col(g) = m[g].transpose();
  return Configuration(std::move(x));
}

std::optional<BootstrapReplicate> replicate_from(const Configuration& config) {
  if (config.is_degenerate()) return std::nullopt;
  BootstrapReplicate rep;
  rep.sides = side_lengths(config);
  rep.tau = tau_ibi(rep.sides);
  rep.gamma = try_cosine_ibi(rep.sides);
  rep.u = 1.0 - 3.0 * rep.sides.a2;
  rep.v = std::sqrt(3.0) * (rep.sides.b2 - rep.sides.c2);
  return rep;
}

SummaryShape summarize(const BootstrapEnsemble& ens, std::size_t index) {
  const auto& rep = ens.replicates.at(index);
  SummaryShape s;
  s.replicate = index;
  s.shape = shape_from_sides(rep.sides);
  s.sides = rep.sides;
  s.tau = rep.tau;
  s.gamma = rep.gamma;
  return s;
}

}  // namespace

std::string_view to_string(StandardizeMode mode) noexcept {
  switch (mode) {
    case StandardizeMode::kNone:
      return "none";
    case StandardizeMode::kPerFeature:
      return "feature";
    case StandardizeMode::kWhiten:
      return "whiten";
  }
  return "none";
}

StandardizeMode parse_standardize_mode(std::string_view text) {
  if (text == "none") return StandardizeMode::kNone;
  if (text == "feature" || text == "per-feature") {
    return StandardizeMode::kPerFeature;
  }
  if (text == "whiten") return StandardizeMode::kWhiten;
  throw InvalidArgument("unknown standardize mode '" + std::string(text) +
                        "' (expected none, feature or whiten)");
}

GroupedDataset standardize(const GroupedDataset& ds, StandardizeMode mode) {
  if (mode == StandardizeMode::kNone) return ds;

  const Eigen::MatrixXd all = ds.pooled();
  const Eigen::RowVectorXd mean = all.colwise().mean();
  const auto n = static_cast<double>(all.rows());

  Eigen::MatrixXd transform;
  if (mode == StandardizeMode::kPerFeature) {
    const Eigen::RowVectorXd sd =
        ((all.rowwise() - mean).array().square().colwise().sum() / (n - 1.0))
            .sqrt();
    for (Eigen::Index j = 0; j < sd.size(); ++j) {
      if (!(sd(j) > 0.0)) {
        throw SingularCovariance("feature '" + ds.feature_names()[j] +
                                 "' has zero variance");
      }
    }
    transform = sd.cwiseInverse().asDiagonal();
  } else {
    Eigen::MatrixXd scatter = Eigen::MatrixXd::Zero(ds.dim(), ds.dim());
    for (const auto& g : ds.groups()) {
      const Eigen::MatrixXd centered = g.rowwise() - group_mean(g);
      scatter += centered.transpose() * centered;
    }
    const Eigen::MatrixXd pooled = scatter / (n - 3.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(pooled);
    const Eigen::VectorXd lambda = eig.eigenvalues();
    if (!(lambda.minCoeff() > 0.0) ||
        lambda.maxCoeff() / lambda.minCoeff() >= kMaxCondition) {
      throw SingularCovariance(
          "pooled within-group covariance is singular or ill-conditioned");
    }
    transform = eig.eigenvectors() *
                lambda.cwiseSqrt().cwiseInverse().asDiagonal() *
                eig.eigenvectors().transpose();
  }

  std::array<Eigen::MatrixXd, 3> out;
  for (int g = 0; g < 3; ++g) {
    out[g] = (ds.group(g).rowwise() - mean) * transform;
  }
  return GroupedDataset(std::move(out), ds.feature_names(), ds.group_labels());
}

Configuration centroid_configuration(const GroupedDataset& ds) {
  return configuration_from_means(
      {group_mean(ds.group(0)), group_mean(ds.group(1)), group_mean(ds.group(2))});
}

IbiPair observed_ibi(const GroupedDataset& ds) {
  return ibi_pair(centroid_configuration(ds));
}

std::vector<double> BootstrapEnsemble::taus() const {
  std::vector<double> out;
  out.reserve(replicates.size());
  for (const auto& r : replicates) out.push_back(r.tau);
  return out;
}

std::vector<double> BootstrapEnsemble::gammas() const {
  std::vector<double> out;
  out.reserve(replicates.size());
  for (const auto& r : replicates) {
    if (r.gamma) out.push_back(*r.gamma);
  }
  return out;
}

std::vector<Point2> BootstrapEnsemble::points() const {
  std::vector<Point2> out;
  out.reserve(replicates.size());
  for (const auto& r : replicates) out.push_back(r.uv());
  return out;
}

BootstrapEnsemble stratified_bootstrap(const GroupedDataset& ds,
                                       const BootstrapOptions& options) {
  if (options.replicates < 1) {
    throw InvalidArgument("bootstrap needs at least one replicate");
  }
  std::vector<std::optional<BootstrapReplicate>> slots(options.replicates);
  parallel_for(options.replicates, options.threads, [&](std::size_t k) {
    std::array<Eigen::RowVectorXd, 3> means;
    if (!options.resample) {
      for (int g = 0; g < 3; ++g) means[g] = group_mean(ds.group(g));
    } else {
      SeededRng rng(options.seed, k);
      for (int g = 0; g < 3; ++g) {
        const Eigen::MatrixXd& data = ds.group(g);
        const auto n = static_cast<std::uint64_t>(data.rows());
        Eigen::RowVectorXd sum = Eigen::RowVectorXd::Zero(data.cols());
        for (std::uint64_t i = 0; i < n; ++i) {
          sum += data.row(static_cast<Eigen::Index>(rng.index(n)));
        }
        means[g] = sum / static_cast<double>(n);
      }
    }
    slots[k] = replicate_from(configuration_from_means(means));
  });

  BootstrapEnsemble ens;
  ens.requested = options.replicates;
  ens.seed = options.seed;
  ens.replicates.reserve(slots.size());
  for (auto& s : slots) {
    if (s) {
      ens.replicates.push_back(*s);
    } else {
      ++ens.degenerate;
    }
  }
  return ens;
}

double quantile_sorted(std::span<const double> sorted, double q) {
  if (sorted.empty()) throw InsufficientData("quantile of empty data");
  const double h = (static_cast<double>(sorted.size()) - 1.0) * q;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

Interval percentile_ci(std::span<const double> values, double level) {
  if (values.size() < 2) {
    throw InsufficientData("percentile interval needs at least two values");
  }
  if (!(level > 0.0 && level < 1.0)) {
    throw InvalidArgument("confidence level must lie in (0, 1)");
  }
  std::vector<double> sorted(values.begin(), values.end());
  for (double v : sorted) {
    if (!std::isfinite(v)) throw InvalidArgument("non-finite value");
  }
  std::sort(sorted.begin(), sorted.end());
  const double alpha = 1.0 - level;
  return Interval{quantile_sorted(sorted, alpha / 2.0),
                  quantile_sorted(sorted, 1.0 - alpha / 2.0)};
}

std::vector<std::size_t> replicate_depths(const BootstrapEnsemble& ens,
                                          unsigned threads) {
  const std::vector<Point2> cloud = ens.points();
  return tukey_depth_counts(cloud, threads);
}

ConfidenceRegion confidence_region(const BootstrapEnsemble& ens, double level,
                                   unsigned threads) {
  if (ens.replicates.empty()) {
    throw InsufficientReplicates("confidence region of an empty ensemble");
  }
  const auto depths = replicate_depths(ens, threads);
  return confidence_region(ens, level, depths);
}

ConfidenceRegion confidence_region(const BootstrapEnsemble& ens, double level,
                                   std::span<const std::size_t> depths) {
  if (ens.replicates.empty()) {
    throw InsufficientReplicates("confidence region of an empty ensemble");
  }
  if (!(level > 0.0 && level < 1.0)) {
    throw InvalidArgument("confidence level must lie in (0, 1)");
  }
  if (depths.size() != ens.replicates.size()) {
    throw DimensionMismatch("depth list does not match the ensemble");
  }
  const std::size_t n = depths.size();
  std::vector<std::size_t> sorted(depths.begin(), depths.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const auto needed = static_cast<std::size_t>(
      std::ceil(level * static_cast<double>(n) - 1e-9));
  const std::size_t keep = std::clamp<std::size_t>(needed, 1, n);

  ConfidenceRegion cr;
  cr.level = level;
  cr.cloud_size = n;
  cr.depth_threshold = sorted[keep - 1];
  std::vector<Point2> pts;
  for (std::size_t i = 0; i < n; ++i) {
    if (depths[i] >= cr.depth_threshold) {
      cr.members.push_back(i);
      cr.member_depths.push_back(depths[i]);
      pts.push_back(ens.replicates[i].uv());
    }
  }
  cr.hull = convex_hull(pts);
  cr.area = polygon_area(cr.hull);
  return cr;
}

RegionSummary region_summary(const ConfidenceRegion& cr,
                             const BootstrapEnsemble& ens) {
  if (cr.members.empty()) {
    throw InsufficientReplicates("region summary of an empty region");
  }
  std::size_t deepest = 0;
  std::size_t hi = 0;
  std::size_t lo = 0;
  for (std::size_t m = 1; m < cr.members.size(); ++m) {
    if (cr.member_depths[m] > cr.member_depths[deepest]) deepest = m;
    const double t = ens.replicates[cr.members[m]].tau;
    if (t > ens.replicates[cr.members[hi]].tau) hi = m;
    if (t < ens.replicates[cr.members[lo]].tau) lo = m;
  }
  return RegionSummary{summarize(ens, cr.members[deepest]),
                       summarize(ens, cr.members[hi]),
                       summarize(ens, cr.members[lo])};
}

PermutationResult permutation_test(const GroupedDataset& ds, std::size_t K,
                                   std::uint64_t seed, unsigned threads) {
  if (K < 1) throw InvalidArgument("permutation test needs K >= 1");
  const IbiPair observed = observed_ibi(ds);
  const Eigen::MatrixXd all = ds.pooled();
  const std::size_t total = ds.total_size();
  const auto p = all.cols();

  std::vector<int> base_labels;
  base_labels.reserve(total);
  for (int g = 0; g < 3; ++g) base_labels.insert(base_labels.end(), ds.size(g), g);

  struct Outcome {
    bool tau_exceeds = false;
    bool gamma_exceeds = false;
  };
  std::vector<Outcome> outcomes(K);
  parallel_for(K, threads, [&](std::size_t k) {
    SeededRng rng(seed, k);
    std::vector<int> labels = base_labels;
    for (std::size_t i = total - 1; i > 0; --i) {
      std::swap(labels[i], labels[rng.index(i + 1)]);
    }
    std::array<Eigen::RowVectorXd, 3> means;
    for (auto& m : means) m = Eigen::RowVectorXd::Zero(p);
    for (std::size_t i = 0; i < total; ++i) {
      means[labels[i]] += all.row(static_cast<Eigen::Index>(i));
    }
    for (int g = 0; g < 3; ++g) means[g] /= static_cast<double>(ds.size(g));
    const auto rep = replicate_from(configuration_from_means(means));
    Outcome& out = outcomes[k];
    if (!rep) {
      out.tau_exceeds = true;
      out.gamma_exceeds = true;
      return;
    }
    out.tau_exceeds = std::abs(rep->tau) >= std::abs(observed.tau);
    if (observed.gamma) {
      out.gamma_exceeds =
          !rep->gamma || std::abs(*rep->gamma) >= std::abs(*observed.gamma);
    }
  });

  std::size_t tau_count = 0;
  std::size_t gamma_count = 0;
  for (const auto& o : outcomes) {
    tau_count += o.tau_exceeds;
    gamma_count += o.gamma_exceeds;
  }
  PermutationResult result;
  result.permutations = K;
  const auto denom = static_cast<double>(K + 1);
  result.p_tau = static_cast<double>(1 + tau_count) / denom;
  if (observed.gamma) {
    result.p_gamma = static_cast<double>(1 + gamma_count) / denom;
  }
  return result;
}

}  // namespace ibi
