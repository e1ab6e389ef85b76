#include "ibi/report.hpp"

#include <algorithm>
#include <cstdio>

#include "ibi/rng.hpp"
#include "json.hpp"

#ifndef IBI_VERSION_STRING
#define IBI_VERSION_STRING "0.0.0"
#endif

namespace ibi {
namespace {

using Json = nlohmann::ordered_json;

Json optional_number(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json sides_json(const SideLengths& s) {
  return Json{{"a2", s.a2}, {"b2", s.b2}, {"c2", s.c2}};
}

Json shape_json(const ShapePoint& s) {
  return Json{{"r", s.r()}, {"phi", s.phi()}, {"u", s.u()}, {"v", s.v()}};
}

Json interval_json(const Interval& i) { return Json{{"lo", i.lo}, {"hi", i.hi}}; }

Json summary_shape_json(const SummaryShape& s) {
  Json j = shape_json(s.shape);
  j["tau"] = s.tau;
  j["gamma"] = optional_number(s.gamma);
  j["sides"] = sides_json(s.sides);
  j["replicate"] = s.replicate;
  return j;
}

std::string format_number(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

}  // namespace

std::string version() { return IBI_VERSION_STRING; }

void AnalysisConfig::validate() const {
  if (input_path.empty()) throw InvalidArgument("input path is empty");
  if (selection.group_column.empty()) {
    throw InvalidArgument("group column is empty");
  }
  if (bootstrap < 1) throw InvalidArgument("bootstrap replicates must be >= 1");
  if (levels.empty()) throw InvalidArgument("at least one level is required");
  for (double l : levels) {
    if (!(l > 0.0 && l < 1.0)) {
      throw InvalidArgument("levels must lie in (0, 1)");
    }
  }
}

AnalysisReport analyze_dataset(const GroupedDataset& raw,
                               const AnalysisConfig& config) {
  if (config.bootstrap < 1) {
    throw InvalidArgument("bootstrap replicates must be >= 1");
  }
  const GroupedDataset ds = standardize(raw, config.standardize);

  AnalysisReport report;
  report.config = config;
  std::sort(report.config.levels.begin(), report.config.levels.end());
  for (int g = 0; g < 3; ++g) report.group_sizes[g] = ds.size(g);
  report.features = ds.feature_names();

  const Configuration centroids = centroid_configuration(ds);
  report.observed_shape = shape_point(centroids);
  report.observed_sides = side_lengths(centroids);
  report.observed = ibi_pair(centroids);

  BootstrapOptions opts;
  opts.replicates = config.bootstrap;
  opts.seed = config.seed;
  opts.threads = config.threads;
  report.ensemble = stratified_bootstrap(ds, opts);

  const auto taus = report.ensemble.taus();
  const auto gammas = report.ensemble.gammas();
  if (!taus.empty()) {
    std::vector<double> sorted = taus;
    std::sort(sorted.begin(), sorted.end());
    report.tau_median = quantile_sorted(sorted, 0.5);
  }
  if (!gammas.empty()) {
    std::vector<double> sorted = gammas;
    std::sort(sorted.begin(), sorted.end());
    report.gamma_median = quantile_sorted(sorted, 0.5);
  }

  if (taus.size() >= 2) {
    const auto depths = replicate_depths(report.ensemble, config.threads);
    for (double level : report.config.levels) {
      LevelResult lr;
      lr.level = level;
      lr.tau_ci = percentile_ci(taus, level);
      if (gammas.size() >= 2) lr.gamma_ci = percentile_ci(gammas, level);
      lr.region = confidence_region(report.ensemble, level, depths);
      lr.summary = region_summary(lr.region, report.ensemble);
      report.levels.push_back(std::move(lr));
    }
  }

  if (config.permutations > 0) {
    report.permutation =
        permutation_test(ds, config.permutations,
                         derive_seed(config.seed, 0x9e7u), config.threads);
  }
  return report;
}

AnalysisReport run_analysis(const AnalysisConfig& config) {
  config.validate();
  const GroupedDataset raw = load_csv(config.input_path, config.selection);
  return analyze_dataset(raw, config);
}

std::string report_to_json(const AnalysisReport& report) {
  const auto& cfg = report.config;
  Json j;
  j["tool"] = "ibi";
  j["version"] = version();

  Json config;
  config["input"] = cfg.input_path;
  config["group_column"] = cfg.selection.group_column;
  config["groups"] = Json{{"A", cfg.selection.group_order[0]},
                          {"B", cfg.selection.group_order[1]},
                          {"C", cfg.selection.group_order[2]}};
  config["features"] = report.features;
  config["standardize"] = std::string(to_string(cfg.standardize));
  config["bootstrap"] = cfg.bootstrap;
  config["permutations"] = cfg.permutations;
  config["levels"] = cfg.levels;
  config["seed"] = cfg.seed;
  j["config"] = std::move(config);

  j["group_sizes"] = Json{{"A", report.group_sizes[0]},
                          {"B", report.group_sizes[1]},
                          {"C", report.group_sizes[2]}};

  Json observed;
  observed["tau"] = report.observed.tau;
  observed["gamma"] = optional_number(report.observed.gamma);
  observed["r"] = report.observed_shape.r();
  observed["phi"] = report.observed_shape.phi();
  observed["u"] = report.observed_shape.u();
  observed["v"] = report.observed_shape.v();
  observed["a2"] = report.observed_sides.a2;
  observed["b2"] = report.observed_sides.b2;
  observed["c2"] = report.observed_sides.c2;
  observed["angle_degenerate"] = report.observed_shape.angle_degenerate();
  j["observed"] = std::move(observed);

  Json boot;
  boot["requested"] = report.ensemble.requested;
  boot["valid"] = report.ensemble.replicates.size();
  boot["degenerate"] = report.ensemble.degenerate;
  boot["tau_median"] = report.tau_median;
  boot["gamma_median"] = optional_number(report.gamma_median);
  j["bootstrap"] = std::move(boot);

  Json levels = Json::array();
  for (const auto& lr : report.levels) {
    Json l;
    l["level"] = lr.level;
    l["tau_ci"] = interval_json(lr.tau_ci);
    l["gamma_ci"] = lr.gamma_ci ? interval_json(*lr.gamma_ci) : Json(nullptr);
    Json region;
    region["members"] = lr.region.members.size();
    region["member_fraction"] = lr.region.member_fraction();
    region["depth_threshold"] = lr.region.depth_threshold;
    region["depth_fraction"] = lr.region.depth_fraction();
    region["area"] = lr.region.area;
    Json hull = Json::array();
    for (const auto& p : lr.region.hull) hull.push_back(Json::array({p.x(), p.y()}));
    region["hull"] = std::move(hull);
    l["region"] = std::move(region);
    l["median"] = summary_shape_json(lr.summary.median);
    l["max_tau"] = summary_shape_json(lr.summary.max_tau);
    l["min_tau"] = summary_shape_json(lr.summary.min_tau);
    levels.push_back(std::move(l));
  }
  j["levels"] = std::move(levels);

  if (report.permutation) {
    j["permutation"] =
        Json{{"permutations", report.permutation->permutations},
             {"p_tau", report.permutation->p_tau},
             {"p_gamma", optional_number(report.permutation->p_gamma)}};
  } else {
    j["permutation"] = nullptr;
  }
  return j.dump(2) + "\n";
}

std::string coverage_csv_header() {
  return "n,n_per_group,sigma2,ci_coverage,ci_length,cr_coverage,cr_area\n";
}

std::string coverage_csv_row(const CoverageParams& params,
                             const CoverageResult& result) {
  std::string row;
  row += std::to_string(3 * params.n_per_group) + ",";
  row += std::to_string(params.n_per_group) + ",";
  row += format_number(params.sigma2, 10) + ",";
  row += format_number(result.ci_coverage, 10) + ",";
  row += format_number(result.ci_length, 10) + ",";
  row += format_number(result.cr_coverage, 10) + ",";
  row += format_number(result.cr_area, 10) + "\n";
  return row;
}

std::string coverage_json(const CoverageParams& params,
                          const CoverageResult& result) {
  Json j;
  j["n"] = 3 * params.n_per_group;
  j["n_per_group"] = params.n_per_group;
  j["sigma2"] = params.sigma2;
  j["ci_coverage"] = result.ci_coverage;
  j["ci_length"] = result.ci_length;
  j["cr_coverage"] = result.cr_coverage;
  j["cr_hull_coverage"] = result.cr_hull_coverage;
  j["cr_inclusive_coverage"] = result.cr_inclusive_coverage;
  j["cr_area"] = result.cr_area;
  j["params"] = Json{{"r", params.r},
                     {"phi", params.phi},
                     {"p", params.p},
                     {"simulations", params.simulations},
                     {"bootstrap", params.bootstrap},
                     {"level", params.level},
                     {"seed", params.seed}};
  j["degenerate_replicates"] = result.degenerate_replicates;
  return j.dump(2) + "\n";
}

}  // namespace ibi
