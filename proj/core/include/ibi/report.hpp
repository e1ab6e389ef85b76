#pragma once

// End-to-end analysis of a grouped CSV file and its JSON report.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ibi/csv.hpp"
#include "ibi/inference.hpp"

namespace ibi {

std::string version();

struct AnalysisConfig {
  std::string input_path;
  CsvSelection selection;
  StandardizeMode standardize = StandardizeMode::kPerFeature;
  std::size_t bootstrap = 2000;
  /// 0 skips the permutation test.
  std::size_t permutations = 0;
  std::vector<double> levels{0.80, 0.95};
  std::uint64_t seed = 1;
  unsigned threads = 0;

  /// Throws InvalidArgument: bootstrap >= 1, levels in (0, 1), non-empty
  /// input path and group column.
  void validate() const;
};

struct LevelResult {
  double level = 0.95;
  Interval tau_ci;
  std::optional<Interval> gamma_ci;
  ConfidenceRegion region;
  RegionSummary summary;
};

struct AnalysisReport {
  AnalysisConfig config;
  std::array<std::size_t, 3> group_sizes{};
  std::vector<std::string> features;
  ShapePoint observed_shape;
  SideLengths observed_sides;
  IbiPair observed;
  double tau_median = 0.0;
  std::optional<double> gamma_median;
  /// Sorted by ascending level.
  std::vector<LevelResult> levels;
  std::optional<PermutationResult> permutation;
  BootstrapEnsemble ensemble;
};

/// Runs the analysis on an already loaded dataset (standardization is
/// applied here). Deterministic given config.seed for any thread count.
AnalysisReport analyze_dataset(const GroupedDataset& raw,
                               const AnalysisConfig& config);

/// load_csv + analyze_dataset.
AnalysisReport run_analysis(const AnalysisConfig& config);

/// Stable field order; doubles written with the shortest representation
/// that round-trips exactly.
std::string report_to_json(const AnalysisReport& report);

/// One coverage table row.
std::string coverage_csv_header();
std::string coverage_csv_row(const CoverageParams& params,
                             const CoverageResult& result);
std::string coverage_json(const CoverageParams& params,
                          const CoverageResult& result);

}  // namespace ibi
