// ibi: in-betweenness analysis of three groups from the command line.
//
//   ibi analyze --input data.csv --group-col species
//       --groups A=setosa,B=versicolor,C=virginica --report out.json
//   ibi simulate --r 0.5 --phi pi/3 --n 100 --sigma2 1

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ibi/errors.hpp"
#include "ibi/parallel.hpp"
#include "ibi/report.hpp"
#include "ibi/svg.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kInputError = 3,
  kInvalidArgument = 4,
  kNumericalError = 5,
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::array<std::string, 3> parse_groups(const std::string& text) {
  std::array<std::string, 3> order;
  std::array<bool, 3> seen{};
  for (const auto& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq != 1 || item.size() < 3) {
      throw ibi::InvalidArgument("--groups expects A=<label>,B=<label>,C=<label>");
    }
    const int g = item[0] - 'A';
    if (g < 0 || g > 2 || seen[g]) {
      throw ibi::InvalidArgument("--groups expects each of A, B, C exactly once");
    }
    seen[g] = true;
    order[g] = item.substr(2);
  }
  if (!(seen[0] && seen[1] && seen[2])) {
    throw ibi::InvalidArgument("--groups must map all of A, B and C");
  }
  return order;
}

double parse_double(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw ibi::InvalidArgument(std::string("cannot parse ") + what + ": " + text);
}

// Radians, or a multiple of pi written as "0.25pi", "pi/3" or "2pi/3".
double parse_angle(std::string text) {
  double denominator = 1.0;
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    denominator = parse_double(text.substr(slash + 1), "angle");
    text.resize(slash);
  }
  double factor = 1.0;
  if (text.size() >= 2 && text.compare(text.size() - 2, 2, "pi") == 0) {
    text.resize(text.size() - 2);
    factor = std::numbers::pi;
    if (text.empty()) text = "1";
  }
  return factor * parse_double(text, "angle") / denominator;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ibi::FileNotFound(path);
  out << content;
  if (!out) throw ibi::Error("failed writing " + path);
}

struct AnalyzeArgs {
  std::string input;
  std::string group_col;
  std::string groups;
  std::string features;
  std::string standardize = "feature";
  std::size_t boot = 2000;
  std::size_t perm = 0;
  std::string levels = "0.8,0.95";
  std::uint64_t seed = 1;
  std::string report;
  std::string plot;
  unsigned threads = 0;
};

int run_analyze(const AnalyzeArgs& a) {
  ibi::AnalysisConfig config;
  config.input_path = a.input;
  config.selection.group_column = a.group_col;
  config.selection.group_order = parse_groups(a.groups);
  config.selection.features = split(a.features, ',');
  config.standardize = ibi::parse_standardize_mode(a.standardize);
  config.bootstrap = a.boot;
  config.permutations = a.perm;
  config.levels.clear();
  for (const auto& l : split(a.levels, ',')) {
    config.levels.push_back(parse_double(l, "level"));
  }
  config.seed = a.seed;
  config.threads = a.threads ? a.threads : ibi::default_thread_count();

  const ibi::AnalysisReport report = ibi::run_analysis(config);
  const std::string json = ibi::report_to_json(report);
  if (a.report.empty()) {
    std::cout << json;
  } else {
    write_file(a.report, json);
  }
  if (!a.plot.empty()) {
    write_file(a.plot, ibi::render_shape_space_svg(report));
  }
  return kOk;
}

struct SimulateArgs {
  double r = 0.5;
  std::string phi = "pi/3";
  int p = 2;
  std::size_t n = 100;
  double sigma2 = 1.0;
  std::size_t sims = 300;
  std::size_t boot = 500;
  double level = 0.95;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "csv";
  unsigned threads = 0;
};

int run_simulate(const SimulateArgs& a) {
  ibi::CoverageParams params;
  params.r = a.r;
  params.phi = parse_angle(a.phi);
  params.p = a.p;
  params.n_per_group = a.n;
  params.sigma2 = a.sigma2;
  params.simulations = a.sims;
  params.bootstrap = a.boot;
  params.level = a.level;
  params.seed = a.seed;
  params.threads = a.threads ? a.threads : ibi::default_thread_count();

  const ibi::CoverageResult result = ibi::coverage_simulation(params);
  std::string text;
  if (a.format == "json") {
    text = ibi::coverage_json(params, result);
  } else if (a.format == "csv") {
    text = ibi::coverage_csv_header() + ibi::coverage_csv_row(params, result);
  } else {
    throw ibi::InvalidArgument("--format must be csv or json");
  }
  if (a.out.empty()) {
    std::cout << text;
  } else {
    write_file(a.out, text);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"In-betweenness of three groups via triangle shape analysis"};
  app.set_version_flag("--version", ibi::version());
  app.require_subcommand(1);

  AnalyzeArgs aa;
  auto* analyze = app.add_subcommand("analyze", "Analyze a grouped CSV file");
  analyze->add_option("--input", aa.input, "CSV file with a header row")
      ->required();
  analyze->add_option("--group-col", aa.group_col, "Column holding group labels")
      ->required();
  analyze->add_option("--groups", aa.groups, "Mapping A=<label>,B=<label>,C=<label>")
      ->required();
  analyze->add_option("--features", aa.features,
                      "Comma-separated feature columns (default: all others)");
  analyze->add_option("--standardize", aa.standardize, "none, feature or whiten")
      ->capture_default_str();
  analyze->add_option("--boot", aa.boot, "Bootstrap replicates")
      ->capture_default_str();
  analyze->add_option("--perm", aa.perm, "Permutations (0 skips the test)")
      ->capture_default_str();
  analyze->add_option("--levels", aa.levels, "Comma-separated region levels")
      ->capture_default_str();
  analyze->add_option("--seed", aa.seed, "Random seed")->capture_default_str();
  analyze->add_option("--report", aa.report, "JSON report path (default: stdout)");
  analyze->add_option("--plot", aa.plot, "SVG plot path");
  analyze->add_option("--threads", aa.threads,
                      "Worker threads (default: IBI_THREADS or all cores)");

  SimulateArgs sa;
  auto* simulate =
      app.add_subcommand("simulate", "Coverage simulation for one table row");
  simulate->add_option("--r", sa.r, "Radius of the true shape")
      ->capture_default_str();
  simulate->add_option("--phi", sa.phi, "Angle in radians, or a multiple of pi such as pi/3")
      ->capture_default_str();
  simulate->add_option("--p", sa.p, "Feature dimension")->capture_default_str();
  simulate->add_option("--n", sa.n, "Observations per group")
      ->capture_default_str();
  simulate->add_option("--sigma2", sa.sigma2, "Noise variance")
      ->capture_default_str();
  simulate->add_option("--sims", sa.sims, "Simulated datasets")
      ->capture_default_str();
  simulate->add_option("--boot", sa.boot, "Bootstrap replicates per dataset")
      ->capture_default_str();
  simulate->add_option("--level", sa.level, "Interval and region level")
      ->capture_default_str();
  simulate->add_option("--seed", sa.seed, "Random seed")->capture_default_str();
  simulate->add_option("--out", sa.out, "Output path (default: stdout)");
  simulate->add_option("--format", sa.format, "csv or json")
      ->capture_default_str();
  simulate->add_option("--threads", sa.threads,
                       "Worker threads (default: IBI_THREADS or all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze) return run_analyze(aa);
    if (*simulate) return run_simulate(sa);
  } catch (const ibi::FileNotFound& e) {
    std::cerr << "ibi: " << e.what() << "\n";
    return kInputError;
  } catch (const ibi::ParseError& e) {
    std::cerr << "ibi: " << e.what() << "\n";
    return kInputError;
  } catch (const ibi::UnknownGroupLabel& e) {
    std::cerr << "ibi: " << e.what() << "\n";
    return kInputError;
  } catch (const ibi::FewerThanThreeGroups& e) {
    std::cerr << "ibi: " << e.what() << "\n";
    return kInputError;
  } catch (const ibi::InvalidArgument& e) {
    std::cerr << "ibi: " << e.what() << "\n";
    return kInvalidArgument;
  } catch (const ibi::Error& e) {
    std::cerr << "ibi: " << e.what() << "\n";
    return kNumericalError;
  } catch (const std::exception& e) {
    std::cerr << "ibi: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
