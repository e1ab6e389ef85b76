#include <vector>

#include <benchmark/benchmark.h>

#include "ibi/depth.hpp"
#include "ibi/inference.hpp"
#include "ibi/rng.hpp"
#include "ibi/sampling.hpp"

namespace {

using namespace ibi;

void BM_ShapePoint(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  SeededRng rng(1, 0);
  std::vector<Configuration> configs;
  for (int i = 0; i < 256; ++i) configs.push_back(sample_null_configuration(p, rng));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(shape_point(configs[i++ & 255]));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ShapePoint)->Arg(2)->Arg(4)->Arg(64);

void BM_TukeyDepthCounts(benchmark::State& state) {
  SeededRng rng(2, 0);
  std::vector<Point2> cloud(static_cast<std::size_t>(state.range(0)));
  for (auto& p : cloud) p = Point2(rng.normal(), rng.normal());
  for (auto _ : state) {
    benchmark::DoNotOptimize(tukey_depth_counts(cloud, 1));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TukeyDepthCounts)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

GroupedDataset bench_dataset(std::size_t n, int p) {
  GroupSpec spec;
  const auto mu = mean_configuration_from_shape(0.5, 1.0, p);
  for (int g = 0; g < 3; ++g) spec.means[g] = 3.0 * mu.matrix().col(g);
  spec.n = {n, n, n};
  SeededRng rng(3, 0);
  return sample_grouped_dataset(spec, rng);
}

void BM_StratifiedBootstrap(benchmark::State& state) {
  const auto ds = bench_dataset(static_cast<std::size_t>(state.range(0)), 4);
  BootstrapOptions opts;
  opts.replicates = 1000;
  opts.threads = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(stratified_bootstrap(ds, opts));
  }
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_StratifiedBootstrap)->Arg(50)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_ConfidenceRegion(benchmark::State& state) {
  const auto ds = bench_dataset(100, 2);
  BootstrapOptions opts;
  opts.replicates = static_cast<std::size_t>(state.range(0));
  opts.threads = 1;
  const auto ens = stratified_bootstrap(ds, opts);
  for (auto _ : state) {
    benchmark::DoNotOptimize(confidence_region(ens, 0.95, 1u));
  }
}
BENCHMARK(BM_ConfidenceRegion)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
