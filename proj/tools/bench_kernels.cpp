// Serial vs OpenMP-parallel kernels: the dense Smith normal form sweeps and
// the verification-campaign trial loop.  Both pairs compute identical values;
// these benchmarks measure what the threads buy.

#include <cstdint>
#include <random>

#include <benchmark/benchmark.h>

#include "dowker/smith.hpp"
#include "dowker/verify.hpp"

namespace {

dowker::IntMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  dowker::IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.at(i, j) = static_cast<long>(rng() % 19) - 9;
  return m;
}

void bm_snf_serial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  dowker::IntMatrix m = random_matrix(n, 42);
  for (auto _ : state) {
    dowker::SmithResult r = dowker::smith_normal_form_serial(m);
    benchmark::DoNotOptimize(r.D);
  }
}

void bm_snf_parallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  dowker::IntMatrix m = random_matrix(n, 42);
  for (auto _ : state) {
    dowker::SmithResult r = dowker::smith_normal_form_parallel(m);
    benchmark::DoNotOptimize(r.D);
  }
}

dowker::CampaignConfig bench_config(int threads) {
  dowker::CampaignConfig cfg;
  cfg.trials = 24;
  cfg.seed = 7;
  cfg.max_x = 6;
  cfg.max_y = 6;
  cfg.checks = {dowker::Check::betti, dowker::Check::quasi_iso};
  cfg.threads = threads;
  return cfg;
}

void bm_campaign_serial(benchmark::State& state) {
  dowker::CampaignConfig cfg = bench_config(1);
  for (auto _ : state) {
    dowker::VerificationReport rep = dowker::run_campaign_serial(cfg);
    benchmark::DoNotOptimize(rep.checks_run);
  }
}

void bm_campaign_parallel(benchmark::State& state) {
  dowker::CampaignConfig cfg = bench_config(0);
  for (auto _ : state) {
    dowker::VerificationReport rep = dowker::run_campaign_parallel(cfg);
    benchmark::DoNotOptimize(rep.checks_run);
  }
}

}  // namespace

BENCHMARK(bm_snf_serial)->Arg(32)->Arg(64)->Arg(96)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_snf_parallel)->Arg(32)->Arg(64)->Arg(96)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_campaign_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_campaign_parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
