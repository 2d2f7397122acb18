#include <benchmark/benchmark.h>

#include <vector>

#include "irrlab/measures.hpp"
#include "irrlab/ptuple.hpp"

namespace {

void BM_PowerSumUniform(benchmark::State& state) {
  const auto mu = irrlab::Measure::uniform(0, static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(irrlab::fourier_power_sum(mu, 210, 0.001, 1));
  }
}
BENCHMARK(BM_PowerSumUniform)->Arg(2)->Arg(35)->Arg(1000);

void BM_PowerSumGeneric(benchmark::State& state) {
  const auto mu = irrlab::Measure::parse("0:1/4,1:1/4,3:1/3,7:1/6");
  for (auto _ : state) {
    benchmark::DoNotOptimize(irrlab::fourier_power_sum(mu, 210, 0.001, 2));
  }
}
BENCHMARK(BM_PowerSumGeneric);

void BM_MasterCondition(benchmark::State& state) {
  const std::vector<irrlab::Measure> mus{irrlab::Measure::uniform(0, static_cast<std::uint64_t>(state.range(0)))};
  const auto primes = irrlab::PrimeTuple::first(4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(irrlab::check_master_condition(mus, primes, 1, 1000000, 0.5));
  }
}
BENCHMARK(BM_MasterCondition)->Arg(35)->Arg(39)->Unit(benchmark::kMillisecond);

}  // namespace
