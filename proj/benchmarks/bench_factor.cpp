#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "irrlab/factor.hpp"
#include "irrlab/lab/degree_set.hpp"
#include "irrlab/lab/sampler.hpp"

namespace {

using irrlab::MonicPoly;
using irrlab::Prime;

std::vector<MonicPoly> sample(std::uint64_t p, std::size_t n, std::size_t count) {
  irrlab::lab::SamplerConfig cfg{n, 0, 2, 11};
  std::vector<MonicPoly> out;
  std::vector<std::int64_t> c;
  for (std::size_t t = 0; t < count; ++t) {
    irrlab::lab::sample_coefficients(cfg, t, c);
    out.push_back(MonicPoly::from_integers(Prime(p), c));
  }
  return out;
}

void BM_FactorDegrees(benchmark::State& state) {
  const auto polys = sample(static_cast<std::uint64_t>(state.range(0)), static_cast<std::size_t>(state.range(1)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(irrlab::factor_degrees(polys[i++ % polys.size()]));
  }
}
BENCHMARK(BM_FactorDegrees)->ArgsProduct({{2, 3, 7, 1009}, {50, 200, 400}})->Unit(benchmark::kMicrosecond);

void BM_Factor(benchmark::State& state) {
  const auto polys = sample(static_cast<std::uint64_t>(state.range(0)), static_cast<std::size_t>(state.range(1)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(irrlab::factor(polys[i++ % polys.size()], 1));
  }
}
BENCHMARK(BM_Factor)->ArgsProduct({{2, 7}, {50, 200}})->Unit(benchmark::kMicrosecond);

void BM_IsIrreducible(benchmark::State& state) {
  const auto polys = sample(static_cast<std::uint64_t>(state.range(0)), static_cast<std::size_t>(state.range(1)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(irrlab::is_irreducible(polys[i++ % polys.size()]));
  }
}
BENCHMARK(BM_IsIrreducible)->ArgsProduct({{2, 7}, {50, 200}})->Unit(benchmark::kMicrosecond);

void BM_AttainableDegrees(benchmark::State& state) {
  const auto polys = sample(3, static_cast<std::size_t>(state.range(0)), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(irrlab::lab::attainable_degrees(polys[i++ % polys.size()]));
  }
}
BENCHMARK(BM_AttainableDegrees)->Arg(100)->Arg(400)->Unit(benchmark::kMicrosecond);

}  // namespace
