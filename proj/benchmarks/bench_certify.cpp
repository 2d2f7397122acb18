#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "irrlab/lab/certify.hpp"
#include "irrlab/lab/sampler.hpp"

namespace {

void run_certify(benchmark::State& state, bool stop_early) {
  const irrlab::lab::SamplerConfig cfg{static_cast<std::size_t>(state.range(0)), 0, 2, 5};
  const auto primes = irrlab::PrimeTuple::first(4);
  irrlab::lab::CertifyOptions opts;
  opts.stop_early = stop_early;
  std::vector<std::vector<std::int64_t>> polys(128);
  for (std::size_t t = 0; t < polys.size(); ++t) {
    irrlab::lab::sample_coefficients(cfg, t, polys[t]);
    polys[t][0] = 1;
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(irrlab::lab::certify(polys[i++ % polys.size()], primes, opts));
  }
}

void BM_CertifyFull(benchmark::State& state) { run_certify(state, false); }
void BM_CertifyEarly(benchmark::State& state) { run_certify(state, true); }

BENCHMARK(BM_CertifyFull)->Arg(50)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CertifyEarly)->Arg(50)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMicrosecond);

void BM_CyclotomicDivides(benchmark::State& state) {
  const irrlab::lab::SamplerConfig cfg{400, 0, 2, 5};
  std::vector<std::int64_t> c;
  irrlab::lab::sample_coefficients(cfg, 0, c);
  const auto d = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(irrlab::lab::cyclotomic_divides(std::span<const std::int64_t>(c), d));
  }
}
BENCHMARK(BM_CyclotomicDivides)->Arg(2)->Arg(15)->Arg(60);

}  // namespace
