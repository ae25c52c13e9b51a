#include <benchmark/benchmark.h>

#include <random>

#include "cartanqm/metrology.hpp"
#include "cartanqm/noise.hpp"
#include "cartanqm/sampling.hpp"

using namespace cartanqm;

namespace {

TwoQubitPureState fixed_probe() {
  return sample_haar(RngSpec{7}, 0);
}

ComplexMatrix fixed_hermitian() {
  std::mt19937_64 g{5};
  std::normal_distribution<double> n;
  ComplexMatrix m(4);
  for (int r = 0; r < 4; ++r) {
    m(r, r) = cxd{n(g), 0.0};
    for (int c = r + 1; c < 4; ++c) {
      cxd v{n(g), n(g)};
      m(r, c) = v;
      m(c, r) = std::conj(v);
    }
  }
  return m;
}

}  // namespace

static void BM_HermitianEig4(benchmark::State& state) {
  ComplexMatrix m = fixed_hermitian();
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_eig(m));
  }
}
BENCHMARK(BM_HermitianEig4);

static void BM_QfimPure(benchmark::State& state) {
  TwoQubitPureState psi = fixed_probe();
  CartanParams lam{0.4, 0.2, 0.1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(qfim_pure(psi, lam));
  }
}
BENCHMARK(BM_QfimPure);

static void BM_QfimClosedCanonical(benchmark::State& state) {
  CanonicalParams p = canonical_params_of(fixed_probe());
  for (auto _ : state) {
    benchmark::DoNotOptimize(qfim_closed_canonical(p));
  }
}
BENCHMARK(BM_QfimClosedCanonical);

static void BM_ScanRecordHaar(benchmark::State& state) {
  RngSpec rng{11};
  std::uint64_t stream = 0;
  for (auto _ : state) {
    TwoQubitPureState psi = sample_haar(rng, stream++);
    Qfim q = qfim_closed_canonical(canonical_params_of(psi));
    benchmark::DoNotOptimize(q);
  }
}
BENCHMARK(BM_ScanRecordHaar);

static void BM_NoisyPrecisionCell(benchmark::State& state) {
  TwoQubitPureState psi = probe_class_state(ProbeClass::Psi3, 0.9);
  NoiseChannel ch = NoiseChannel::make(NoiseFamily::Depolarizing, NoiseScope::Both, 0.35);
  CartanParams lam{};
  for (auto _ : state) {
    benchmark::DoNotOptimize(noisy_precision(psi, ch, lam));
  }
}
BENCHMARK(BM_NoisyPrecisionCell);

BENCHMARK_MAIN();
