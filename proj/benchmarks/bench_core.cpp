#include <benchmark/benchmark.h>

#include <cmath>

#include "relsat/bell_stats.hpp"
#include "relsat/orbits.hpp"
#include "relsat/polarization_diffusion.hpp"
#include "relsat/wigner.hpp"

using namespace relsat;

static void BM_WignerAngle(benchmark::State& state) {
  const LorentzMatrix lambda = LorentzMatrix::boost(Vec3(2e-5, -1e-5, 3e-6));
  const FourMomentum p = FourMomentum::photon(Vec3(0.3, 0.4, std::sqrt(0.75)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wignerAngle(lambda, p, StandardRotationConvention::MinimalAxis));
  }
}
BENCHMARK(BM_WignerAngle);

static void BM_EvolveEquator(benchmark::State& state) {
  const int modes = static_cast<int>(state.range(0));
  const CircleDensity rho = CircleDensity::wrappedGaussian(1.0, 0.3, modes);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolveEquator(rho, {0.1, 0.5}, 1.0));
  }
}
BENCHMARK(BM_EvolveEquator)->Arg(64)->Arg(256)->Arg(1024);

static void BM_EvolveEquatorGeneral(benchmark::State& state) {
  const CircleDensity rho = CircleDensity::wrappedGaussian(1.0, 0.3, 64);
  const EquatorGenerator gen = EquatorGenerator::constant({0.1, 0.5});
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolveEquatorGeneral(rho, gen, 1.0));
  }
}
BENCHMARK(BM_EvolveEquatorGeneral);

static void BM_SimulateCoincidences(benchmark::State& state) {
  const ChshSettings settings = standardChshSettings();
  const auto pairs = static_cast<std::uint64_t>(state.range(0));
  const auto workers = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulateCoincidences(0.9, pairs, settings, 1, workers));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SimulateCoincidences)->Args({1 << 20, 1})->Args({1 << 20, 4})->UseRealTime();

static void BM_Propagate(benchmark::State& state) {
  const OrbitSpec gto = orbitPreset("gto").orbit;
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(propagate(gto, t));
    t += 17.0;
  }
}
BENCHMARK(BM_Propagate);
BENCHMARK_MAIN();
