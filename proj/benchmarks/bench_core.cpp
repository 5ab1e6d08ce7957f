#include <benchmark/benchmark.h>

#include "supercong/bernoulli.hpp"
#include "supercong/formulas.hpp"
#include "supercong/harness.hpp"
#include "supercong/oracles.hpp"

using namespace supercong;

namespace {

void BM_MontgomeryMul(benchmark::State& state) {
  const Modulus m = make_modulus(1999, 11);
  Residue x(123456789, m);
  const Residue y(987654321, m);
  for (auto _ : state) {
    x = x * y;
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_MontgomeryMul);

void BM_SmallModulusMul(benchmark::State& state) {
  const Modulus m = make_modulus(1999, 5);
  Residue x(123456789, m);
  const Residue y(987654321, m);
  for (auto _ : state) {
    x = x * y;
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_SmallModulusMul);

void BM_FactorialMod(benchmark::State& state) {
  const auto p = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(factorial_mod(p, 7));
}
BENCHMARK(BM_FactorialMod)->Arg(101)->Arg(1999);

void BM_DividedSet(benchmark::State& state) {
  const auto p = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(divided_set(p));
}
BENCHMARK(BM_DividedSet)->Arg(101)->Arg(1999);

void BM_QTilde(benchmark::State& state) {
  const auto p = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(q_tilde(6, p, 6));
}
BENCHMARK(BM_QTilde)->Arg(101)->Arg(1999);

void BM_OmegaThm2(benchmark::State& state) {
  const DividedBernoulliSet set = divided_set(static_cast<u64>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(omega_thm2(set));
}
BENCHMARK(BM_OmegaThm2)->Arg(1999);

void BM_CheckPrime(benchmark::State& state) {
  const RunConfig cfg;
  const auto p = static_cast<u64>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_prime(p, cfg));
}
BENCHMARK(BM_CheckPrime)->Arg(101)->Arg(1999)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
