#include <benchmark/benchmark.h>

#include <q3inv/cyclotomic.hpp>

using q3inv::Cyclotomic;

static void BM_CyclotomicMultiply(benchmark::State& state) {
  const unsigned N = static_cast<unsigned>(state.range(0));
  Cyclotomic a = Cyclotomic::zero(), b = Cyclotomic::zero();
  for (unsigned k = 0; k < Cyclotomic::phi(N); ++k) {
    a += Cyclotomic::root_of_unity(N, k) * q3inv::make_rational(k + 1, 3);
    b += Cyclotomic::root_of_unity(N, k) * q3inv::make_rational(2 * k + 1, 5);
  }
  for (auto _ : state) {
    Cyclotomic c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_CyclotomicMultiply)->Arg(5)->Arg(8)->Arg(40)->Arg(120);

static void BM_CyclotomicInverse(benchmark::State& state) {
  const unsigned N = static_cast<unsigned>(state.range(0));
  Cyclotomic a = Cyclotomic::one();
  for (unsigned k = 1; k < Cyclotomic::phi(N); ++k)
    a += Cyclotomic::root_of_unity(N, k) * q3inv::make_rational(k, 7);
  for (auto _ : state) {
    Cyclotomic c = a.inverse();
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_CyclotomicInverse)->Arg(5)->Arg(40);

BENCHMARK_MAIN();
