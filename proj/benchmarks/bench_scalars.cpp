#include <benchmark/benchmark.h>

#include "lpi/scalars.hpp"

using namespace lpi;

static void BM_PrimeFieldMulAdd(benchmark::State& state) {
  const Ring f = Ring::prime_field(7);
  Scalar acc = Scalar::one(f);
  const Scalar x(f, 3);
  for (auto _ : state) {
    acc = acc * x + x;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_PrimeFieldMulAdd);

static void BM_RationalMulAdd(benchmark::State& state) {
  const Ring q = Ring::rationals();
  const Scalar x(q, mpq_class(3, 7));
  for (auto _ : state) {
    Scalar acc = Scalar::one(q);
    for (int i = 0; i < 16; ++i) acc = acc * x + x;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_RationalMulAdd);

static void BM_PrimeFieldInverse(benchmark::State& state) {
  const Ring f = Ring::prime_field(1009);
  const Scalar x(f, 123);
  for (auto _ : state) benchmark::DoNotOptimize(x.inverse());
}
BENCHMARK(BM_PrimeFieldInverse);
