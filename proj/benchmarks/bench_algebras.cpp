#include <benchmark/benchmark.h>

#include "lpi/algebras.hpp"

using namespace lpi;

static void BM_MatrixMultiply(benchmark::State& state) {
  const Algebra m = Algebra::matrix(static_cast<std::size_t>(state.range(0)), Ring::prime_field(5));
  Rng rng(1);
  const AlgebraElement x = random_element(m, rng);
  const AlgebraElement y = random_element(m, rng);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_MatrixMultiply)->Arg(2)->Arg(3)->Arg(4)->Arg(6);

static void BM_GroupAlgebraMultiply(benchmark::State& state) {
  const Algebra kg = Algebra::parse("grpalg:q8:gf3");
  Rng rng(2);
  const AlgebraElement x = random_element(kg, rng);
  const AlgebraElement y = random_element(kg, rng);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_GroupAlgebraMultiply);

static void BM_MatrixInverse(benchmark::State& state) {
  const Algebra m = Algebra::matrix(3, Ring::prime_field(7));
  const AlgebraElement u = random_unit(m, std::uint64_t{3});
  for (auto _ : state) benchmark::DoNotOptimize(inverse(u));
}
BENCHMARK(BM_MatrixInverse);

static void BM_EnumerateUnits(benchmark::State& state) {
  const Algebra m = Algebra::parse("matrix:2:gf3");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_units(m));
}
BENCHMARK(BM_EnumerateUnits);
