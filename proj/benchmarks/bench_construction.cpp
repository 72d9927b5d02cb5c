#include <benchmark/benchmark.h>

#include "lpi/construction.hpp"

using namespace lpi;

static void BM_DeriveF2(benchmark::State& state) {
  const Ring q = Ring::rationals();
  UnivariatePoly f1(q);
  f1.add_term(0, Scalar::one(q));
  f1.add_term(state.range(0), Scalar(q, -1));
  for (auto _ : state) benchmark::DoNotOptimize(derive_f2(f1));
}
BENCHMARK(BM_DeriveF2)->Arg(1)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_DerivePipeline(benchmark::State& state) {
  const LaurentPolynomial p = parse_poly("1 - x1^2*x2 + 3*x2^-1*x1", Ring::prime_field(7));
  for (auto _ : state) benchmark::DoNotOptimize(derive(p));
}
BENCHMARK(BM_DerivePipeline)->Unit(benchmark::kMillisecond);

static void BM_VandermondeExtract(benchmark::State& state) {
  const Algebra t = Algebra::parse("tri:3:q");
  const ConstructionReport k = derive(parse_poly("1 - x1^4", t.ring()));
  Rng rng(9);
  const AlgebraElement a = random_square_zero(t, rng);
  const auto [b, c] = random_zero_product_pair(t, rng);
  const AlgebraElement u = random_element(t, rng);
  for (auto _ : state) benchmark::DoNotOptimize(vandermonde_extract(k.f, a, b, c, u));
}
BENCHMARK(BM_VandermondeExtract)->Unit(benchmark::kMillisecond);
