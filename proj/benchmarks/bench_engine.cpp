#include <benchmark/benchmark.h>

#include "lpi/identity_engine.hpp"

using namespace lpi;

static void BM_StandardS4ExhaustiveM2GF2(benchmark::State& state) {
  const Algebra m = Algebra::parse("matrix:2:gf2");
  for (auto _ : state) benchmark::DoNotOptimize(check_standard(m, 4, CheckMode::exhaustive()));
}
BENCHMARK(BM_StandardS4ExhaustiveM2GF2)->Unit(benchmark::kMillisecond);

static void BM_LpiRandom(benchmark::State& state) {
  const Algebra t = Algebra::parse("tri:3:gf2");
  const LaurentPolynomial p = parse_poly("1 - x1^4", t.ring());
  for (auto _ : state) benchmark::DoNotOptimize(check_lpi(t, p, CheckMode::random(1000, 1)));
}
BENCHMARK(BM_LpiRandom)->Unit(benchmark::kMillisecond);

static void BM_EvaluateLaurent(benchmark::State& state) {
  const Algebra m = Algebra::parse("matrix:3:gf7");
  const LaurentPolynomial p = parse_poly("1 + x1*x2*x1^-1*x2^-1 - 3*x2^2*x1^-2", m.ring());
  const Evaluator eval(p, m);
  Rng rng(4);
  const std::vector<AlgebraElement> xs{random_unit(m, rng), random_unit(m, rng)};
  for (auto _ : state) benchmark::DoNotOptimize(eval(xs));
}
BENCHMARK(BM_EvaluateLaurent);
