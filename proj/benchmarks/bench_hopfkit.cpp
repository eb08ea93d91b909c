#include <benchmark/benchmark.h>

#include <random>

#include "hopfkit/builders.hpp"
#include "hopfkit/factor.hpp"
#include "hopfkit/session.hpp"

namespace {

using namespace hopfkit;

CycScalar random_element(std::mt19937_64& rng, unsigned order) {
  std::vector<Rational> c(euler_phi(order));
  for (Rational& x : c) {
    x = Rational(static_cast<long>(rng() % 19) - 9, static_cast<unsigned long>(rng() % 5 + 1));
    x.canonicalize();
  }
  return CycScalar(order, c);
}

void BM_CyclotomicMultiply(benchmark::State& state) {
  const auto order = static_cast<unsigned>(state.range(0));
  std::mt19937_64 rng(1);
  const CycScalar a = random_element(rng, order), b = random_element(rng, order);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicMultiply)->Arg(4)->Arg(12)->Arg(24);

void BM_CyclotomicInverse(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const CycScalar a = random_element(rng, 12);
  for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_CyclotomicInverse);

void BM_FactorXnMinusOne(benchmark::State& state) {
  std::vector<Rational> c(static_cast<std::size_t>(state.range(0)) + 1);
  c.front() = -1;
  c.back() = 1;
  const Poly<Rational> p(c);
  for (auto _ : state) benchmark::DoNotOptimize(factor_rational(p));
}
BENCHMARK(BM_FactorXnMinusOne)->Arg(6)->Arg(12)->Arg(24);

void BM_FactorOverCyclotomic(benchmark::State& state) {
  const Poly<Rational> phi12({Rational(1), Rational(0), Rational(-1), Rational(0), Rational(1)});
  for (auto _ : state) benchmark::DoNotOptimize(factor_over_cyclotomic(phi12, 12));
}
BENCHMARK(BM_FactorOverCyclotomic);

void BM_AxiomsDoubleS3(benchmark::State& state) {
  const HopfData h = drinfeld_double(builtin_group("S3"));
  for (auto _ : state) benchmark::DoNotOptimize(check_axioms(h));
}
BENCHMARK(BM_AxiomsDoubleS3)->Unit(benchmark::kMillisecond);

void BM_WedderburnDoubleS3(benchmark::State& state) {
  const HopfData h = drinfeld_double(builtin_group("S3"));
  for (auto _ : state) benchmark::DoNotOptimize(primitive_idempotents(h, h.cyclotomic_order(), 0));
}
BENCHMARK(BM_WedderburnDoubleS3)->Unit(benchmark::kMillisecond);

void BM_ReportGroupAlgebraQ8(benchmark::State& state) {
  const HopfData h = group_algebra(builtin_group("Q8"));
  for (auto _ : state) {
    Session s(h, SessionConfig{});
    benchmark::DoNotOptimize(s.run(Session::suite_names()));
  }
}
BENCHMARK(BM_ReportGroupAlgebraQ8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
