#include <benchmark/benchmark.h>

#include <random>

#include "dforge/cauchy.hpp"
#include "dforge/constructors.hpp"
#include "dforge/covers.hpp"
#include "dforge/games.hpp"

using namespace dforge;

static void BM_RationalsEnumeration(benchmark::State& state) {
  for (auto _ : state) {
    for (std::size_t k = 1; k <= static_cast<std::size_t>(state.range(0)); ++k) benchmark::DoNotOptimize(rationals_01(k));
  }
}
BENCHMARK(BM_RationalsEnumeration)->Arg(64)->Arg(1024);

static void BM_Trisect(benchmark::State& state) {
  const Enumeration e = Enumeration::rationals_01();
  for (auto _ : state) benchmark::DoNotOptimize(trisect(e, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Trisect)->Arg(16)->Arg(64)->Arg(256);

static void BM_Cantor1874(benchmark::State& state) {
  const Enumeration e = Enumeration::rationals_01();
  for (auto _ : state) benchmark::DoNotOptimize(cantor1874(e, IntervalQ::unit(), static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_Cantor1874)->Arg(8)->Arg(64);

static void BM_DiagonalSurds(benchmark::State& state) {
  const Enumeration e = Enumeration::surds_bounded();
  for (auto _ : state) benchmark::DoNotOptimize(diagonal(e, 10, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_DiagonalSurds)->Arg(16)->Arg(64);

static void BM_PerfectEscapeCantor(benchmark::State& state) {
  const Enumeration e = Enumeration::rationals_01();
  const PerfectSetOracle p(PerfectSetKind::cantor_middle_thirds);
  for (auto _ : state) benchmark::DoNotOptimize(perfect_escape(p, e, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_PerfectEscapeCantor)->Arg(16)->Arg(64);

static void BM_Audit(benchmark::State& state) {
  const Enumeration e = Enumeration::surds_bounded();
  const auto [result, cert] = trisect(e, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_certificate(result, cert, e));
}
BENCHMARK(BM_Audit)->Arg(64)->Arg(256);

static void BM_HeineBorel(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<IntervalQ> pieces;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational lo(static_cast<long long>(rng() % 1000) - 50, 1000);
    pieces.push_back(IntervalQ::open(lo, lo + Rational(static_cast<long long>(rng() % 80 + 20), 1000)));
  }
  pieces.push_back(IntervalQ::open(Rational(-1), Rational(2)));
  const Cover c(IntervalQ::unit(), pieces);
  for (auto _ : state) benchmark::DoNotOptimize(heine_borel_subcover(c));
}
BENCHMARK(BM_HeineBorel)->Arg(100)->Arg(1000);

static void BM_Wenner(benchmark::State& state) {
  const Enumeration e = Enumeration::surds_bounded();
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<CauchyReal> inputs;
  for (std::size_t k = 1; k <= n; ++k) inputs.push_back(CauchyReal::from_point(require_point(e, k), n + 2));
  for (auto _ : state) benchmark::DoNotOptimize(wenner_escape(inputs, n));
}
BENCHMARK(BM_Wenner)->Arg(8)->Arg(32);

static void BM_IntervalGame(benchmark::State& state) {
  const Enumeration e = Enumeration::rationals_01();
  for (auto _ : state) {
    IntervalGame g(e, AlicePolicy::parse("random:1"), BobPolicy::strategy, static_cast<std::size_t>(state.range(0)));
    benchmark::DoNotOptimize(g.audit());
  }
}
BENCHMARK(BM_IntervalGame)->Arg(64);
BENCHMARK_MAIN();
