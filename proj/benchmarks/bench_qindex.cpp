// Microbenchmarks for the hot paths: full analysis, the splitting engine,
// factorization mod p, discriminants and hull construction.

#include "qindex/quartic_index.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

using namespace qindex;

namespace {

struct RefInput {
  const char *a, *b, *c;
};
const RefInput kRefInputs[] = {
    {"4913", "867", "119"},
    {"25", "1125", "405"},
    {"6", "42", "975"},
    {"21156911906816", "448", "287"},
};

void BM_analyze(benchmark::State& state) {
  const RefInput& in = kRefInputs[state.range(0)];
  const BigInt a(in.a), b(in.b), c(in.c);
  for (auto _ : state) {
    IndexReport rep = analyze(a, b, c);
    benchmark::DoNotOptimize(rep.i_K);
  }
}
BENCHMARK(BM_analyze)->DenseRange(0, 3);

void BM_ore_split(benchmark::State& state) {
  const long p = state.range(0);
  const IntPoly F = Quadrinomial{BigInt(4913), BigInt(867), BigInt(119)}.to_poly();
  for (auto _ : state) {
    OreResult res = ore_split(F, p);
    benchmark::DoNotOptimize(res.index_valuation);
  }
}
BENCHMARK(BM_ore_split)->Arg(2)->Arg(3);

void BM_shift_regularize(benchmark::State& state) {
  // This input needs a shifted generator at p = 2.
  const IntPoly F = Quadrinomial{BigInt(25), BigInt(1125), BigInt(405)}.to_poly();
  for (auto _ : state) {
    ShiftOutcome out = regularize_by_shift(F, 2);
    benchmark::DoNotOptimize(out.attempts);
  }
}
BENCHMARK(BM_shift_regularize);

void BM_factor_mod_p(benchmark::State& state) {
  const long p = state.range(0);
  const IntPoly F = Quadrinomial{BigInt(6), BigInt(42), BigInt(975)}.to_poly();
  for (auto _ : state) {
    ModFactorization f = factor_mod_p(F, p);
    benchmark::DoNotOptimize(f.factors.size());
  }
}
BENCHMARK(BM_factor_mod_p)->Arg(2)->Arg(3)->Arg(97);

void BM_discriminant(benchmark::State& state) {
  const IntPoly F =
      Quadrinomial{BigInt("123456789123456789"), BigInt("-987654321987654321"),
                   BigInt("555555555555555555")}
          .to_poly();
  for (auto _ : state) {
    DiscriminantData d = discriminant(F);
    benchmark::DoNotOptimize(d.disc);
  }
}
BENCHMARK(BM_discriminant);

void BM_lower_hull(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<PolygonPoint> pts;
  for (long x = 0; x < state.range(0); ++x)
    pts.push_back({x, static_cast<long>(rng() % 64)});
  for (auto _ : state) {
    auto hull = lower_hull(pts);
    benchmark::DoNotOptimize(hull.size());
  }
}
BENCHMARK(BM_lower_hull)->Arg(8)->Arg(64)->Arg(512);

void BM_verify_family_small(benchmark::State& state) {
  for (auto _ : state) {
    FamilyReport rep = verify_family(1, 1, 2, 7);
    benchmark::DoNotOptimize(rep.instances);
  }
}
BENCHMARK(BM_verify_family_small);

}  // namespace

BENCHMARK_MAIN();
