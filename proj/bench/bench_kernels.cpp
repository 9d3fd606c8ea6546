// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "baxter/checker.hpp"
#include "baxter/matrix.hpp"
#include "baxter/oracle.hpp"

using namespace baxter;

namespace {

UTMatrix<Tropical> random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  UTMatrix<Tropical> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      m.set(i, j, rng() % 4 == 0 ? Tropical::zero() : Tropical(static_cast<std::int64_t>(rng() % 100)));
    }
  }
  return m;
}

void BM_MatMulSerial(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  auto a = random_matrix(n, 1), b = random_matrix(n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mat_mul_serial(a, b));
  }
}

void BM_MatMulParallel(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  auto a = random_matrix(n, 1), b = random_matrix(n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mat_mul(a, b));
  }
}

// Holds at every rank, so the whole grid is searched.
Identity const kSearch = parse_identity("w x y z x ~= w x y z x");

void BM_OracleSerial(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_check_serial(kSearch, n, {2, 100'000'000}));
  }
}

void BM_OracleParallel(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_check(kSearch, n, {2, 100'000'000}));
  }
}

Identity long_identity(std::size_t len, int vars) {
  std::mt19937_64 rng(3);
  IWord u;
  for (std::size_t i = 0; i < len; ++i) {
    IVar x = var("v" + std::to_string(rng() % static_cast<unsigned>(vars)));
    u.letters.push_back(rng() % 2 ? x.star() : x);
  }
  return {u, u};
}

void BM_Check(benchmark::State& state) {
  Identity e = long_identity(static_cast<std::size_t>(state.range(0)), 50);
  int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check(e, n));
  }
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_MatMulSerial)->Arg(30)->Arg(180)->Arg(600);
BENCHMARK(BM_MatMulParallel)->Arg(30)->Arg(180)->Arg(600);
BENCHMARK(BM_OracleSerial)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Check)
    ->ArgsProduct({{1'000, 10'000, 100'000}, {2, 3, 4}})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
