#include <benchmark/benchmark.h>

#include <random>

#include "drinfeld/anderson.hpp"
#include "drinfeld/infinite.hpp"
#include "drinfeld/shtuka.hpp"
#include "drinfeld/zeta.hpp"

using namespace drinfeld;

namespace {

std::shared_ptr<const KContext> curve(int which) {
  static auto q3 = KContext::make(FiniteField(3, 1), Weierstrass{0, 0, 0, 2, 2});
  static auto q4 = KContext::make(FiniteField(2, 2, {1, 1, 1}), Weierstrass{0, 0, 1, 0, 2});
  return which == 3 ? q3 : q4;
}

FqPoly random_poly(const FiniteField& F, std::mt19937_64& rng, int deg) {
  std::uniform_int_distribution<int> c(0, F.q() - 1);
  std::vector<FqCode> v(deg + 1);
  for (auto& x : v) x = static_cast<FqCode>(c(rng));
  v.back() = 1;
  return FqPoly(F, std::move(v));
}

void BM_PolyGcd(benchmark::State& st) {
  const KContext& K = *curve(static_cast<int>(st.range(0)));
  std::mt19937_64 rng(1);
  int d = static_cast<int>(st.range(1));
  FqPoly a = random_poly(K.field(), rng, d), b = random_poly(K.field(), rng, d - 1);
  for (auto _ : st) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_PolyGcd)->Args({3, 1000})->Args({4, 1000})->Args({3, 8000})->Args({4, 8000});

void BM_KElemMul(benchmark::State& st) {
  const KContext& K = *curve(static_cast<int>(st.range(0)));
  std::mt19937_64 rng(2);
  const FiniteField& F = K.field();
  int d = static_cast<int>(st.range(1));
  KElem x(K, random_poly(F, rng, d), random_poly(F, rng, d), random_poly(F, rng, d));
  KElem y(K, random_poly(F, rng, d), random_poly(F, rng, d), random_poly(F, rng, d));
  for (auto _ : st) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_KElemMul)->Args({3, 50})->Args({4, 50})->Args({4, 400});

void BM_Shtuka(benchmark::State& st) {
  const KContext& K = *curve(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(shtuka(K));
}
BENCHMARK(BM_Shtuka)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_TensorBasis(benchmark::State& st) {
  const KContext& K = *curve(static_cast<int>(st.range(0)));
  ShtukaData S = shtuka(K);
  for (auto _ : st) benchmark::DoNotOptimize(tensor_basis(K, S, static_cast<int>(st.range(1))));
}
BENCHMARK(BM_TensorBasis)->Args({3, 2})->Args({4, 3})->Unit(benchmark::kMillisecond);

void BM_ExpCoeffs(benchmark::State& st) {
  const KContext& K = *curve(static_cast<int>(st.range(0)));
  int n = static_cast<int>(st.range(1));
  ShtukaData S = shtuka(K);
  TensorBasis B = tensor_basis(K, S, n);
  AndersonModule M = build_module(K, B);
  for (auto _ : st) benchmark::DoNotOptimize(exp_coeffs(K, M, S, B, static_cast<int>(st.range(2))));
}
BENCHMARK(BM_ExpCoeffs)->Args({3, 2, 4})->Args({4, 2, 4})->Args({4, 3, 4})->Unit(benchmark::kMillisecond);

void BM_PowerSum(benchmark::State& st) {
  const KContext& K = *curve(static_cast<int>(st.range(0)));
  ShtukaData S = shtuka(K);
  int i = static_cast<int>(st.range(1));
  bool closed = st.range(2) != 0;
  for (auto _ : st)
    benchmark::DoNotOptimize(closed ? power_sum_closed(K, S, i, 1) : power_sum_bruteforce(K, i, 1));
}
BENCHMARK(BM_PowerSum)->Args({3, 4, 0})->Args({3, 4, 1})->Args({4, 4, 0})->Args({4, 4, 1})->Unit(benchmark::kMillisecond);

void BM_SigmaExpand(benchmark::State& st) {
  const KContext& K = *curve(static_cast<int>(st.range(0)));
  ShtukaData S = shtuka(K);
  TensorBasis B = tensor_basis(K, S, 2);
  for (auto _ : st) benchmark::DoNotOptimize(sigma_expand(K, S, B, KElem::one(K)));
}
BENCHMARK(BM_SigmaExpand)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_InfinityChart(benchmark::State& st) {
  const KContext& K = *curve(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(infinity_chart(K, static_cast<int>(st.range(1))));
}
BENCHMARK(BM_InfinityChart)->Args({3, 64})->Args({4, 64})->Args({4, 256})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
