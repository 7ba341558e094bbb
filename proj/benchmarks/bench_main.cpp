#include <benchmark/benchmark.h>

#include "mmu/algebra.hpp"
#include "mmu/kovacs.hpp"
#include "mmu/matfq.hpp"
#include "mmu/subgrpd.hpp"

namespace {

using namespace mmu;

void BM_RankSequence(benchmark::State& state) {
  const Field& f = Field::get(static_cast<int>(state.range(0)));
  const Mat e = e_matrix(f, 4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(rank_sequence(e));
}
BENCHMARK(BM_RankSequence)->Arg(2)->Arg(3)->Arg(5);

// Args: n, q, r.
void BM_EtaR(benchmark::State& state) {
  const Field& f = Field::get(static_cast<int>(state.range(1)));
  const int n = static_cast<int>(state.range(0)), r = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(eta_r(f, n, r));
}
BENCHMARK(BM_EtaR)->Args({2, 2, 1})->Args({3, 2, 2})->Args({3, 3, 2})->Args({4, 2, 3})->Unit(benchmark::kMillisecond);

void BM_AlgMulEtaSquared(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const AlgElem u = eta_r(Field::get(2), n, n - 1);
  for (auto _ : state) benchmark::DoNotOptimize(alg_mul(u, u));
}
BENCHMARK(BM_AlgMulEtaSquared)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_VerifyUnit(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0)), q = static_cast<int>(state.range(1));
  const AlgElem u = eta_r(Field::get(q), n, n - 1);
  for (auto _ : state) benchmark::DoNotOptimize(verify_unit(u, n - 1));
}
BENCHMARK(BM_VerifyUnit)->Args({2, 2})->Args({2, 3})->Args({3, 2})->Unit(benchmark::kMillisecond);

void BM_SolveUnitCoeffs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(solve_unit_coeffs(Field::get(2), n, n - 1));
}
BENCHMARK(BM_SolveUnitCoeffs)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_InterpolateCoeffs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(interpolate_coeffs(n, n - 1, {2, 3, 4, 5, 7}));
}
BENCHMARK(BM_InterpolateCoeffs)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_PsiFullRank(benchmark::State& state) {
  const Field& f = Field::get(static_cast<int>(state.range(1)));
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(psi_full_rank(f, n));
}
BENCHMARK(BM_PsiFullRank)->Args({2, 2})->Args({2, 3})->Unit(benchmark::kMillisecond);

}  // namespace

// The packaged benchmark_main archive is LTO bytecode from another compiler.
BENCHMARK_MAIN();
