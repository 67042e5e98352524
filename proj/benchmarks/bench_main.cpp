#include "rpa/rpa.hpp"

#include <benchmark/benchmark.h>

namespace {

// e1*e1 = e3, e1*e2 = e3 with P(e1) = e1 + e2, P(e2) = 2 e2, P(e3) = 3 e3.
rpa::RelPrePoissonAlgebra worked_example() {
  using rpa::Matrix;
  rpa::BilinearOp star(rpa::Space::standard(3));
  star.set(0, 0, 2, 1);
  star.set(0, 1, 2, 1);
  Matrix P(3, 3);
  P(0, 0) = 1;
  P(1, 0) = 1;
  P(1, 1) = 2;
  P(2, 2) = 3;
  return rpa::RelPrePoissonAlgebra(star, rpa::circ_from_derivation(star, P), P);
}

const rpa::PipelineResult& pipeline() {
  static const rpa::PipelineResult res = rpa::frobenius_jacobi_pipeline(worked_example());
  return res;
}

void BM_Pipeline(benchmark::State& state) {
  const rpa::RelPrePoissonAlgebra pp = worked_example();
  for (auto _ : state) benchmark::DoNotOptimize(rpa::frobenius_jacobi_pipeline(pp));
}
BENCHMARK(BM_Pipeline)->Unit(benchmark::kMillisecond);

void BM_CheckBialgebra(benchmark::State& state) {
  const rpa::BialgebraData& b = pipeline().bialgebra;
  for (auto _ : state) benchmark::DoNotOptimize(rpa::check_bialgebra(b).ok());
}
BENCHMARK(BM_CheckBialgebra)->Unit(benchmark::kMillisecond);

void BM_CheckMatchedPair(benchmark::State& state) {
  const rpa::MatchedPairData& mp = pipeline().matched_pair;
  for (auto _ : state) benchmark::DoNotOptimize(rpa::check_matched_pair(mp).ok());
}
BENCHMARK(BM_CheckMatchedPair)->Unit(benchmark::kMillisecond);

void BM_Aybe(benchmark::State& state) {
  const auto& rc = pipeline().rmatrix;
  for (auto _ : state) benchmark::DoNotOptimize(rpa::aybe_tensor(rc.r, rc.algebra.dot));
}
BENCHMARK(BM_Aybe)->Unit(benchmark::kMicrosecond);

void BM_CheckRelPoissonDouble(benchmark::State& state) {
  const rpa::RelPoissonAlgebra& dbl = pipeline().frobenius.algebra;
  for (auto _ : state) benchmark::DoNotOptimize(rpa::check_rel_poisson(dbl).ok());
}
BENCHMARK(BM_CheckRelPoissonDouble)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
