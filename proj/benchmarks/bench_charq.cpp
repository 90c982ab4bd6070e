#include <benchmark/benchmark.h>

#include "charq/invariants.hpp"
#include "charq/reconstruct.hpp"
#include "charq/schur.hpp"
#include "charq/worked.hpp"

namespace {

using namespace charq;

void BM_SeriesMul(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    const CharacterSeries f = free_algebra_character(2, order);
    for (auto _ : state) benchmark::DoNotOptimize(qs_mul(f, f));
}
BENCHMARK(BM_SeriesMul)->Arg(16)->Arg(32);

void BM_SchurPoly(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const GenPartition lam{d, d / 2, 0};
    for (auto _ : state) benchmark::DoNotOptimize(schur_poly(3, lam));
}
BENCHMARK(BM_SchurPoly)->Arg(6)->Arg(10)->Arg(14);

void BM_SchurExpand(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    LaurentPoly p = LaurentPoly::constant(2, 1);
    const LaurentPoly x = LaurentPoly::variable(2, 0) + LaurentPoly::variable(2, 1);
    for (int i = 0; i < d; ++i) p = p * x;
    for (auto _ : state) benchmark::DoNotOptimize(schur_expand(p));
}
BENCHMARK(BM_SchurExpand)->Arg(10)->Arg(20)->Arg(30);

void BM_NagataFit(benchmark::State& state) {
    const IntSeries series = nagata_series(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(fit_numerator(series, {18, 18, 18, 18}));
}
BENCHMARK(BM_NagataFit)->Arg(200)->Arg(1000);

void BM_TensorOracle(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const GroupSpec group = SpecialLinear{2};
    for (auto _ : state)
        benchmark::DoNotOptimize(tensor_invariant_dim_oracle(group, d));
}
BENCHMARK(BM_TensorOracle)->Arg(6)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
