#include <benchmark/benchmark.h>

#include "zetalab/bbp.hpp"
#include "zetalab/pbern.hpp"
#include "zetalab/polylog.hpp"
#include "zetalab/series.hpp"

using namespace zetalab;

static void BM_SurdMul(benchmark::State& state) {
    SurdValue u{Rational(5, 3), Rational(-7, 2), Rational(1, 6), Rational(11, 4)};
    SurdValue v{Rational(-2, 7), Rational(3, 5), Rational(9, 8), Rational(-1, 3)};
    for (auto _ : state) benchmark::DoNotOptimize(surd_mul(u, v));
}
BENCHMARK(BM_SurdMul);

static void BM_SurdInv(benchmark::State& state) {
    SurdValue u{Rational(5, 3), Rational(-7, 2), Rational(1, 6), Rational(11, 4)};
    for (auto _ : state) benchmark::DoNotOptimize(surd_inv(u));
}
BENCHMARK(BM_SurdInv);

static void BM_PTableRows(benchmark::State& state) {
    const long rows = state.range(0);
    for (auto _ : state) {
        PTable t;
        t.ensure_rows(rows);
        benchmark::DoNotOptimize(t.sigma_coeff(rows));
    }
}
BENCHMARK(BM_PTableRows)->Arg(20)->Arg(30)->Arg(40);

static void BM_ZetaEM(benchmark::State& state) {
    const long prec = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(zeta_em(3, prec));
}
BENCHMARK(BM_ZetaEM)->Arg(128)->Arg(256)->Arg(512);

static void BM_Zeta3Alternating(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(zeta3_alternating(256));
}
BENCHMARK(BM_Zeta3Alternating);

static void BM_LiDirectNear1(benchmark::State& state) {
    HPReal x(Rational(8, 9), working_precision(256));
    for (auto _ : state) benchmark::DoNotOptimize(li_direct(3, x, 256));
}
BENCHMARK(BM_LiDirectNear1);

static void BM_EvalMethod(benchmark::State& state) {
    const MethodId id = static_cast<MethodId>(state.range(0));
    PTable t;
    eval_method(t, id, 4, 256);  // warm the table
    t.freeze();
    for (auto _ : state) benchmark::DoNotOptimize(eval_method(t, id, 4, 256));
    state.SetLabel(to_string(id));
}
BENCHMARK(BM_EvalMethod)
    ->Arg(static_cast<long>(MethodId::CLAUSEN_X6))
    ->Arg(static_cast<long>(MethodId::POLY_LOG2))
    ->Arg(static_cast<long>(MethodId::TRI))
    ->Arg(static_cast<long>(MethodId::SIX))
    ->Arg(static_cast<long>(MethodId::FINAL))
    ->Arg(static_cast<long>(MethodId::BBP));

static void BM_BBP(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(bbp_zeta3(state.range(0), 256));
}
BENCHMARK(BM_BBP)->Arg(3)->Arg(10);

BENCHMARK_MAIN();
