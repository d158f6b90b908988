// Parallel kernels against their serial references.

#include "pslopes/diffmod.hpp"
#include "pslopes/frobenius.hpp"

#include <benchmark/benchmark.h>

using namespace pslopes;

namespace {

DiffModule slope_module(long K) {
    auto ctx = make_ctx(3, 4 * K);
    DiffModule M{ctx, MatLaurent(ctx, 2, 2), Annulus(0, 1)};
    M.G(0, 0) = LaurentPoly(ctx);
    M.G(0, 1) = LaurentPoly::monomial(KElem::from_rational(ctx, 1), 0);
    M.G(1, 0) = LaurentPoly::monomial(KElem::pi(ctx), -3);
    M.G(1, 1) = LaurentPoly::monomial(KElem::from_rational(ctx, -1), -1);
    return M;
}

LaurentPoly dense(const Ctx& ctx, long n) {
    std::vector<KElem> c;
    for (long i = 0; i < n; ++i) c.push_back(KElem::from_rational(ctx, frac(i + 1, 2 * i + 3), i % 3));
    return LaurentPoly(ctx, -n / 2, c);
}

std::vector<AlphaJob> alpha_jobs() {
    std::vector<AlphaJob> jobs;
    for (long p : {2, 3, 5})
        for (long l = 1; l <= 3; ++l)
            for (long s = 1; s <= 4; ++s) jobs.push_back({p, l, s});
    return jobs;
}

}  // namespace

static void BM_delta_matrices(benchmark::State& st) {
    DiffModule M = slope_module(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(delta_matrices(M, st.range(0)));
}
static void BM_delta_matrices_serial(benchmark::State& st) {
    DiffModule M = slope_module(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(delta_matrices_serial(M, st.range(0)));
}
BENCHMARK(BM_delta_matrices)->Arg(27)->Arg(81)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_delta_matrices_serial)->Arg(27)->Arg(81)->Unit(benchmark::kMillisecond);

static void BM_mul(benchmark::State& st) {
    auto ctx = make_ctx(5, 60);
    LaurentPoly f = dense(ctx, st.range(0)), g = dense(ctx, st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(mul(f, g));
}
static void BM_mul_serial(benchmark::State& st) {
    auto ctx = make_ctx(5, 60);
    LaurentPoly f = dense(ctx, st.range(0)), g = dense(ctx, st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(mul_serial(f, g));
}
BENCHMARK(BM_mul)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mul_serial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_alpha_reports(benchmark::State& st) {
    auto jobs = alpha_jobs();
    for (auto _ : st) benchmark::DoNotOptimize(alpha_reports(jobs));
}
static void BM_alpha_reports_serial(benchmark::State& st) {
    auto jobs = alpha_jobs();
    for (auto _ : st) benchmark::DoNotOptimize(alpha_reports_serial(jobs));
}
BENCHMARK(BM_alpha_reports)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_alpha_reports_serial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
