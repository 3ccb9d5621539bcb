#include <benchmark/benchmark.h>

#include "nonelem/integrals.hpp"
#include "nonelem/verify.hpp"

using namespace nonelem;

static void BM_Gamma(benchmark::State& state) {
    double z = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(nonelem::gamma(z));
        z += 0.37;
        if (z > 50.0) z = 0.5;
    }
}
BENCHMARK(BM_Gamma);

static void BM_Pfq_SmallArg(benchmark::State& state) {
    const PFQParams p{{1.0, 1.0}, {3.5, 4.0, 2.0}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(pfq(p, -0.25).value);
    }
}
BENCHMARK(BM_Pfq_SmallArg);

static void BM_Pfq_LargeArg(benchmark::State& state) {
    const PFQParams p{{1.0, 1.0}, {3.5, 4.0, 2.0}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(pfq(p, -400.0).value);
    }
}
BENCHMARK(BM_Pfq_LargeArg);

static void BM_BuildForm(benchmark::State& state) {
    const IntegralSpec spec{Family::Cos, 1.0, 1.0, 3.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(integrate_termwise(build_series(spec)));
    }
}
BENCHMARK(BM_BuildForm);

// The point of shipping closed forms: F(b) - F(a) vs integrating numerically.
static void BM_Definite_FTC(benchmark::State& state) {
    const IntegralSpec spec{Family::Cos, 1.0, 1.0, 3.0};
    const AntiderivativeForm form = integrate_termwise(build_series(spec));
    for (auto _ : state) {
        benchmark::DoNotOptimize(eval_form(form, 2.0).value -
                                 eval_form(form, 1.0).value);
    }
}
BENCHMARK(BM_Definite_FTC);

static void BM_Definite_Quadrature(benchmark::State& state) {
    const IntegralSpec spec{Family::Cos, 1.0, 1.0, 3.0};
    const auto f = [&](double x) { return integrand(spec, x); };
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            adaptive_quadrature(f, 1.0, 2.0, 1e-12).value);
    }
}
BENCHMARK(BM_Definite_Quadrature);

BENCHMARK_MAIN();
