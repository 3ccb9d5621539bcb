// Acceptance suite: one check per shipped guarantee, one line per check.
// Exits with the number of failed criteria.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "nonelem/integrals.hpp"
#include "nonelem/selftest.hpp"
#include "nonelem/summation.hpp"
#include "nonelem/verify.hpp"

using namespace nonelem;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool pass,
            const std::string& detail) {
    std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", number,
                name.c_str(), detail.c_str());
    if (!pass) ++g_failures;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

const std::vector<IntegralSpec>& grid() { return selftest_grid(); }

// 1. Derivative identity at x in {0.5, 1, 2}, rel tol 1e-7.
void criterion_derivative_identity() {
    double worst = 0.0;
    for (const IntegralSpec& spec : grid()) {
        for (double x : {0.5, 1.0, 2.0}) {
            const double d = richardson_derivative(
                [&](double t) { return evaluate(spec, t).value; }, x);
            const double g = integrand(spec, x);
            worst = std::max(worst, std::abs(d - g) / std::abs(g));
        }
    }
    report(1, "derivative identity on the fixture grid", worst <= 1e-7,
           "max rel err " + fmt(worst) + ", tol 1e-7");
}

// 2. F(2) - F(1) vs adaptive quadrature on [1,2], rel gap <= 1e-9.
void criterion_ftc() {
    double worst = 0.0;
    bool all_pass = true;
    for (const IntegralSpec& spec : grid()) {
        const ComparisonReport r = compare_definite(spec, 1.0, 2.0, 1e-9);
        worst = std::max(worst, r.rel_gap);
        all_pass = all_pass && r.pass;
    }
    report(2, "FTC evaluation matches quadrature on [1,2]", all_pass,
           "max rel gap " + fmt(worst) + ", tol 1e-9");
}

// 3. pFq tail descriptor equals direct compensated summation, 1e-12 rel.
void criterion_tail_representation() {
    double worst = 0.0;
    for (const IntegralSpec& spec : grid()) {
        const IntegrandSeries series = build_series(spec);
        const AntiderivativeForm form = integrate_termwise(series);
        const int n0 = static_cast<int>(form.power_terms.size()) +
                       (form.log_coef ? 1 : 0);
        for (double x : {0.25, 1.0}) {
            double c = series.first_coefficient();
            for (int n = 0; n < n0; ++n) c *= series.coefficient_ratio(n);
            CompensatedSum direct;
            for (int k = 0; k < 50; ++k) {
                const double integrated = series.exponent(n0 + k) + 1.0;
                direct.add(c * std::pow(x, integrated) / integrated);
                c *= series.coefficient_ratio(n0 + k);
            }
            const double arg =
                form.tail.arg_scale * std::pow(x, form.tail.arg_power);
            const double packed = form.tail.t0_coef *
                                  std::pow(x, form.tail.t0_exponent) *
                                  pfq(form.tail.params, arg, 1e-16).value;
            worst = std::max(worst, std::abs(direct.value() - packed) /
                                        std::abs(direct.value()));
        }
    }
    report(3, "tail representation equivalence", worst <= 1e-12,
           "max rel err " + fmt(worst) + " at x in {0.25, 1}, tol 1e-12");
}

// 4. (m, eps) decomposition against the printed worked cases.
void criterion_decomposition() {
    const auto d1 = decompose(Family::Exp, 2.0, 2.0);
    const auto d2 = decompose(Family::Exp, 2.7, 1.0);
    const auto d3 = decompose(Family::Cos, 3.0, 1.0);
    const bool ok = d1.m == 1 && d1.epsilon == 0.0 && d2.m == 2 &&
                    std::abs(d2.epsilon - 0.7) <= 1e-12 && d3.m == 1 &&
                    d3.epsilon == 1.0;
    report(4, "decomposition regressions", ok,
           "exp(a=2,b=2)->(1,0), exp(a=2.7,b=1)->(2,0.7), cos(a=3,b=1)->(1,1)");
}

// 5. Gamma duplication identity, gap <= 1e-13 on the half-integer grid.
void criterion_duplication() {
    double worst = 0.0;
    for (double z = 0.5; z <= 10.0; z += 0.5) {
        worst = std::max(worst, duplication_gap(z));
    }
    report(5, "gamma duplication formula", worst <= 1e-13,
           "max gap " + fmt(worst) + " for z in {0.5,...,10}, tol 1e-13");
}

// 6. ei_beta1 vs the general path at beta = 1, 1e-12 rel.
void criterion_beta1_specialization() {
    double worst = 0.0;
    for (double alpha : {2.0, 2.7, 3.0}) {
        for (double x : {0.5, 1.0, 2.0}) {
            const double a = ei_beta1(-1.0, alpha, x).value;
            const double b = ei_antiderivative(-1.0, 1.0, alpha, x).value;
            worst = std::max(
                worst, std::abs(a - b) / std::max(std::abs(b), 1e-300));
        }
    }
    report(6, "ei_beta1 equals the general path at beta = 1", worst <= 1e-12,
           "max rel gap " + fmt(worst) + ", tol 1e-12");
}

// 7. Errata regressions: the verified closed forms, exact rationals.
//    Differing printed forms: +x^2/(720 pi) with -x^-2/4 for the cosine
//    case; -(x/4)*2F2(1,2;3,3;-x^2) for the exponential case.
void criterion_errata() {
    bool ok = true;
    {
        const ExactForm f = build_exact_form(
            {Family::Cos, Rational(1), Rational(1), Rational(3)});
        ok = ok && f.power_terms.size() == 2 &&
             f.power_terms[0].coef == Rational(-1, 4) &&
             f.power_terms[0].exponent == Rational(-4) &&
             f.power_terms[1].coef == Rational(1, 4) &&
             f.power_terms[1].exponent == Rational(-2) && f.log_coef &&
             *f.log_coef == Rational(1, 24) &&
             f.tail.t0_coef == Rational(-1, 1440) &&
             f.tail.t0_exponent == Rational(2) &&
             f.tail.a == std::vector<Rational>{1, 1} &&
             f.tail.b ==
                 std::vector<Rational>{Rational(7, 2), 4, 2} &&
             f.tail.arg_scale == Rational(-1, 4);
    }
    {
        const ExactForm f = build_exact_form(
            {Family::Exp, Rational(-1), Rational(2), Rational(2)});
        ok = ok && f.power_terms.size() == 2 &&
             f.power_terms[0].coef == Rational(1, 3) &&
             f.power_terms[0].exponent == Rational(-3) &&
             f.power_terms[1].coef == Rational(-1) &&
             f.power_terms[1].exponent == Rational(-1) && !f.log_coef &&
             f.tail.t0_coef == Rational(-1, 2) &&
             f.tail.a == std::vector<Rational>{1, Rational(1, 2)} &&
             f.tail.b == std::vector<Rational>{3, Rational(3, 2)} &&
             f.tail.arg_scale == Rational(-1);
    }
    report(7, "errata regressions", ok,
           "verified -x^-4/4 + x^-2/4 + ln|x|/24 - (x^2/1440)*2F3(1,1;7/2,4,2;"
           "-x^2/4) [printed: -x^-2/4, +x^2/(720pi)] and x^-3/3 - x^-1 - "
           "(x/2)*2F2(1,1/2;3,3/2;-x^2) [printed: -(x/4)*2F2(1,2;3,3;-x^2)]");
}

// 8. The printed fragments that do verify, reproduced exactly.
void criterion_printed_fragments() {
    const ExactForm f = build_exact_form(
        {Family::Exp, Rational(-1), Rational(1), Rational(27, 10)});
    const bool ok =
        f.power_terms.size() == 4 &&
        f.power_terms[0].coef == Rational(10, 27) &&
        f.power_terms[0].exponent == Rational(-27, 10) &&
        f.power_terms[1].coef == Rational(-10, 17) &&
        f.power_terms[1].exponent == Rational(-17, 10) &&
        f.power_terms[2].coef == Rational(5, 7) &&
        f.power_terms[2].exponent == Rational(-7, 10) &&
        f.tail.t0_coef == Rational(-5, 156) &&
        f.tail.t0_exponent == Rational(13, 10) &&
        f.tail.a == std::vector<Rational>{1, Rational(13, 10)} &&
        f.tail.b == std::vector<Rational>{5, Rational(23, 10)} &&
        f.tail.arg_scale == Rational(-1) && f.tail.arg_power == Rational(1);
    report(8, "printed fragments of the 2.7-case closed form", ok,
           "x^-2.7/2.7, -x^-1.7/1.7, +x^-0.7/1.4, -(x^1.3/31.2)*2F2(1,1.3;"
           "5,2.3;-x) all exact");
}

// 9. Cancellation diagnostics are loud.
void criterion_cancellation() {
    const IntegralSpec spec{Family::Sin, 1.0, 1.0, 4.0};
    const EvalResult at40 = evaluate(spec, 40.0);
    const ComparisonReport r = compare_definite(spec, 30.0, 40.0, 1e-9);
    const bool ok =
        at40.digits_lost >= 10.0 && (!r.pass || r.precision_flagged);
    report(9, "cancellation is reported, never silent", ok,
           "digits_lost " + fmt(at40.digits_lost) + " at x=40; [30,40] pass=" +
               (r.pass ? "true" : "false") + " flagged=" +
               (r.precision_flagged ? "true" : "false"));
}

}  // namespace

int main() {
    criterion_derivative_identity();
    criterion_ftc();
    criterion_tail_representation();
    criterion_decomposition();
    criterion_duplication();
    criterion_beta1_specialization();
    criterion_errata();
    criterion_printed_fragments();
    criterion_cancellation();
    std::printf("%d/9 criteria passed\n", 9 - g_failures);
    return g_failures;
}
