#include "nonelem/selftest.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "nonelem/integrals.hpp"
#include "nonelem/summation.hpp"
#include "nonelem/verify.hpp"

namespace nonelem {

const std::vector<IntegralSpec>& selftest_grid() {
    static const std::vector<IntegralSpec> grid = {
        {Family::Sin, 1.0, 2.0, 1.5},  {Family::Sin, 1.0, 1.0, 4.0},
        {Family::Sinh, 1.0, 2.0, 1.5}, {Family::Cos, 1.0, 1.0, 3.0},
        {Family::Cosh, 1.0, 1.0, 3.0}, {Family::Exp, -1.0, 2.0, 2.0},
        {Family::Exp, -1.0, 1.0, 2.7}, {Family::Exp, 1.0, 1.0, 2.0}};
    return grid;
}

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

std::string spec_tag(const IntegralSpec& s) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s(%g,%g,%g)", family_name(s.family),
                  s.lambda, s.beta, s.alpha);
    return buf;
}

struct Runner {
    SelftestReport report;
    std::ostream& out;

    void record(const std::string& name, bool pass, const std::string& detail) {
        report.checks.push_back({name, pass, detail});
        if (!pass) ++report.failures;
        out << (pass ? "[PASS] " : "[FAIL] ") << name;
        if (!detail.empty()) out << " : " << detail;
        out << "\n";
    }
};

// Tail summed directly from the series terms, bypassing the pFq descriptor.
double direct_tail_sum(const IntegrandSeries& series, int n0, double x,
                       int terms) {
    double c = series.first_coefficient();
    for (int n = 0; n < n0; ++n) c *= series.coefficient_ratio(n);
    CompensatedSum sum;
    for (int k = 0; k < terms; ++k) {
        const int n = n0 + k;
        const double integrated = series.exponent(n) + 1.0;
        sum.add(c * std::pow(x, integrated) / integrated);
        c *= series.coefficient_ratio(n);
    }
    return sum.value();
}

int tail_start_index(const AntiderivativeForm& form) {
    return static_cast<int>(form.power_terms.size()) +
           (form.log_coef ? 1 : 0);
}

void check_derivative_identity(Runner& r) {
    for (const IntegralSpec& spec : selftest_grid()) {
        double worst = 0.0;
        for (double x : {0.5, 1.0, 2.0}) {
            const double d = richardson_derivative(
                [&](double t) { return evaluate(spec, t).value; }, x);
            const double g = integrand(spec, x);
            worst = std::max(worst, std::abs(d - g) / std::abs(g));
        }
        r.record("derivative_identity_" + std::string(spec_tag(spec)),
                 worst <= 1e-7, "max rel err " + fmt(worst) + " (tol 1e-7)");
    }
}

void check_ftc_vs_quadrature(Runner& r) {
    for (const IntegralSpec& spec : selftest_grid()) {
        const ComparisonReport c = compare_definite(spec, 1.0, 2.0, 1e-9);
        r.record("ftc_vs_quadrature_" + std::string(spec_tag(spec)), c.pass,
                 "rel gap " + fmt(c.rel_gap) + " (tol 1e-9)");
    }
}

void check_tail_representation(Runner& r) {
    for (const IntegralSpec& spec : selftest_grid()) {
        const IntegrandSeries series = build_series(spec);
        const AntiderivativeForm form = integrate_termwise(series);
        const int n0 = tail_start_index(form);
        double worst = 0.0;
        for (double x : {0.25, 1.0}) {
            const double direct = direct_tail_sum(series, n0, x, 50);
            const double arg =
                form.tail.arg_scale * std::pow(x, form.tail.arg_power);
            const double packed = form.tail.t0_coef *
                                  std::pow(x, form.tail.t0_exponent) *
                                  pfq(form.tail.params, arg, 1e-16).value;
            worst = std::max(worst,
                             std::abs(direct - packed) / std::abs(direct));
        }
        r.record("tail_representation_" + std::string(spec_tag(spec)),
                 worst <= 1e-12, "max rel err " + fmt(worst) + " (tol 1e-12)");
    }
}

void check_duplication(Runner& r) {
    double worst = 0.0;
    for (double z = 0.5; z <= 10.0; z += 0.5) {
        worst = std::max(worst, duplication_gap(z));
    }
    r.record("gamma_duplication_grid", worst <= 1e-13,
             "max gap " + fmt(worst) + " over z in {0.5,...,10} (tol 1e-13)");
}

void check_decomposition(Runner& r) {
    const auto d1 = decompose(Family::Exp, 2.0, 2.0);
    const auto d2 = decompose(Family::Exp, 2.7, 1.0);
    const auto d3 = decompose(Family::Cos, 3.0, 1.0);
    r.record("decomposition_regression",
             d1.m == 1 && d1.epsilon == 0.0 && d1.kase == EpsCase::EpsZero &&
                 d2.m == 2 && std::abs(d2.epsilon - 0.7) < 1e-12 &&
                 d2.kase == EpsCase::General && d3.m == 1 &&
                 d3.epsilon == 1.0 && d3.kase == EpsCase::EpsOne,
             "exp(a=2,b=2)->(1,0); exp(a=2.7,b=1)->(2,0.7); cos(a=3,b=1)->(1,1)");
}

void check_beta1_specialization(Runner& r) {
    double worst = 0.0;
    for (double alpha : {2.0, 2.7, 3.0}) {
        for (double x : {0.5, 1.0, 2.0}) {
            const double a = ei_beta1(-1.0, alpha, x).value;
            const double b = ei_antiderivative(-1.0, 1.0, alpha, x).value;
            worst = std::max(worst, std::abs(a - b) /
                                        std::max(std::abs(b), 1e-300));
        }
    }
    r.record("ei_beta1_equals_general_path", worst <= 1e-12,
             "max rel gap " + fmt(worst) + " (tol 1e-12)");
}

void check_cancellation_diagnostics(Runner& r) {
    const IntegralSpec spec{Family::Sin, 1.0, 1.0, 4.0};
    const EvalResult at40 = evaluate(spec, 40.0);
    r.record("cancellation_reported_sin(1,1,4)_x40",
             at40.digits_lost >= 10.0,
             "digits_lost " + fmt(at40.digits_lost) + " (>= 10 required)");
    const ComparisonReport c = compare_definite(spec, 30.0, 40.0, 1e-9);
    r.record("cancellation_never_silent_sin(1,1,4)_[30,40]",
             !c.pass || c.precision_flagged,
             std::string("pass=") + (c.pass ? "true" : "false") +
                 " flagged=" + (c.precision_flagged ? "true" : "false") +
                 " rel gap " + fmt(c.rel_gap));
}

// --- printed-form errata regressions -------------------------------------
// Each check asserts the oracle-verified value and carries the differing
// printed form in its detail string.

bool rat_eq(const Rational& r, long long num, long long den) {
    return r == Rational(num, den);
}

void check_errata(Runner& r) {
    {
        // Verified: -2*x^-0.5 - (x^3.5/21)*2F3(1, 7/8; 2, 5/2, 15/8; -x^4/4)
        const ExactForm f = build_exact_form(
            {Family::Sin, Rational(1), Rational(2), Rational(3, 2)});
        const bool ok =
            f.power_terms.size() == 1 && !f.log_coef &&
            rat_eq(f.power_terms[0].coef, -2, 1) &&
            rat_eq(f.power_terms[0].exponent, -1, 2) &&
            rat_eq(f.tail.t0_coef, -1, 21) && rat_eq(f.tail.t0_exponent, 7, 2) &&
            f.tail.a == std::vector<Rational>{Rational(1), Rational(7, 8)} &&
            f.tail.b == std::vector<Rational>{Rational(2), Rational(5, 2),
                                              Rational(15, 8)} &&
            rat_eq(f.tail.arg_scale, -1, 4);
        r.record("errata_si(1,2,1.5)_closed_form", ok,
                 "printed: -x^1.5/9 - x^-2.5/2.5 + (x^5.5/(540pi))*2F3(1,9/8;"
                 "3,7/2,17/8;-x^4/4); verified: -2*x^-0.5 - (x^3.5/21)*"
                 "2F3(1,7/8;2,5/2,15/8;-x^4/4)");
    }
    {
        // Verified: -x^-4/4 + x^-2/4 + ln|x|/24 - (x^2/1440)*2F3(1,1;7/2,4,2;..)
        const ExactForm f = build_exact_form(
            {Family::Cos, Rational(1), Rational(1), Rational(3)});
        const bool ok =
            f.power_terms.size() == 2 &&
            rat_eq(f.power_terms[0].coef, -1, 4) &&
            rat_eq(f.power_terms[0].exponent, -4, 1) &&
            rat_eq(f.power_terms[1].coef, 1, 4) &&
            rat_eq(f.power_terms[1].exponent, -2, 1) && f.log_coef &&
            rat_eq(*f.log_coef, 1, 24) && rat_eq(f.tail.t0_coef, -1, 1440) &&
            rat_eq(f.tail.t0_exponent, 2, 1) &&
            f.tail.a == std::vector<Rational>{Rational(1), Rational(1)} &&
            f.tail.b == std::vector<Rational>{Rational(7, 2), Rational(4),
                                              Rational(2)};
        r.record("errata_ci(1,1,3)_head_sign_and_tail_prefactor", ok,
                 "printed: -x^-2/4 and +x^2/(720pi); verified: +x^-2/4 and "
                 "-(x^2/1440), params 2F3(1,1;7/2,4,2;-x^2/4) as printed");
        const bool log_ok = f.log_coef && rat_eq(*f.log_coef, 1, 24);
        r.record("errata_ci_eps1_log_sign", log_ok,
                 "general form prints (-1)^m (-> -ln|x|/24 here); worked "
                 "instance and termwise integration give +ln|x|/24");
    }
    {
        // Verified: x^-3/3 - x^-1 - (x/2)*2F2(1,1/2;3,3/2;-x^2)
        const ExactForm f = build_exact_form(
            {Family::Exp, Rational(-1), Rational(2), Rational(2)});
        const bool ok =
            f.power_terms.size() == 2 && !f.log_coef &&
            rat_eq(f.power_terms[0].coef, 1, 3) &&
            rat_eq(f.power_terms[0].exponent, -3, 1) &&
            rat_eq(f.power_terms[1].coef, -1, 1) &&
            rat_eq(f.power_terms[1].exponent, -1, 1) &&
            rat_eq(f.tail.t0_coef, -1, 2) && rat_eq(f.tail.t0_exponent, 1, 1) &&
            f.tail.a == std::vector<Rational>{Rational(1), Rational(1, 2)} &&
            f.tail.b == std::vector<Rational>{Rational(3), Rational(3, 2)} &&
            rat_eq(f.tail.arg_scale, -1, 1) && rat_eq(f.tail.arg_power, 2, 1);
        r.record("errata_ei(-1,2,2)_tail", ok,
                 "printed: -(x/4)*2F2(1,2;3,3;-x^2) (beta=1 values in a "
                 "beta=2 problem); verified: -(x/2)*2F2(1,1/2;3,3/2;-x^2)");
    }
    {
        // Fragments of the printed form that do verify, plus the x^0.3 sign slip.
        const ExactForm f = build_exact_form(
            {Family::Exp, Rational(-1), Rational(1), Rational(27, 10)});
        const bool fragments_ok =
            f.power_terms.size() == 4 && !f.log_coef &&
            rat_eq(f.power_terms[0].coef, 10, 27) &&
            rat_eq(f.power_terms[0].exponent, -27, 10) &&
            rat_eq(f.power_terms[1].coef, -10, 17) &&
            rat_eq(f.power_terms[1].exponent, -17, 10) &&
            rat_eq(f.power_terms[2].coef, 5, 7) &&
            rat_eq(f.power_terms[2].exponent, -7, 10) &&
            rat_eq(f.tail.t0_coef, -5, 156) &&
            rat_eq(f.tail.t0_exponent, 13, 10) &&
            f.tail.a == std::vector<Rational>{Rational(1), Rational(13, 10)} &&
            f.tail.b == std::vector<Rational>{Rational(5), Rational(23, 10)} &&
            rat_eq(f.tail.arg_scale, -1, 1);
        r.record("errata_ei(-1,1,2.7)_printed_fragments_reproduced",
                 fragments_ok,
                 "x^-2.7/2.7, -x^-1.7/1.7, +x^-0.7/1.4, -(x^1.3/31.2)*"
                 "2F2(1,1.3;5,2.3;-x) all verified as printed");
        const bool sign_ok = rat_eq(f.power_terms[3].coef, 5, 9) &&
                             rat_eq(f.power_terms[3].exponent, 3, 10);
        r.record("errata_ei(-1,1,2.7)_eps_term_sign", sign_ok,
                 "printed: -x^0.3/1.8; verified: +x^0.3/1.8 (lambda^2/Gamma(4)"
                 " is positive)");
    }
    {
        // eps = 0 one-index parameter shift, adjudicated by the derivative
        // oracle on an instance: exp(1, 2, 2).
        const IntegralSpec spec{Family::Exp, 1.0, 2.0, 2.0};
        const AntiderivativeForm derived =
            integrate_termwise(build_series(spec));
        AntiderivativeForm printed = derived;  // same head, shifted tail
        printed.tail.t0_coef = 1.0 / 6.0;
        printed.tail.params.numerator_params = {1.0, 1.5};
        printed.tail.params.denominator_params = {3.0, 2.5};
        const double x = 1.0;
        const double g = integrand(spec, x);
        const double d_derived = richardson_derivative(
            [&](double t) { return eval_form(derived, t).value; }, x);
        const double d_printed = richardson_derivative(
            [&](double t) { return eval_form(printed, t).value; }, x);
        const double err_derived = std::abs(d_derived - g) / std::abs(g);
        const double err_printed = std::abs(d_printed - g) / std::abs(g);
        r.record("errata_eps0_parameter_shift_ei(1,2,2)",
                 err_derived <= 1e-7 && err_printed > 1e-3,
                 "printed: (x/6)*2F2(1,3/2;3,5/2;x^2), derivative rel err " +
                     fmt(err_printed) + "; verified: (x/2)*2F2(1,1/2;3,3/2;"
                     "x^2), rel err " + fmt(err_derived));
    }
}

}  // namespace

SelftestReport run_selftest(std::ostream& out) {
    Runner runner{SelftestReport{}, out};
    check_derivative_identity(runner);
    check_ftc_vs_quadrature(runner);
    check_tail_representation(runner);
    check_duplication(runner);
    check_decomposition(runner);
    check_beta1_specialization(runner);
    check_cancellation_diagnostics(runner);
    check_errata(runner);
    out << runner.report.checks.size() << " checks, "
        << runner.report.failures << " failed\n";
    return runner.report;
}

}  // namespace nonelem
