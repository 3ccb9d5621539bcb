#include "nonelem/verify.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "nonelem/integrals.hpp"
#include "nonelem/summation.hpp"

namespace nonelem {
namespace {

// Kronrod-15 abscissae (positive half) and weights, with the embedded
// Gauss-7 weights on the odd-index nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelResult {
    double kronrod;
    double gauss;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = kWgk[7] * fc;
    double gauss = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double fsum = f(center - dx) + f(center + dx);
        kronrod += kWgk[j] * fsum;
        if (j % 2 == 1) gauss += kWg[j / 2] * fsum;
    }
    return {kronrod * half, gauss * half};
}

constexpr int kMaxDepth = 50;

void refine(const std::function<double(double)>& f, double a, double b,
            double tol, int depth, QuadratureResult& out) {
    const PanelResult panel = gk15(f, a, b);
    const double err = std::abs(panel.kronrod - panel.gauss);
    if (err <= tol || depth >= kMaxDepth) {
        out.value += panel.kronrod;
        out.abs_error_estimate += err;
        if (err > tol) out.converged = false;
        return;
    }
    const double mid = 0.5 * (a + b);
    ++out.subdivisions;
    refine(f, a, mid, 0.5 * tol, depth + 1, out);
    refine(f, mid, b, 0.5 * tol, depth + 1, out);
}

}  // namespace

QuadratureResult adaptive_quadrature(const std::function<double(double)>& f,
                                     double a, double b, double tol) {
    if (!(a > 0.0) || !(b >= a)) {
        throw std::invalid_argument("adaptive_quadrature: requires 0 < a <= b");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("adaptive_quadrature: tol must be > 0");
    }
    QuadratureResult result;
    result.converged = true;
    if (a == b) return result;  // empty interval
    refine(f, a, b, tol, 0, result);
    return result;
}

double richardson_derivative(const std::function<double(double)>& f, double x,
                             double h0) {
    if (h0 <= 0.0) h0 = 1e-3 * std::max(1.0, std::abs(x));
    if (!(x - h0 > 0.0)) {
        throw std::domain_error(
            "richardson_derivative: stencil leaves (0, inf)");
    }
    const auto central = [&](double h) {
        return (f(x + h) - f(x - h)) / (2.0 * h);
    };
    const double d0 = central(h0);
    const double d1 = central(0.5 * h0);
    const double d2 = central(0.25 * h0);
    const double r0 = (4.0 * d1 - d0) / 3.0;
    const double r1 = (4.0 * d2 - d1) / 3.0;
    return (16.0 * r1 - r0) / 15.0;
}

Rational rational_partial_sum(const std::vector<Rational>& a,
                              const std::vector<Rational>& b,
                              const Rational& x, int n_terms) {
    if (n_terms < 1 || n_terms > 200) {
        throw std::invalid_argument(
            "rational_partial_sum: n_terms must be in [1, 200]");
    }
    for (const Rational& bj : b) {
        if (bj <= 0 && is_integer(bj)) {
            throw std::invalid_argument(
                "rational_partial_sum: denominator parameter is a nonpositive "
                "integer");
        }
    }
    Rational sum = 0;
    Rational term = 1;
    for (int n = 0; n < n_terms; ++n) {
        sum += term;
        Rational ratio = 1;
        for (const Rational& ai : a) ratio *= ai + n;
        for (const Rational& bj : b) ratio /= bj + n;
        term *= ratio * x / (n + 1);
    }
    return sum;
}

Rational rational_partial_sum(const ExactSeries& series, const Rational& x,
                              int n_terms) {
    if (n_terms < 1 || n_terms > 200) {
        throw std::invalid_argument(
            "rational_partial_sum: n_terms must be in [1, 200]");
    }
    Rational sum = 0;
    Rational c = series.coefficient(0);
    for (int n = 0; n < n_terms; ++n) {
        const Rational e = series.exponent(n);
        if (!is_integer(e)) {
            throw std::invalid_argument(
                "rational_partial_sum: exponent " + rational_to_string(e) +
                " is not an integer; x^e is not rational");
        }
        sum += c * rational_pow(x, static_cast<long long>(numerator(e)));
        c *= detail::series_coefficient_ratio<Rational>(series.spec.family,
                                                        series.spec.lambda, n);
    }
    return sum;
}

ComparisonReport compare_definite(const IntegralSpec& spec, double a, double b,
                                  double tol_rel, double tol_abs) {
    if (!(a > 0.0) || !(b > a)) {
        throw std::invalid_argument("compare_definite: requires 0 < a < b");
    }
    spec.validate();

    ComparisonReport report;
    report.tol_rel = tol_rel;
    report.tol_abs = tol_abs;

    const AntiderivativeForm form = integrate_termwise(build_series(spec));
    report.formula_at_a = eval_form(form, a);
    report.formula_at_b = eval_form(form, b);
    report.formula_value =
        report.formula_at_b.value - report.formula_at_a.value;

    const auto f = [&](double t) { return integrand(spec, t); };
    const double pilot = gk15(f, a, b).kronrod;
    const double scale = std::max(
        {std::abs(pilot), std::abs(report.formula_value), 1e-30});
    const double quad_tol =
        std::max(0.1 * tol_rel * scale, 1e-16 * scale);
    report.oracle = adaptive_quadrature(f, a, b, quad_tol);
    report.oracle_value = report.oracle.value;

    report.abs_gap = std::abs(report.formula_value - report.oracle.value);
    report.rel_gap =
        report.abs_gap / std::max(std::abs(report.oracle.value),
                                  std::numeric_limits<double>::min());
    report.precision_flagged =
        report.formula_at_a.digits_lost >= 10.0 ||
        report.formula_at_b.digits_lost >= 10.0 ||
        !report.formula_at_a.converged || !report.formula_at_b.converged;
    report.pass =
        report.oracle.converged && report.formula_at_a.converged &&
        report.formula_at_b.converged &&
        report.abs_gap <=
            std::max(tol_abs, tol_rel * std::abs(report.oracle.value));
    return report;
}

nlohmann::ordered_json comparison_to_json(const ComparisonReport& report) {
    nlohmann::ordered_json j;
    j["formula_value"] = report.formula_value;
    j["oracle_value"] = report.oracle_value;
    j["abs_gap"] = report.abs_gap;
    j["rel_gap"] = report.rel_gap;
    j["pass"] = report.pass;
    j["precision_flagged"] = report.precision_flagged;
    j["tol_abs"] = report.tol_abs;
    j["tol_rel"] = report.tol_rel;
    auto eval_json = [](const EvalResult& r) {
        nlohmann::ordered_json e;
        e["value"] = r.value;
        e["abs_error_estimate"] = r.abs_error_estimate;
        e["terms_used"] = r.terms_used;
        e["digits_lost"] = r.digits_lost;
        e["converged"] = r.converged;
        return e;
    };
    j["formula_at_a"] = eval_json(report.formula_at_a);
    j["formula_at_b"] = eval_json(report.formula_at_b);
    nlohmann::ordered_json q;
    q["value"] = report.oracle.value;
    q["abs_error_estimate"] = report.oracle.abs_error_estimate;
    q["subdivisions"] = report.oracle.subdivisions;
    q["converged"] = report.oracle.converged;
    j["oracle"] = q;
    return j;
}

}  // namespace nonelem
