#include "nonelem/series.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "nonelem/summation.hpp"

namespace nonelem {
namespace {

// "Integrated exponent is exactly zero / exactly one" detection for
// parameters that arrived as decimal floats.
constexpr double kExactnessTol = 1e-12;

bool nearly(double value, double target, double scale) {
    return std::abs(value - target) <= kExactnessTol * (1.0 + std::abs(scale));
}

}  // namespace

const char* family_name(Family family) {
    switch (family) {
        case Family::Sin:  return "sin";
        case Family::Sinh: return "sinh";
        case Family::Cos:  return "cos";
        case Family::Cosh: return "cosh";
        case Family::Exp:  return "exp";
    }
    return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
    if (name == "sin") return Family::Sin;
    if (name == "sinh") return Family::Sinh;
    if (name == "cos") return Family::Cos;
    if (name == "cosh") return Family::Cosh;
    if (name == "exp") return Family::Exp;
    return std::nullopt;
}

void IntegralSpec::validate() const {
    if (!std::isfinite(lambda) || lambda == 0.0) {
        throw std::invalid_argument("IntegralSpec: lambda must be finite and nonzero");
    }
    if (!std::isfinite(beta) || beta < 1.0) {
        throw std::invalid_argument("IntegralSpec: beta must be >= 1");
    }
    if (!std::isfinite(alpha)) {
        throw std::invalid_argument("IntegralSpec: alpha must be finite");
    }
}

double integrand(const IntegralSpec& spec, double x) {
    if (!(x > 0.0)) throw std::domain_error("integrand: requires x > 0");
    const double u = spec.lambda * std::pow(x, spec.beta);
    switch (spec.family) {
        case Family::Sin:
            return std::sin(u) / (spec.lambda * std::pow(x, spec.beta + spec.alpha));
        case Family::Sinh:
            return std::sinh(u) / (spec.lambda * std::pow(x, spec.beta + spec.alpha));
        case Family::Cos:
            return std::cos(u) / (spec.lambda * std::pow(x, 2.0 * spec.beta + spec.alpha));
        case Family::Cosh:
            return std::cosh(u) / (spec.lambda * std::pow(x, 2.0 * spec.beta + spec.alpha));
        case Family::Exp:
            return std::exp(u) / (spec.lambda * std::pow(x, spec.beta + spec.alpha));
    }
    return 0.0;
}

double IntegrandSeries::first_coefficient() const {
    return detail::series_first_coefficient<double>(spec.family, spec.lambda);
}

double IntegrandSeries::coefficient_ratio(int n) const {
    return detail::series_coefficient_ratio<double>(spec.family, spec.lambda, n);
}

IntegrandSeries build_series(const IntegralSpec& spec) {
    spec.validate();
    IntegrandSeries series;
    series.spec = spec;
    series.step = detail::series_step<double>(spec.family, spec.beta);
    series.offset =
        detail::series_offset<double>(spec.family, spec.beta, spec.alpha);
    return series;
}

HypergeometricTail extract_pfq(const IntegrandSeries& series, int n0) {
    const double e0 = series.exponent(n0) + 1.0;
    if (!(e0 > 0.0)) {
        throw std::invalid_argument(
            "extract_pfq: exponent(n0) must exceed -1, got n0 = " +
            std::to_string(n0));
    }
    double c = series.first_coefficient();
    for (int n = 0; n < n0; ++n) c *= series.coefficient_ratio(n);

    const auto params = detail::tail_parameters<double>(
        series.spec.family, series.spec.lambda, series.spec.beta, n0, e0);

    HypergeometricTail tail;
    tail.t0_coef = c / e0;
    tail.t0_exponent = e0;
    tail.params.numerator_params = params.a;
    tail.params.denominator_params = params.b;
    tail.arg_scale = params.arg_scale;
    tail.arg_power = series.step;
    return tail;
}

AntiderivativeForm integrate_termwise(const IntegrandSeries& series) {
    AntiderivativeForm form;
    double c = series.first_coefficient();
    for (int n = 0;; ++n) {
        const double e = series.exponent(n);
        const double integrated = e + 1.0;
        if (nearly(integrated, 0.0, e)) {
            form.log_coef = c;
        } else if (integrated < 1.0 && !nearly(integrated, 1.0, e)) {
            form.power_terms.push_back({c / integrated, integrated});
        } else {
            form.tail = extract_pfq(series, n);
            return form;
        }
        c *= series.coefficient_ratio(n);
    }
}

EvalResult eval_form(const AntiderivativeForm& form, double x, double tol) {
    if (!(x > 0.0)) throw std::domain_error("eval_form: requires x > 0");
    constexpr double tiny = std::numeric_limits<double>::min();
    constexpr double eps = std::numeric_limits<double>::epsilon();

    CompensatedSum acc;
    double abs_parts = 0.0;
    for (const PowerTerm& term : form.power_terms) {
        const double v = term.coef * std::pow(x, term.exponent);
        acc.add(v);
        abs_parts += std::abs(v);
    }
    if (form.log_coef) {
        const double v = *form.log_coef * std::log(x);
        acc.add(v);
        abs_parts += std::abs(v);
    }

    const HypergeometricTail& tail = form.tail;
    const double arg = tail.arg_scale * std::pow(x, tail.arg_power);
    const SeriesEvalReport report = pfq(tail.params, arg, tol);
    const double tail_scale = tail.t0_coef * std::pow(x, tail.t0_exponent);
    acc.add(tail_scale * report.value);

    // Reconstruct the tail's absolute term mass from its condition number.
    const double tail_abs =
        std::abs(tail_scale) * std::pow(10.0, report.digits_lost) *
        std::max(std::abs(report.value), tiny);
    const double total_abs = abs_parts + tail_abs;

    EvalResult result;
    result.value = acc.value();
    result.terms_used = report.terms_used;
    result.converged = report.converged;
    result.digits_lost = std::log10(
        std::max(1.0, total_abs / std::max(std::abs(result.value), tiny)));
    result.abs_error_estimate =
        std::abs(tail_scale) * report.abs_error_estimate + eps * total_abs;
    return result;
}

}  // namespace nonelem
