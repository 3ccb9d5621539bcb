#include "nonelem/exact.hpp"

#include <stdexcept>

namespace nonelem {

void ExactSpec::validate() const {
    if (lambda == 0) {
        throw std::invalid_argument("ExactSpec: lambda must be nonzero");
    }
    if (beta < 1) throw std::invalid_argument("ExactSpec: beta must be >= 1");
}

IntegralSpec ExactSpec::to_double() const {
    return IntegralSpec{family, static_cast<double>(lambda),
                        static_cast<double>(beta), static_cast<double>(alpha)};
}

Rational ExactSeries::coefficient(int n) const {
    Rational c = detail::series_first_coefficient<Rational>(spec.family,
                                                            spec.lambda);
    for (int k = 0; k < n; ++k) {
        c *= detail::series_coefficient_ratio<Rational>(spec.family,
                                                        spec.lambda, k);
    }
    return c;
}

ExactSeries build_exact_series(const ExactSpec& spec) {
    spec.validate();
    ExactSeries series;
    series.spec = spec;
    series.step = detail::series_step<Rational>(spec.family, spec.beta);
    series.offset =
        detail::series_offset<Rational>(spec.family, spec.beta, spec.alpha);
    return series;
}

ExactForm build_exact_form(const ExactSpec& spec) {
    const ExactSeries series = build_exact_series(spec);
    ExactForm form;
    Rational c = series.coefficient(0);
    for (int n = 0;; ++n) {
        const Rational integrated = series.exponent(n) + 1;
        if (integrated == 0) {
            form.log_coef = c;
        } else if (integrated < 1) {
            form.power_terms.push_back({c / integrated, integrated});
        } else {
            const auto params = detail::tail_parameters<Rational>(
                spec.family, spec.lambda, spec.beta, n, integrated);
            form.tail.n0 = n;
            form.tail.t0_coef = c / integrated;
            form.tail.t0_exponent = integrated;
            form.tail.a = params.a;
            form.tail.b = params.b;
            form.tail.arg_scale = params.arg_scale;
            form.tail.arg_power = series.step;
            return form;
        }
        c *= detail::series_coefficient_ratio<Rational>(spec.family,
                                                        spec.lambda, n);
    }
}

AntiderivativeForm to_double_form(const ExactForm& form) {
    AntiderivativeForm out;
    out.power_terms.reserve(form.power_terms.size());
    for (const ExactPowerTerm& term : form.power_terms) {
        out.power_terms.push_back({static_cast<double>(term.coef),
                                   static_cast<double>(term.exponent)});
    }
    if (form.log_coef) out.log_coef = static_cast<double>(*form.log_coef);
    out.tail.t0_coef = static_cast<double>(form.tail.t0_coef);
    out.tail.t0_exponent = static_cast<double>(form.tail.t0_exponent);
    for (const Rational& a : form.tail.a) {
        out.tail.params.numerator_params.push_back(static_cast<double>(a));
    }
    for (const Rational& b : form.tail.b) {
        out.tail.params.denominator_params.push_back(static_cast<double>(b));
    }
    out.tail.arg_scale = static_cast<double>(form.tail.arg_scale);
    out.tail.arg_power = static_cast<double>(form.tail.arg_power);
    return out;
}

}  // namespace nonelem
