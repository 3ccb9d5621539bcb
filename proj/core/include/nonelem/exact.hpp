#pragma once

#include <optional>
#include <vector>

#include "nonelem/rational.hpp"
#include "nonelem/series.hpp"

namespace nonelem {

// IntegralSpec with exact rational parameters, as produced by the CLI's
// decimal-string fast path. Makes the log-term test (integrated exponent
// exactly zero) and every emitted coefficient exact.
struct ExactSpec {
    Family family;
    Rational lambda;
    Rational beta;
    Rational alpha;

    void validate() const;
    IntegralSpec to_double() const;
};

// Rational mirror of IntegrandSeries.
struct ExactSeries {
    ExactSpec spec;
    Rational step;
    Rational offset;

    Rational exponent(int n) const { return step * n + offset; }
    // c_n by running product; n is small everywhere this is used.
    Rational coefficient(int n) const;
};

ExactSeries build_exact_series(const ExactSpec& spec);

struct ExactPowerTerm {
    Rational coef;
    Rational exponent;
};

struct ExactTail {
    int n0 = 0;
    Rational t0_coef;
    Rational t0_exponent;
    std::vector<Rational> a;
    std::vector<Rational> b;
    Rational arg_scale;
    Rational arg_power;
};

struct ExactForm {
    std::vector<ExactPowerTerm> power_terms;
    std::optional<Rational> log_coef;
    ExactTail tail;
};

// Same split as integrate_termwise but with exact comparisons instead of
// the floating-point tolerance.
ExactForm build_exact_form(const ExactSpec& spec);

// Rounds every rational to double, yielding a form the evaluator accepts.
AntiderivativeForm to_double_form(const ExactForm& form);

}  // namespace nonelem
