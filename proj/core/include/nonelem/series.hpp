#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "nonelem/special.hpp"

namespace nonelem {

enum class Family { Sin, Sinh, Cos, Cosh, Exp };

const char* family_name(Family family);
std::optional<Family> family_from_name(std::string_view name);

// One integral of the covered classes:
//   sin, sinh:  trig(lambda x^beta) / (lambda x^{beta+alpha})
//   cos, cosh:  trig(lambda x^beta) / (lambda x^{2 beta+alpha})
//   exp:        e^{lambda x^beta}   / (lambda x^{beta+alpha})
// The 1/lambda factor is part of the integrand.
struct IntegralSpec {
    Family family;
    double lambda;
    double beta;
    double alpha;

    // lambda nonzero and finite, beta >= 1, alpha finite. alpha > 1 is the
    // regime all closed-form fixtures live in; smaller alpha only shortens
    // the head and is accepted.
    void validate() const;
};

// The raw integrand g(x), x > 0.
double integrand(const IntegralSpec& spec, double x);

// Maclaurin expansion of the integrand: g(x) = sum_n c_n x^{step*n + offset}.
// Coefficients are exposed through c_0 and the ratio c_{n+1}/c_n so callers
// accumulate them by a running product instead of large factorials.
struct IntegrandSeries {
    IntegralSpec spec;
    double step;    // 2*beta (sin/sinh/cos/cosh) or beta (exp)
    double offset;  // -alpha, -2*beta-alpha, or -beta-alpha

    double exponent(int n) const { return step * n + offset; }
    double first_coefficient() const;
    double coefficient_ratio(int n) const;  // c_{n+1} / c_n
};

IntegrandSeries build_series(const IntegralSpec& spec);

struct PowerTerm {
    double coef;
    double exponent;  // never zero; the exponent-zero case is the log term
};

// tail(x) = t0_coef * x^{t0_exponent} * pFq(params; arg_scale * x^{arg_power})
struct HypergeometricTail {
    double t0_coef = 0.0;
    double t0_exponent = 0.0;  // > 0, so the tail vanishes at x -> 0+
    PFQParams params;
    double arg_scale = 0.0;
    double arg_power = 0.0;  // equals the series step
};

// Termwise-integrated closed form with integration constant normalized to
// zero: F(x) = sum power_terms + log_coef*ln|x| + tail(x).
struct AntiderivativeForm {
    std::vector<PowerTerm> power_terms;
    std::optional<double> log_coef;
    HypergeometricTail tail;
};

// Integrates the series term by term and splits it by the integrated
// exponent E = exponent(n) + 1:
//   E = 0 (within tolerance)  -> log term, coefficient c_n
//   E < 1                     -> explicit power term c_n/E * x^E
//   first E >= 1              -> hypergeometric tail (extract_pfq)
// The E-in-(0,1) term is the fractional leftover of the exponent ladder and
// appears at most once since step >= 1.
AntiderivativeForm integrate_termwise(const IntegrandSeries& series);

// Packages the series remainder from index n0 on (requires
// exponent(n0) > -1) as a hypergeometric descriptor, reading the pFq
// parameters off the exact term ratio t_{k+1}/t_k.
HypergeometricTail extract_pfq(const IntegrandSeries& series, int n0);

struct EvalResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    int terms_used = 0;
    double digits_lost = 0.0;
    bool converged = false;
};

// Evaluates the closed form at x > 0. tol is the pFq stop tolerance; the
// error estimate combines tail truncation with a rounding floor scaled by
// the cancellation the assembly suffered.
EvalResult eval_form(const AntiderivativeForm& form, double x,
                     double tol = 1e-12);

namespace detail {

// Family coefficient rules, shared between the double engine and the
// exact-rational path. Num is double or Rational.
template <class Num>
Num series_first_coefficient(Family family, const Num& lambda) {
    switch (family) {
        case Family::Sin:
        case Family::Sinh:
            return Num(1);
        default:
            return Num(1) / lambda;
    }
}

template <class Num>
Num series_coefficient_ratio(Family family, const Num& lambda, int n) {
    const Num lam2 = lambda * lambda;
    switch (family) {
        case Family::Sin:
            return -lam2 / Num((2 * n + 2) * (2 * n + 3));
        case Family::Sinh:
            return lam2 / Num((2 * n + 2) * (2 * n + 3));
        case Family::Cos:
            return -lam2 / Num((2 * n + 1) * (2 * n + 2));
        case Family::Cosh:
            return lam2 / Num((2 * n + 1) * (2 * n + 2));
        case Family::Exp:
            return lambda / Num(n + 1);
    }
    return Num(0);  // unreachable
}

template <class Num>
Num series_step(Family family, const Num& beta) {
    return family == Family::Exp ? beta : 2 * beta;
}

template <class Num>
Num series_offset(Family family, const Num& beta, const Num& alpha) {
    switch (family) {
        case Family::Sin:
        case Family::Sinh:
            return -alpha;
        case Family::Cos:
        case Family::Cosh:
            return -2 * beta - alpha;
        default:
            return -beta - alpha;
    }
}

// pFq parameters for the tail starting at n0 with leading integrated
// exponent e0 = exponent(n0) + 1. The (1)_k / k! pair supplies the unit
// numerator slot; the e0/step and 1 + e0/step pair encodes the 1/(e0 +
// step*k) integration factor.
template <class Num>
struct TailParams {
    std::vector<Num> a;
    std::vector<Num> b;
    Num arg_scale;
};

template <class Num>
TailParams<Num> tail_parameters(Family family, const Num& lambda,
                                const Num& beta, int n0, const Num& e0) {
    TailParams<Num> out{{}, {}, Num(0)};
    const Num lam2_4 = lambda * lambda / Num(4);
    switch (family) {
        case Family::Sin:
        case Family::Sinh: {
            const Num s = e0 / (2 * beta);
            out.a = {Num(1), s};
            out.b = {Num(n0 + 1), Num(n0) + Num(3) / Num(2), Num(1) + s};
            out.arg_scale = family == Family::Sin ? -lam2_4 : lam2_4;
            break;
        }
        case Family::Cos:
        case Family::Cosh: {
            const Num s = e0 / (2 * beta);
            out.a = {Num(1), s};
            out.b = {Num(n0) + Num(1) / Num(2), Num(n0 + 1), Num(1) + s};
            out.arg_scale = family == Family::Cos ? -lam2_4 : lam2_4;
            break;
        }
        case Family::Exp: {
            const Num s = e0 / beta;
            out.a = {Num(1), s};
            out.b = {Num(n0 + 1), Num(1) + s};
            out.arg_scale = lambda;
            break;
        }
    }
    return out;
}

}  // namespace detail
}  // namespace nonelem
