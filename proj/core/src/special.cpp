#include "nonelem/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "nonelem/summation.hpp"

namespace nonelem {
namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kSqrtPi = 1.77245385090551602729816748334114518;
constexpr double kGammaOverflow = 171.624;

// Rational minimax approximation on [1, 2] (SPECFUN lineage).
double gamma_1_2(double y) {
    static const double p[8] = {
        -1.71618513886549492533811e+0, 2.47656508055759199108314e+1,
        -3.79804256470945635097577e+2, 6.29331155312818442661052e+2,
        8.66966202790413211295064e+2,  -3.14512729688483675254357e+4,
        -3.61444134186911729807069e+4, 6.64561438202405440627855e+4};
    static const double q[8] = {
        -3.08402300119738975254353e+1, 3.15350626979604161529144e+2,
        -1.01515636749021914166146e+3, -3.10777167157231109440444e+3,
        2.25381184209801510330112e+4,  4.75584627752788110767815e+3,
        -1.34659959864969306392456e+5, -1.15132259675553483497211e+5};
    const double z = y - 1.0;
    double num = 0.0;
    double den = 1.0;
    for (int i = 0; i < 8; ++i) {
        num = (num + p[i]) * z;
        den = den * z + q[i];
    }
    return num / den + 1.0;
}

double gamma_positive(double z) {
    if (z > kGammaOverflow) return std::numeric_limits<double>::infinity();
    if (z < 1.0) return gamma_positive(z + 1.0) / z;
    double prod = 1.0;
    double y = z;
    while (y > 2.0) {
        y -= 1.0;
        prod *= y;
    }
    return prod * gamma_1_2(y);
}

}  // namespace

double gamma(double z) {
    if (std::isnan(z)) return z;
    if (z <= 0.0 && z == std::floor(z)) {
        throw std::domain_error("gamma: pole at nonpositive integer z = " +
                                std::to_string(z));
    }
    if (z > 0.0) return gamma_positive(z);
    // Reflection; reduce the sine argument mod 2 first to keep it accurate
    // for large |z|.
    const double r = z - 2.0 * std::floor(z / 2.0);  // in [0, 2)
    const double s = std::sin(kPi * r);
    return kPi / (s * gamma_positive(1.0 - z));
}

double pochhammer(double v, int n) {
    if (n < 0) throw std::invalid_argument("pochhammer: n must be >= 0");
    double prod = 1.0;
    for (int k = 0; k < n; ++k) prod *= v + k;
    return prod;
}

double duplication_gap(double z) {
    if (!(z > 0.0)) throw std::domain_error("duplication_gap: requires z > 0");
    const double lhs = gamma(2.0 * z);
    const double rhs =
        std::exp2(2.0 * z - 1.0) * gamma(z) * gamma(z + 0.5) / kSqrtPi;
    return std::abs(lhs - rhs) / lhs;
}

void PFQParams::validate() const {
    if (numerator_params.size() > denominator_params.size()) {
        throw std::invalid_argument(
            "pfq: p > q is outside the entire-series domain");
    }
    for (double b : denominator_params) {
        if (!std::isfinite(b)) {
            throw std::invalid_argument("pfq: non-finite denominator parameter");
        }
        if (b <= 0.0 && b == std::floor(b)) {
            throw std::invalid_argument(
                "pfq: denominator parameter " + std::to_string(b) +
                " is zero or a negative integer (Pochhammer vanishes)");
        }
    }
    for (double a : numerator_params) {
        if (!std::isfinite(a)) {
            throw std::invalid_argument("pfq: non-finite numerator parameter");
        }
    }
}

SeriesEvalReport pfq(const PFQParams& params, double x, double tol,
                     int max_terms) {
    params.validate();
    if (!(tol > 0.0)) throw std::invalid_argument("pfq: tol must be > 0");
    if (max_terms < 1) throw std::invalid_argument("pfq: max_terms must be >= 1");

    constexpr double tiny = std::numeric_limits<double>::min();
    constexpr double eps = std::numeric_limits<double>::epsilon();

    SeriesEvalReport report;
    CompensatedSum sum;
    double term = 1.0;
    double sum_abs = 0.0;
    double prev_abs = std::numeric_limits<double>::infinity();
    int small_streak = 0;

    int n = 0;
    for (; n < max_terms; ++n) {
        sum.add(term);
        sum_abs += std::abs(term);
        const double partial = sum.value();
        report.max_abs_partial_sum =
            std::max(report.max_abs_partial_sum, std::abs(partial));

        const double abs_term = std::abs(term);
        if (!std::isfinite(term) || !std::isfinite(partial)) {
            ++n;
            break;
        }
        if (abs_term <= tol * std::abs(partial) && abs_term <= prev_abs) {
            if (++small_streak >= 3) {
                report.converged = true;
                ++n;
                break;
            }
        } else {
            small_streak = 0;
        }
        prev_abs = abs_term;

        double ratio = 1.0;
        for (double a : params.numerator_params) ratio *= a + n;
        for (double b : params.denominator_params) ratio /= b + n;
        term *= ratio * x / (n + 1);
    }

    report.terms_used = n;
    report.value = sum.value();
    report.digits_lost = std::log10(
        std::max(1.0, sum_abs / std::max(std::abs(report.value), tiny)));
    report.abs_error_estimate = std::abs(term) + eps * sum_abs;
    return report;
}

}  // namespace nonelem
