#pragma once

#include <vector>

namespace nonelem {

inline constexpr double kDefaultSeriesTol = 1e-15;
inline constexpr int kDefaultMaxTerms = 10000;

// Gamma function on the real line, poles excluded.
// Rational minimax approximation on [1,2], recurrence elsewhere; relative
// error stays below ~1e-14 on the positive axis up to the overflow bound
// (~171.62, beyond which +inf is returned).
// Throws std::domain_error at z = 0, -1, -2, ...
double gamma(double z);

// Rising factorial (v)_n = v (v+1) ... (v+n-1), (v)_0 = 1.
// Zero results are legal values; n must be >= 0.
double pochhammer(double v, int n);

// Relative residual of the duplication identity
// Gamma(2z) = 2^{2z-1} Gamma(z) Gamma(z+1/2) / sqrt(pi), for z > 0.
// Used as a self-test primitive.
double duplication_gap(double z);

// Parameter lists of a generalized hypergeometric series pFq.
struct PFQParams {
    std::vector<double> numerator_params;    // a_1 .. a_p
    std::vector<double> denominator_params;  // b_1 .. b_q

    // Enforces: p <= q (entire series only), no denominator parameter is
    // zero or a negative integer. Throws std::invalid_argument.
    void validate() const;
};

struct SeriesEvalReport {
    double value = 0.0;
    int terms_used = 0;
    double max_abs_partial_sum = 0.0;
    // log10 of the cancellation condition number sum|t_k| / |sum t_k|,
    // clamped at 0. Reported, never acted on.
    double digits_lost = 0.0;
    bool converged = false;
    double abs_error_estimate = 0.0;
};

// Sums pFq(params; x) by the term ratio recurrence
//   t_0 = 1,  t_{n+1} = t_n * prod(a_i+n)/prod(b_j+n) * x/(n+1),
// stopping once |t_n| <= tol*|S_n| for 3 consecutive terms with
// non-increasing |t_n|, or at max_terms (converged = false).
SeriesEvalReport pfq(const PFQParams& params, double x,
                     double tol = kDefaultSeriesTol,
                     int max_terms = kDefaultMaxTerms);

}  // namespace nonelem
