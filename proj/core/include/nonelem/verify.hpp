#pragma once

#include <functional>
#include <vector>

#include <nlohmann/json.hpp>

#include "nonelem/exact.hpp"
#include "nonelem/series.hpp"

namespace nonelem {

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    int subdivisions = 0;
    bool converged = false;
};

// Gauss-Kronrod 7-15 with recursive bisection; the local error is the
// raw |K15 - G7| difference. Depth limit 50, after which converged = false.
// Requires 0 < a <= b and f finite on [a, b].
QuadratureResult adaptive_quadrature(const std::function<double(double)>& f,
                                     double a, double b, double tol);

// Central differences at h0, h0/2, h0/4 with two Richardson levels.
// h0 <= 0 selects the default 1e-3 * max(1, x). The stencil must stay
// inside (0, inf).
double richardson_derivative(const std::function<double(double)>& f, double x,
                             double h0 = 0.0);

// Exact partial sum of pFq(a; b; x) over the first n_terms terms.
// All inputs rational; n_terms <= 200.
Rational rational_partial_sum(const std::vector<Rational>& a,
                              const std::vector<Rational>& b,
                              const Rational& x, int n_terms);

// Exact partial sum of the integrand series sum c_n x^{exponent(n)}.
// Every used exponent must be an integer (otherwise x^e leaves the
// rationals and the input is rejected).
Rational rational_partial_sum(const ExactSeries& series, const Rational& x,
                              int n_terms);

struct ComparisonReport {
    double formula_value = 0.0;
    double oracle_value = 0.0;
    double abs_gap = 0.0;
    double rel_gap = 0.0;
    bool pass = false;
    // Set when the formula side lost >= 10 decimal digits to cancellation
    // or failed to converge; a pass is never reported silently in that
    // state without this flag.
    bool precision_flagged = false;
    double tol_abs = 0.0;
    double tol_rel = 0.0;
    EvalResult formula_at_a;
    EvalResult formula_at_b;
    QuadratureResult oracle;
};

// FTC value F(b) - F(a) against adaptive quadrature of the raw integrand.
// pass <=> abs_gap <= max(tol_abs, tol_rel * |oracle_value|), both sides
// converged.
ComparisonReport compare_definite(const IntegralSpec& spec, double a, double b,
                                  double tol_rel, double tol_abs = 1e-14);

nlohmann::ordered_json comparison_to_json(const ComparisonReport& report);

}  // namespace nonelem
