#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "nonelem/exact.hpp"
#include "nonelem/series.hpp"

namespace nonelem {

enum class EpsCase { EpsZero, EpsOne, General };

const char* eps_case_name(EpsCase c);

// alpha = m*d + epsilon with d = 2*beta (sin/sinh/cos/cosh) or beta (exp),
// epsilon in [0, d). Display metadata only; the engine never branches on it.
struct Decomposition {
    std::int64_t m = 0;
    double epsilon = 0.0;
    EpsCase kase = EpsCase::General;
};

// m = floor(alpha/d) with the exact-integer cases snapped: alpha/d integral
// -> (alpha/d, 0), else (alpha-1)/d integral -> ((alpha-1)/d, 1).
// Requires beta >= 1 and alpha > 0.
Decomposition decompose(Family family, double alpha, double beta);

// The canonical primitive (integration constant zero) at x > 0.
EvalResult evaluate(const IntegralSpec& spec, double x, double tol = 1e-12);

// One constructor per integrand class; thin veneers over evaluate().
EvalResult si_antiderivative(double lambda, double beta, double alpha,
                             double x, double tol = 1e-12);
EvalResult sinh_antiderivative(double lambda, double beta, double alpha,
                               double x, double tol = 1e-12);
EvalResult ci_antiderivative(double lambda, double beta, double alpha,
                             double x, double tol = 1e-12);
EvalResult cosh_antiderivative(double lambda, double beta, double alpha,
                               double x, double tol = 1e-12);
EvalResult ei_antiderivative(double lambda, double beta, double alpha,
                             double x, double tol = 1e-12);

// beta = 1 specialization of ei_antiderivative (identical code path); the
// log term appears automatically whenever alpha is an integer >= 2.
EvalResult ei_beta1(double lambda, double alpha, double x, double tol = 1e-12);

enum class FormulaFormat { Text, Json };

// Rendered closed form. `structured` follows the documented JSON schema and
// reconstructs the AntiderivativeForm bit-identically via
// form_from_structured; `text` is the human-readable one-liner, e.g.
//   F(x) = -x^-4/4 + x^-2/4 + ln|x|/24 - (x^2/1440)*2F3(1, 1; 7/2, 4, 2; -x^2/4) + C
struct FormulaDoc {
    std::string text;
    nlohmann::ordered_json structured;
    FormulaFormat format = FormulaFormat::Text;
};

FormulaDoc emit_formula(const IntegralSpec& spec,
                        FormulaFormat format = FormulaFormat::Text);

// Exact-parameter overload: head/log/tail coefficients additionally carry
// exact rationals (coef_num/coef_den and friends) in the structured output.
FormulaDoc emit_formula(const ExactSpec& spec,
                        FormulaFormat format = FormulaFormat::Text);

AntiderivativeForm form_from_structured(const nlohmann::ordered_json& doc);

}  // namespace nonelem
