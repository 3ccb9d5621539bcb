#include "nonelem/integrals.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace nonelem {
namespace {

bool is_integral_value(double y) {
    return std::abs(y - std::round(y)) <= 1e-12 * std::max(1.0, std::abs(y));
}

}  // namespace

const char* eps_case_name(EpsCase c) {
    switch (c) {
        case EpsCase::EpsZero: return "eps_zero";
        case EpsCase::EpsOne:  return "eps_one";
        case EpsCase::General: return "general";
    }
    return "?";
}

Decomposition decompose(Family family, double alpha, double beta) {
    if (!(beta >= 1.0)) throw std::invalid_argument("decompose: beta must be >= 1");
    if (!(alpha > 0.0)) throw std::invalid_argument("decompose: alpha must be > 0");
    const double d = family == Family::Exp ? beta : 2.0 * beta;
    Decomposition dec;
    if (is_integral_value(alpha / d)) {
        dec.m = std::llround(alpha / d);
        dec.epsilon = 0.0;
        dec.kase = EpsCase::EpsZero;
        return dec;
    }
    if (alpha >= 1.0 && is_integral_value((alpha - 1.0) / d)) {
        dec.m = std::llround((alpha - 1.0) / d);
        dec.epsilon = 1.0;
        dec.kase = EpsCase::EpsOne;
        return dec;
    }
    dec.m = static_cast<std::int64_t>(std::floor(alpha / d));
    dec.epsilon = alpha - static_cast<double>(dec.m) * d;
    if (dec.epsilon >= d) {  // rounding pushed epsilon out of [0, d)
        ++dec.m;
        dec.epsilon = alpha - static_cast<double>(dec.m) * d;
    }
    dec.kase = EpsCase::General;
    return dec;
}

EvalResult evaluate(const IntegralSpec& spec, double x, double tol) {
    return eval_form(integrate_termwise(build_series(spec)), x, tol);
}

EvalResult si_antiderivative(double lambda, double beta, double alpha,
                             double x, double tol) {
    return evaluate({Family::Sin, lambda, beta, alpha}, x, tol);
}

EvalResult sinh_antiderivative(double lambda, double beta, double alpha,
                               double x, double tol) {
    return evaluate({Family::Sinh, lambda, beta, alpha}, x, tol);
}

EvalResult ci_antiderivative(double lambda, double beta, double alpha,
                             double x, double tol) {
    return evaluate({Family::Cos, lambda, beta, alpha}, x, tol);
}

EvalResult cosh_antiderivative(double lambda, double beta, double alpha,
                               double x, double tol) {
    return evaluate({Family::Cosh, lambda, beta, alpha}, x, tol);
}

EvalResult ei_antiderivative(double lambda, double beta, double alpha,
                             double x, double tol) {
    return evaluate({Family::Exp, lambda, beta, alpha}, x, tol);
}

EvalResult ei_beta1(double lambda, double alpha, double x, double tol) {
    return ei_antiderivative(lambda, 1.0, alpha, x, tol);
}

// ---------------------------------------------------------------------------
// Formula rendering
// ---------------------------------------------------------------------------
namespace {

using json = nlohmann::ordered_json;

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

json json_from_bigint(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(v);
    }
    return v.str();
}

bool near_integer(double v, long long& out) {
    const double r = std::round(v);
    if (std::abs(v - r) <= 1e-9 * std::max(1.0, std::abs(v))) {
        out = static_cast<long long>(r);
        return true;
    }
    return false;
}

// x^E, with x^1 collapsed to "x".
std::string power_text(double e, const Rational* exact) {
    if (exact) {
        if (*exact == 1) return "x";
        const std::string s = rational_to_string(*exact);
        if (s.find('/') != std::string::npos) return "x^(" + s + ")";
        return "x^" + s;
    }
    long long k = 0;
    if (e == 1.0) return "x";
    if (near_integer(e, k)) return "x^" + std::to_string(k);
    return "x^" + fmt_double(e);
}

// Magnitude of coefficient c applied to base ("x^E" or "ln|x|").
// Prefers the division form base/D used throughout the source tables.
std::string scaled_text(double coef, const Rational* exact,
                        const std::string& base) {
    if (exact) {
        const Rational mag = abs(*exact);
        if (mag == 1) return base;
        if (numerator(mag) == 1) {
            return base + "/" + rational_to_string(Rational(denominator(mag)));
        }
        const std::string inv = rational_to_string(1 / mag);
        if (inv.find('/') == std::string::npos && mag < 1) {
            return base + "/" + inv;
        }
        if (is_integer(mag)) return rational_to_string(mag) + "*" + base;
        return "(" + rational_to_string(mag) + ")*" + base;
    }
    const double mag = std::abs(coef);
    if (mag == 1.0) return base;
    long long k = 0;
    if (mag < 1.0 && near_integer(1.0 / mag, k)) {
        return base + "/" + std::to_string(k);
    }
    if (near_integer(mag, k)) return std::to_string(k) + "*" + base;
    return fmt_double(mag) + "*" + base;
}

std::string pfq_param_text(double v, const Rational* exact) {
    if (exact) return param_to_string(*exact);
    long long k = 0;
    if (near_integer(v, k)) return std::to_string(k);
    if (near_integer(2.0 * v, k)) return std::to_string(k) + "/2";
    return fmt_double(v);
}

struct Renderable {
    double coef = 0.0;
    const Rational* exact = nullptr;
    std::string body;
};

void append_term(std::string& out, bool& first, double sign_of,
                 const std::string& body) {
    if (first) {
        out += sign_of < 0 ? "-" + body : body;
        first = false;
    } else {
        out += sign_of < 0 ? " - " + body : " + " + body;
    }
}

}  // namespace

namespace {

// Shared builder; `exact` is null on the float-only path.
FormulaDoc build_formula_doc(const IntegralSpec& spec,
                             const AntiderivativeForm& form,
                             const ExactForm* exact, FormulaFormat format) {
    FormulaDoc doc;
    doc.format = format;

    // --- text ---
    std::string text = "F(x) = ";
    bool first = true;
    for (std::size_t i = 0; i < form.power_terms.size(); ++i) {
        const PowerTerm& t = form.power_terms[i];
        const Rational* coef_rat =
            exact ? &exact->power_terms[i].coef : nullptr;
        const Rational* exp_rat =
            exact ? &exact->power_terms[i].exponent : nullptr;
        append_term(text, first, t.coef,
                    scaled_text(t.coef, coef_rat, power_text(t.exponent, exp_rat)));
    }
    if (form.log_coef) {
        const Rational* rat = exact && exact->log_coef ? &*exact->log_coef : nullptr;
        append_term(text, first, *form.log_coef,
                    scaled_text(*form.log_coef, rat, "ln|x|"));
    }
    {
        const HypergeometricTail& tail = form.tail;
        const std::size_t p = tail.params.numerator_params.size();
        const std::size_t q = tail.params.denominator_params.size();
        std::string fn = std::to_string(p) + "F" + std::to_string(q) + "(";
        for (std::size_t i = 0; i < p; ++i) {
            if (i) fn += ", ";
            fn += pfq_param_text(tail.params.numerator_params[i],
                                 exact ? &exact->tail.a[i] : nullptr);
        }
        fn += "; ";
        for (std::size_t i = 0; i < q; ++i) {
            if (i) fn += ", ";
            fn += pfq_param_text(tail.params.denominator_params[i],
                                 exact ? &exact->tail.b[i] : nullptr);
        }
        fn += "; ";
        {
            const std::string arg_pow =
                power_text(tail.arg_power,
                           exact ? &exact->tail.arg_power : nullptr);
            std::string arg = scaled_text(
                tail.arg_scale, exact ? &exact->tail.arg_scale : nullptr, arg_pow);
            fn += tail.arg_scale < 0 ? "-" + arg : arg;
        }
        fn += ")";
        const std::string t0_pow = power_text(
            tail.t0_exponent, exact ? &exact->tail.t0_exponent : nullptr);
        const std::string prefac = scaled_text(
            tail.t0_coef, exact ? &exact->tail.t0_coef : nullptr, t0_pow);
        append_term(text, first, tail.t0_coef, "(" + prefac + ")*" + fn);
    }
    text += " + C";
    doc.text = text;

    // --- structured ---
    json j;
    j["family"] = family_name(spec.family);
    j["lambda"] = spec.lambda;
    j["beta"] = spec.beta;
    j["alpha"] = spec.alpha;
    json head = json::array();
    for (std::size_t i = 0; i < form.power_terms.size(); ++i) {
        json entry;
        if (exact) {
            const Rational& c = exact->power_terms[i].coef;
            entry["coef_num"] = json_from_bigint(numerator(c));
            if (denominator(c) != 1) {
                entry["coef_den"] = json_from_bigint(denominator(c));
            }
        }
        entry["coef_float"] = form.power_terms[i].coef;
        entry["exponent"] = form.power_terms[i].exponent;
        head.push_back(entry);
    }
    j["head"] = head;
    if (form.log_coef) {
        if (exact && exact->log_coef) {
            j["log_coef_num"] = json_from_bigint(numerator(*exact->log_coef));
            j["log_coef_den"] = json_from_bigint(denominator(*exact->log_coef));
        }
        j["log_coef"] = *form.log_coef;
    }
    json tail;
    if (exact) {
        tail["t0_num"] = json_from_bigint(numerator(exact->tail.t0_coef));
        tail["t0_den"] = json_from_bigint(denominator(exact->tail.t0_coef));
    }
    tail["t0"] = form.tail.t0_coef;
    tail["exponent"] = form.tail.t0_exponent;
    tail["p"] = form.tail.params.numerator_params.size();
    tail["q"] = form.tail.params.denominator_params.size();
    tail["a"] = form.tail.params.numerator_params;
    tail["b"] = form.tail.params.denominator_params;
    if (exact) {
        json ae = json::array();
        for (const Rational& r : exact->tail.a) ae.push_back(param_to_string(r));
        json be = json::array();
        for (const Rational& r : exact->tail.b) be.push_back(param_to_string(r));
        tail["a_exact"] = ae;
        tail["b_exact"] = be;
        tail["arg_scale_num"] = json_from_bigint(numerator(exact->tail.arg_scale));
        tail["arg_scale_den"] = json_from_bigint(denominator(exact->tail.arg_scale));
    }
    tail["arg_scale"] = form.tail.arg_scale;
    tail["arg_power"] = form.tail.arg_power;
    j["tail"] = tail;
    doc.structured = j;
    return doc;
}

}  // namespace

FormulaDoc emit_formula(const IntegralSpec& spec, FormulaFormat format) {
    const AntiderivativeForm form = integrate_termwise(build_series(spec));
    return build_formula_doc(spec, form, nullptr, format);
}

FormulaDoc emit_formula(const ExactSpec& spec, FormulaFormat format) {
    const ExactForm exact = build_exact_form(spec);
    const AntiderivativeForm form = to_double_form(exact);
    return build_formula_doc(spec.to_double(), form, &exact, format);
}

AntiderivativeForm form_from_structured(const nlohmann::ordered_json& doc) {
    AntiderivativeForm form;
    for (const auto& entry : doc.at("head")) {
        form.power_terms.push_back({entry.at("coef_float").get<double>(),
                                    entry.at("exponent").get<double>()});
    }
    if (doc.contains("log_coef")) {
        form.log_coef = doc.at("log_coef").get<double>();
    }
    const auto& tail = doc.at("tail");
    form.tail.t0_coef = tail.at("t0").get<double>();
    form.tail.t0_exponent = tail.at("exponent").get<double>();
    form.tail.params.numerator_params =
        tail.at("a").get<std::vector<double>>();
    form.tail.params.denominator_params =
        tail.at("b").get<std::vector<double>>();
    form.tail.arg_scale = tail.at("arg_scale").get<double>();
    form.tail.arg_power = tail.at("arg_power").get<double>();
    return form;
}

}  // namespace nonelem
