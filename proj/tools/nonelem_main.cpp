// Command-line front end: evaluate the closed-form primitives, compute and
// verify definite integrals, print the closed forms, run the self-test
// suite.
//
// Exit codes: 0 success, 1 usage/parse error, 2 numeric non-convergence,
// 3 verification mismatch.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nonelem/exact.hpp"
#include "nonelem/integrals.hpp"
#include "nonelem/selftest.hpp"
#include "nonelem/verify.hpp"

namespace {

using nonelem::ExactSpec;
using nonelem::Family;
using nonelem::IntegralSpec;
using nonelem::Rational;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNoConvergence = 2;
constexpr int kExitMismatch = 3;

struct Options {
    std::string family;
    std::string lambda;
    std::string beta;
    std::string alpha;
    double x = 0.0;
    double a = 0.0;
    double b = 0.0;
    std::string method = "both";
    double tol = 1e-12;
    bool tol_given = false;
    std::string output = "text";
};

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kExitUsage;
}

// Builds the exact-rational spec from the decimal strings; the double spec
// is derived from it. Returns nullopt (after printing) on bad input.
std::optional<ExactSpec> make_spec(const Options& opt) {
    const auto family = nonelem::family_from_name(opt.family);
    if (!family) {
        usage_error("unknown family '" + opt.family +
                    "' (expected sin|sinh|cos|cosh|exp)");
        return std::nullopt;
    }
    const auto lambda = nonelem::parse_decimal(opt.lambda);
    const auto beta = nonelem::parse_decimal(opt.beta);
    const auto alpha = nonelem::parse_decimal(opt.alpha);
    if (!lambda || !beta || !alpha) {
        usage_error("--lambda/--beta/--alpha must be finite decimal numbers");
        return std::nullopt;
    }
    if (*lambda == 0) {
        usage_error("--lambda must be nonzero");
        return std::nullopt;
    }
    if (*beta < 1) {
        usage_error("--beta must be >= 1");
        return std::nullopt;
    }
    return ExactSpec{*family, *lambda, *beta, *alpha};
}

json request_json(const char* subcommand, const Options& opt,
                  const IntegralSpec& spec) {
    json j;
    j["subcommand"] = subcommand;
    j["family"] = nonelem::family_name(spec.family);
    j["lambda"] = spec.lambda;
    j["beta"] = spec.beta;
    j["alpha"] = spec.alpha;
    j["tol"] = opt.tol;
    return j;
}

json decomposition_json(const IntegralSpec& spec) {
    const auto dec = nonelem::decompose(spec.family, spec.alpha, spec.beta);
    json j;
    j["m"] = dec.m;
    j["epsilon"] = dec.epsilon;
    j["case"] = nonelem::eps_case_name(dec.kase);
    return j;
}

json eval_json(const nonelem::EvalResult& r) {
    json j;
    j["value"] = r.value;
    j["abs_error_estimate"] = r.abs_error_estimate;
    j["terms_used"] = r.terms_used;
    j["digits_lost"] = r.digits_lost;
    j["converged"] = r.converged;
    return j;
}

void print_eval_text(std::ostream& out, const nonelem::EvalResult& r) {
    out.precision(17);
    out << "value              = " << r.value << "\n"
        << "abs_error_estimate = " << r.abs_error_estimate << "\n"
        << "terms_used         = " << r.terms_used << "\n"
        << "digits_lost        = " << r.digits_lost << "\n"
        << "converged          = " << (r.converged ? "true" : "false") << "\n";
}

int run_eval(const Options& opt) {
    const auto exact = make_spec(opt);
    if (!exact) return kExitUsage;
    if (!(opt.x > 0.0) || !std::isfinite(opt.x)) {
        return usage_error("--x must be > 0");
    }
    const IntegralSpec spec = exact->to_double();
    const nonelem::AntiderivativeForm form =
        nonelem::to_double_form(nonelem::build_exact_form(*exact));
    const nonelem::EvalResult result = nonelem::eval_form(form, opt.x, opt.tol);

    if (opt.output == "json") {
        json j;
        j["request"] = request_json("eval", opt, spec);
        j["request"]["x"] = opt.x;
        j["decomposition"] = decomposition_json(spec);
        j.update(eval_json(result));
        std::cout << j.dump(2) << "\n";
    } else {
        print_eval_text(std::cout, result);
    }
    return result.converged ? kExitOk : kExitNoConvergence;
}

int run_definite(const Options& opt) {
    const auto exact = make_spec(opt);
    if (!exact) return kExitUsage;
    if (!(opt.a > 0.0) || !(opt.b > opt.a) || !std::isfinite(opt.b)) {
        return usage_error("definite requires 0 < a < b");
    }
    if (opt.method != "formula" && opt.method != "quadrature" &&
        opt.method != "both") {
        return usage_error("--method must be formula|quadrature|both");
    }
    const IntegralSpec spec = exact->to_double();

    json j;
    j["request"] = request_json("definite", opt, spec);
    j["request"]["a"] = opt.a;
    j["request"]["b"] = opt.b;
    j["request"]["method"] = opt.method;
    j["decomposition"] = decomposition_json(spec);

    int exit_code = kExitOk;
    if (opt.method == "formula") {
        const nonelem::AntiderivativeForm form =
            nonelem::to_double_form(nonelem::build_exact_form(*exact));
        const auto fa = nonelem::eval_form(form, opt.a, opt.tol);
        const auto fb = nonelem::eval_form(form, opt.b, opt.tol);
        j["value"] = fb.value - fa.value;
        j["formula_at_a"] = eval_json(fa);
        j["formula_at_b"] = eval_json(fb);
        if (!fa.converged || !fb.converged) exit_code = kExitNoConvergence;
        if (opt.output != "json") {
            std::cout.precision(17);
            std::cout << "F(b) - F(a) = " << fb.value - fa.value << "\n";
        }
    } else if (opt.method == "quadrature") {
        const auto f = [&](double t) { return nonelem::integrand(spec, t); };
        const auto q = nonelem::adaptive_quadrature(
            f, opt.a, opt.b, opt.tol * std::max(1.0, std::abs(opt.b - opt.a)));
        j["value"] = q.value;
        json oj;
        oj["value"] = q.value;
        oj["abs_error_estimate"] = q.abs_error_estimate;
        oj["subdivisions"] = q.subdivisions;
        oj["converged"] = q.converged;
        j["oracle"] = oj;
        if (!q.converged) exit_code = kExitNoConvergence;
        if (opt.output != "json") {
            std::cout.precision(17);
            std::cout << "quadrature = " << q.value << "\n";
        }
    } else {
        const auto report = nonelem::compare_definite(spec, opt.a, opt.b, opt.tol);
        j["comparison"] = nonelem::comparison_to_json(report);
        if (!report.oracle.converged || !report.formula_at_a.converged ||
            !report.formula_at_b.converged) {
            exit_code = kExitNoConvergence;
        } else if (!report.pass) {
            exit_code = kExitMismatch;
        }
        if (opt.output != "json") {
            std::cout.precision(17);
            std::cout << "formula    = " << report.formula_value << "\n"
                      << "quadrature = " << report.oracle_value << "\n"
                      << "rel_gap    = " << report.rel_gap << "\n"
                      << "pass       = " << (report.pass ? "true" : "false")
                      << (report.precision_flagged ? "  (precision loss flagged)"
                                                   : "")
                      << "\n";
        }
    }
    if (opt.output == "json") std::cout << j.dump(2) << "\n";
    return exit_code;
}

int run_formula(const Options& opt) {
    const auto exact = make_spec(opt);
    if (!exact) return kExitUsage;
    const auto format = opt.output == "json" ? nonelem::FormulaFormat::Json
                                             : nonelem::FormulaFormat::Text;
    const nonelem::FormulaDoc doc = nonelem::emit_formula(*exact, format);
    if (format == nonelem::FormulaFormat::Json) {
        std::cout << doc.structured.dump(2) << "\n";
    } else {
        std::cout << doc.text << "\n";
    }
    return kExitOk;
}

int run_selftest_cmd() {
    const auto report = nonelem::run_selftest(std::cout);
    return report.failures == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Closed-form evaluation of the non-elementary integrals\n"
        "  sin/sinh: trig(lambda x^beta)/(lambda x^(beta+alpha))\n"
        "  cos/cosh: trig(lambda x^beta)/(lambda x^(2 beta+alpha))\n"
        "  exp:      e^(lambda x^beta)/(lambda x^(beta+alpha))\n"
        "via termwise series integration with hypergeometric tails, checked\n"
        "against adaptive quadrature."};
    app.require_subcommand(1);

    Options opt;
    const auto add_spec_options = [&](CLI::App* sub) {
        sub->add_option("--family", opt.family, "sin|sinh|cos|cosh|exp")
            ->required();
        sub->add_option("--lambda", opt.lambda, "lambda (decimal, nonzero)")
            ->required();
        sub->add_option("--beta", opt.beta, "beta (decimal, >= 1)")->required();
        sub->add_option("--alpha", opt.alpha, "alpha (decimal)")->required();
        sub->add_option("--tol", opt.tol, "tolerance (default 1e-12; env NONELEM_TOL)");
        sub->add_option("--output", opt.output, "text|json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* eval = app.add_subcommand("eval", "Evaluate the primitive F(x)");
    add_spec_options(eval);
    eval->add_option("--x", opt.x, "evaluation point (> 0)")->required();

    CLI::App* definite =
        app.add_subcommand("definite", "Definite integral over [a, b]");
    add_spec_options(definite);
    definite->add_option("--a", opt.a, "lower limit (> 0)")->required();
    definite->add_option("--b", opt.b, "upper limit (> a)")->required();
    definite->add_option("--method", opt.method, "formula|quadrature|both");

    CLI::App* formula =
        app.add_subcommand("formula", "Print the closed form");
    add_spec_options(formula);

    app.add_subcommand("selftest",
                       "Run the verification grid and errata regressions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    // Env override applies only when --tol was not given explicitly.
    for (CLI::App* sub : {eval, definite, formula}) {
        if (sub->parsed() && sub->count("--tol") > 0) opt.tol_given = true;
    }
    if (!opt.tol_given) {
        if (const char* env = std::getenv("NONELEM_TOL")) {
            char* end = nullptr;
            const double v = std::strtod(env, &end);
            if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
                return usage_error("NONELEM_TOL is not a positive number");
            }
            opt.tol = v;
        }
    }
    if (!(opt.tol > 0.0) || !std::isfinite(opt.tol)) {
        return usage_error("--tol must be > 0");
    }

    try {
        if (eval->parsed()) return run_eval(opt);
        if (definite->parsed()) return run_definite(opt);
        if (formula->parsed()) return run_formula(opt);
        return run_selftest_cmd();
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    } catch (const std::domain_error& e) {
        return usage_error(e.what());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoConvergence;
    }
}
