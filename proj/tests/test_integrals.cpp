#include <cmath>
#include <random>

#include <doctest.h>

#include "nonelem/integrals.hpp"
#include "nonelem/verify.hpp"

using namespace nonelem;

TEST_CASE("decompose: printed regression triple") {
    const auto d1 = decompose(Family::Exp, 2.0, 2.0);
    CHECK(d1.m == 1);
    CHECK(d1.epsilon == 0.0);
    CHECK(d1.kase == EpsCase::EpsZero);

    const auto d2 = decompose(Family::Exp, 2.7, 1.0);
    CHECK(d2.m == 2);
    CHECK(d2.epsilon == doctest::Approx(0.7));
    CHECK(d2.kase == EpsCase::General);

    const auto d3 = decompose(Family::Cos, 3.0, 1.0);
    CHECK(d3.m == 1);
    CHECK(d3.epsilon == 1.0);
    CHECK(d3.kase == EpsCase::EpsOne);

    // canonical eps in [0, d): the sine case with alpha < d
    const auto d4 = decompose(Family::Sin, 1.5, 2.0);
    CHECK(d4.m == 0);
    CHECK(d4.epsilon == doctest::Approx(1.5));
    CHECK(d4.kase == EpsCase::General);
}

TEST_CASE("decompose: eps in [0,d) and m*d + eps reconstructs alpha") {
    std::mt19937 gen(31337);
    std::uniform_real_distribution<double> adist(1.001, 25.0);
    std::uniform_real_distribution<double> bdist(1.0, 4.0);
    const Family families[] = {Family::Sin, Family::Cos, Family::Exp};
    for (int i = 0; i < 300; ++i) {
        const Family fam = families[i % 3];
        const double alpha = adist(gen);
        const double beta = bdist(gen);
        const double d = fam == Family::Exp ? beta : 2.0 * beta;
        const auto dec = decompose(fam, alpha, beta);
        CHECK(dec.m >= 0);
        CHECK(dec.epsilon >= 0.0);
        CHECK(dec.epsilon < d);
        CHECK(std::abs(dec.m * d + dec.epsilon - alpha) <= 1e-12);
    }
    CHECK_THROWS_AS(decompose(Family::Sin, 2.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(decompose(Family::Sin, -1.0, 1.0), std::invalid_argument);
}

TEST_CASE("API constructors are thin veneers over the engine") {
    const double x = 1.3;
    CHECK(si_antiderivative(1, 2, 1.5, x).value ==
          evaluate({Family::Sin, 1, 2, 1.5}, x).value);
    CHECK(sinh_antiderivative(1, 2, 1.5, x).value ==
          evaluate({Family::Sinh, 1, 2, 1.5}, x).value);
    CHECK(ci_antiderivative(1, 1, 3, x).value ==
          evaluate({Family::Cos, 1, 1, 3}, x).value);
    CHECK(cosh_antiderivative(1, 1, 3, x).value ==
          evaluate({Family::Cosh, 1, 1, 3}, x).value);
    CHECK(ei_antiderivative(-1, 2, 2, x).value ==
          evaluate({Family::Exp, -1, 2, 2}, x).value);
}

TEST_CASE("ei_antiderivative(-1,2,2) at x = 1 equals 1/3 - 1 - pfq/2") {
    PFQParams p{{1.0, 0.5}, {3.0, 1.5}};
    const double expected = 1.0 / 3.0 - 1.0 - 0.5 * pfq(p, -1.0).value;
    CHECK(ei_antiderivative(-1, 2, 2, 1.0).value ==
          doctest::Approx(expected).epsilon(1e-15));
}

TEST_CASE("ci_antiderivative head includes the explicit n = 0 term") {
    // 1/lambda * x^{1-2beta-alpha}/(1-2beta-alpha) = -x^-4/4 here
    const auto form =
        integrate_termwise(build_series({Family::Cos, 1.0, 1.0, 3.0}));
    CHECK(form.power_terms[0].coef == doctest::Approx(-0.25));
    CHECK(form.power_terms[0].exponent == doctest::Approx(-4.0));
}

TEST_CASE("ei_beta1 is the general path at beta = 1") {
    for (double alpha : {2.0, 2.7, 3.0}) {
        for (double x : {0.5, 1.0, 2.0}) {
            CHECK(ei_beta1(-1.0, alpha, x).value ==
                  ei_antiderivative(-1.0, 1.0, alpha, x).value);
            CHECK(ei_beta1(1.0, alpha, x).value ==
                  ei_antiderivative(1.0, 1.0, alpha, x).value);
        }
    }
}

TEST_CASE("ei_beta1(-1, 2.7, x) tail matches the printed closed form") {
    const FormulaDoc doc = emit_formula(
        ExactSpec{Family::Exp, Rational(-1), Rational(1), Rational(27, 10)});
    const auto& tail = doc.structured.at("tail");
    CHECK(tail.at("t0_num").get<std::int64_t>() == -5);
    CHECK(tail.at("t0_den").get<std::int64_t>() == 156);  // -x^1.3/31.2
    CHECK(tail.at("exponent").get<double>() == doctest::Approx(1.3));
    CHECK(tail.at("a_exact") ==
          nlohmann::ordered_json::array({"1", "1.3"}));
    CHECK(tail.at("b_exact") ==
          nlohmann::ordered_json::array({"5", "2.3"}));
}

TEST_CASE("emit_formula: canonical text for cos(1,1,3)") {
    const FormulaDoc doc = emit_formula(
        ExactSpec{Family::Cos, Rational(1), Rational(1), Rational(3)});
    CHECK(doc.text ==
          "F(x) = -x^-4/4 + x^-2/4 + ln|x|/24 - (x^2/1440)*2F3(1, 1; 7/2, 4, "
          "2; -x^2/4) + C");
}

TEST_CASE("emit_formula: exact rational coefficients, cos(1,1,3)") {
    const FormulaDoc doc = emit_formula(
        ExactSpec{Family::Cos, Rational(1), Rational(1), Rational(3)},
        FormulaFormat::Json);
    const auto& j = doc.structured;
    CHECK(j.at("family") == "cos");
    const auto& head = j.at("head");
    REQUIRE(head.size() == 2);
    CHECK(head[0].at("coef_num").get<std::int64_t>() == -1);
    CHECK(head[0].at("coef_den").get<std::int64_t>() == 4);
    CHECK(head[0].at("exponent").get<double>() == -4.0);
    CHECK(head[1].at("coef_num").get<std::int64_t>() == 1);
    CHECK(head[1].at("coef_den").get<std::int64_t>() == 4);
    CHECK(j.at("log_coef_num").get<std::int64_t>() == 1);
    CHECK(j.at("log_coef_den").get<std::int64_t>() == 24);
    const auto& tail = j.at("tail");
    CHECK(tail.at("t0_num").get<std::int64_t>() == -1);
    CHECK(tail.at("t0_den").get<std::int64_t>() == 1440);
    CHECK(tail.at("p").get<int>() == 2);
    CHECK(tail.at("q").get<int>() == 3);
    CHECK(tail.at("b_exact") ==
          nlohmann::ordered_json::array({"7/2", "4", "2"}));
    CHECK(tail.at("arg_scale_num").get<std::int64_t>() == -1);
    CHECK(tail.at("arg_scale_den").get<std::int64_t>() == 4);
    CHECK(tail.at("arg_power").get<double>() == 2.0);
}

TEST_CASE("emit_formula: exact rational coefficients, exp(-1,2,2)") {
    const FormulaDoc doc = emit_formula(
        ExactSpec{Family::Exp, Rational(-1), Rational(2), Rational(2)});
    const auto& j = doc.structured;
    const auto& head = j.at("head");
    REQUIRE(head.size() == 2);
    CHECK(head[0].at("coef_num").get<std::int64_t>() == 1);
    CHECK(head[0].at("coef_den").get<std::int64_t>() == 3);
    CHECK(head[1].at("coef_num").get<std::int64_t>() == -1);
    CHECK_FALSE(head[1].contains("coef_den"));  // integer coefficient
    CHECK_FALSE(j.contains("log_coef"));
    const auto& tail = j.at("tail");
    CHECK(tail.at("t0_num").get<std::int64_t>() == -1);
    CHECK(tail.at("t0_den").get<std::int64_t>() == 2);
    CHECK(tail.at("a_exact") ==
          nlohmann::ordered_json::array({"1", "1/2"}));
    CHECK(tail.at("b_exact") ==
          nlohmann::ordered_json::array({"3", "3/2"}));
    CHECK(tail.at("arg_power").get<double>() == 2.0);
}

TEST_CASE("emit_formula: printed fragments of ei(-1,1,2.7)") {
    const FormulaDoc doc = emit_formula(
        ExactSpec{Family::Exp, Rational(-1), Rational(1), Rational(27, 10)});
    CHECK(doc.text.find("2F2(1, 1.3; 5, 2.3; -x)") != std::string::npos);
    const auto& head = doc.structured.at("head");
    REQUIRE(head.size() == 4);
    const std::pair<std::int64_t, std::int64_t> expected[] = {
        {10, 27}, {-10, 17}, {5, 7}, {5, 9}};
    const double exponents[] = {-2.7, -1.7, -0.7, 0.3};
    for (int i = 0; i < 4; ++i) {
        CHECK(head[i].at("coef_num").get<std::int64_t>() == expected[i].first);
        CHECK(head[i].at("coef_den").get<std::int64_t>() == expected[i].second);
        CHECK(head[i].at("exponent").get<double>() ==
              doctest::Approx(exponents[i]));
    }
}

TEST_CASE("emit_formula: structured round-trips") {
    const IntegralSpec specs[] = {{Family::Cos, 1, 1, 3},
                                  {Family::Sin, 1, 2, 1.5},
                                  {Family::Exp, -1, 1, 2.7},
                                  {Family::Exp, 1, 1, 2}};
    for (const IntegralSpec& spec : specs) {
        const FormulaDoc doc = emit_formula(spec);

        // json -> text -> json is the identity
        const std::string dumped = doc.structured.dump(2);
        const auto reparsed = nlohmann::ordered_json::parse(dumped);
        CHECK(reparsed.dump(2) == dumped);

        // structured reconstructs the engine form bit-identically
        const AntiderivativeForm engine =
            integrate_termwise(build_series(spec));
        const AntiderivativeForm rebuilt = form_from_structured(reparsed);
        REQUIRE(rebuilt.power_terms.size() == engine.power_terms.size());
        for (std::size_t i = 0; i < engine.power_terms.size(); ++i) {
            CHECK(rebuilt.power_terms[i].coef == engine.power_terms[i].coef);
            CHECK(rebuilt.power_terms[i].exponent ==
                  engine.power_terms[i].exponent);
        }
        CHECK(rebuilt.log_coef == engine.log_coef);
        CHECK(rebuilt.tail.t0_coef == engine.tail.t0_coef);
        CHECK(rebuilt.tail.t0_exponent == engine.tail.t0_exponent);
        CHECK(rebuilt.tail.params.numerator_params ==
              engine.tail.params.numerator_params);
        CHECK(rebuilt.tail.params.denominator_params ==
              engine.tail.params.denominator_params);
        CHECK(rebuilt.tail.arg_scale == engine.tail.arg_scale);
        CHECK(rebuilt.tail.arg_power == engine.tail.arg_power);

        // re-evaluated structured output matches the API value
        for (double x : {0.5, 1.0, 2.0}) {
            const double via_doc = eval_form(rebuilt, x).value;
            const double via_api = evaluate(spec, x).value;
            CHECK(via_doc == doctest::Approx(via_api).epsilon(1e-12));
        }
    }
}

TEST_CASE("emit_formula: exact and float paths agree on the double form") {
    // same split, coefficients within one rounding of each other (the exact
    // path divides once in rationals, the float path runs the recurrence)
    const FormulaDoc exact_doc = emit_formula(
        ExactSpec{Family::Cos, Rational(1), Rational(1), Rational(3)});
    const FormulaDoc float_doc = emit_formula(IntegralSpec{Family::Cos, 1, 1, 3});
    const AntiderivativeForm a = form_from_structured(exact_doc.structured);
    const AntiderivativeForm b = form_from_structured(float_doc.structured);
    REQUIRE(a.power_terms.size() == b.power_terms.size());
    for (std::size_t i = 0; i < a.power_terms.size(); ++i) {
        CHECK(a.power_terms[i].coef ==
              doctest::Approx(b.power_terms[i].coef).epsilon(4e-16));
    }
    CHECK(a.tail.t0_coef == doctest::Approx(b.tail.t0_coef).epsilon(4e-16));
    CHECK(a.tail.params.denominator_params ==
          b.tail.params.denominator_params);
}

TEST_CASE("parse_decimal") {
    CHECK(*parse_decimal("2.7") == Rational(27, 10));
    CHECK(*parse_decimal("-1") == Rational(-1));
    CHECK(*parse_decimal("1.25e-2") == Rational(1, 80));
    CHECK(*parse_decimal("3e2") == Rational(300));
    CHECK(*parse_decimal(".5") == Rational(1, 2));
    CHECK(*parse_decimal("+0.125") == Rational(1, 8));
    CHECK_FALSE(parse_decimal("inf").has_value());
    CHECK_FALSE(parse_decimal("nan").has_value());
    CHECK_FALSE(parse_decimal("1.2.3").has_value());
    CHECK_FALSE(parse_decimal("0x10").has_value());
    CHECK_FALSE(parse_decimal("").has_value());
    CHECK_FALSE(parse_decimal("1e").has_value());
}

TEST_CASE("rational rendering") {
    CHECK(rational_to_string(Rational(27, 10)) == "2.7");
    CHECK(rational_to_string(Rational(-5)) == "-5");
    CHECK(rational_to_string(Rational(7, 2)) == "3.5");
    CHECK(rational_to_string(Rational(1, 3)) == "1/3");
    CHECK(param_to_string(Rational(7, 2)) == "7/2");
    CHECK(param_to_string(Rational(13, 10)) == "1.3");
    CHECK(param_to_string(Rational(5)) == "5");
}
