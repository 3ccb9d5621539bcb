#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace nonelem {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses a finite decimal string ("-1", "2.7", "1.25e-3") into an exact
// rational. Returns nullopt for anything else (inf/nan/hex/garbage).
std::optional<Rational> parse_decimal(std::string_view text);

bool is_integer(const Rational& r);

// Rational q^n for integer n (n may be negative; q must be nonzero then).
Rational rational_pow(const Rational& base, long long n);

// Shortest faithful rendering: integers plain ("5"), values with a finite
// decimal expansion as decimals ("2.7", "-0.125"), everything else as a
// fraction ("7/2").
std::string rational_to_string(const Rational& r);

// Like rational_to_string but keeps half-integers in fraction form ("7/2"),
// the conventional way hypergeometric parameters are written.
std::string param_to_string(const Rational& r);

}  // namespace nonelem
