#include "nonelem/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace nonelem {
namespace {

BigInt pow10(long long e) {
    BigInt r = 1;
    for (long long i = 0; i < e; ++i) r *= 10;
    return r;
}

}  // namespace

std::optional<Rational> parse_decimal(std::string_view text) {
    std::size_t i = 0;
    const std::size_t n = text.size();
    bool negative = false;
    if (i < n && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    BigInt mantissa = 0;
    long long frac_digits = 0;
    bool any_digit = false;
    for (; i < n && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
        mantissa = mantissa * 10 + (text[i] - '0');
        any_digit = true;
    }
    if (i < n && text[i] == '.') {
        ++i;
        for (; i < n && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
            mantissa = mantissa * 10 + (text[i] - '0');
            ++frac_digits;
            any_digit = true;
        }
    }
    if (!any_digit) return std::nullopt;
    long long exp10 = 0;
    if (i < n && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool exp_neg = false;
        if (i < n && (text[i] == '+' || text[i] == '-')) {
            exp_neg = text[i] == '-';
            ++i;
        }
        if (i == n) return std::nullopt;
        long long e = 0;
        for (; i < n && std::isdigit(static_cast<unsigned char>(text[i])); ++i) {
            e = e * 10 + (text[i] - '0');
            if (e > 100000) return std::nullopt;
        }
        exp10 = exp_neg ? -e : e;
    }
    if (i != n) return std::nullopt;

    Rational value(mantissa, pow10(frac_digits));
    const long long shift = exp10;
    if (shift > 0) {
        value *= Rational(pow10(shift));
    } else if (shift < 0) {
        value /= Rational(pow10(-shift));
    }
    if (negative) value = -value;
    return value;
}

bool is_integer(const Rational& r) { return denominator(r) == 1; }

Rational rational_pow(const Rational& base, long long n) {
    if (n < 0) {
        if (base == 0) throw std::domain_error("rational_pow: 0^negative");
        return 1 / rational_pow(base, -n);
    }
    Rational result = 1;
    Rational b = base;
    long long e = n;
    while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

namespace {

// Finite decimal expansion exists iff the denominator is 2^a * 5^b.
bool decimal_denominator(const BigInt& den, long long& twos, long long& fives) {
    BigInt d = den;
    twos = fives = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++twos;
    }
    while (d % 5 == 0) {
        d /= 5;
        ++fives;
    }
    return d == 1;
}

std::string decimal_string(const Rational& r) {
    long long twos = 0;
    long long fives = 0;
    if (!decimal_denominator(denominator(r), twos, fives)) return {};
    const long long digits = std::max(twos, fives);
    BigInt scaled = numerator(r) * pow10(digits) / denominator(r);
    bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    std::string s = scaled.str();
    if (static_cast<long long>(s.size()) <= digits) {
        s.insert(0, digits - s.size() + 1, '0');
    }
    if (digits > 0) {
        s.insert(s.size() - digits, ".");
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
    }
    return neg ? "-" + s : s;
}

}  // namespace

std::string rational_to_string(const Rational& r) {
    if (is_integer(r)) return numerator(r).str();
    std::string dec = decimal_string(r);
    if (!dec.empty() && dec.size() <= 24) return dec;
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string param_to_string(const Rational& r) {
    if (is_integer(r)) return numerator(r).str();
    if (denominator(r) == 2) {
        return numerator(r).str() + "/" + denominator(r).str();
    }
    return rational_to_string(r);
}

}  // namespace nonelem
