#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace triality {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Accepts "p", "p/q", "-p/q" and finite decimals such as "0.25".
/// Throws ParseError on anything else (including a zero denominator).
Rational parse_rational(std::string_view text);

Rational make_rational(long long num, long long den = 1);

double to_double(const Rational& r);

/// Exact square root when r is the square of a rational.
bool rational_sqrt(const Rational& r, Rational& root);

}  // namespace triality
