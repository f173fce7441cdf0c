#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace grassdesign {

/// Arbitrary-precision rational used for all exact combinatorial and
/// moment computations.  Conversions to double happen only at API
/// boundaries that hand values to floating-point consumers.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

double to_double(const Rational& r);

/// Renders "p/q" (or just "p" when the denominator is 1).
std::string to_fraction_string(const Rational& r);

/// Parses "p", "p/q" or a plain decimal like "-1.5" into an exact rational.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& text);

/// Exact n! as a big integer; n must be >= 0.
BigInt factorial(int n);

/// Rising factorial (a)_s = a (a+1) ... (a+s-1), with (a)_0 = 1.
Rational rising_factorial(const Rational& a, int s);

}  // namespace grassdesign
