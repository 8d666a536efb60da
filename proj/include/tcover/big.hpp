#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace tcover {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Natural log of a positive big integer, accurate to double precision for
/// values far beyond the double range.
double log_of(const BigInt& x);
double log_of(const Rational& q);

double to_double(const BigInt& x);
double to_double(const Rational& q);

/// Exact rational value of a finite double.
Rational exact_rational(double x);

/// Smallest "nice" rational >= x: the exact value of x nudged upward by a
/// relative 1e-12. Used to turn a floating quantity into a rigorous exact
/// upper bound for rational-mode checks.
Rational rational_upper_bound(double x);

/// Accepts "num/den", "num" or a decimal literal such as "2.5".
Rational parse_rational(std::string_view text);

/// Always "num/den" (den = 1 for integers).
std::string format_rational(const Rational& q);

}  // namespace tcover
