#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace nilgeo {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always in lowest terms with positive denominator;
/// zero is 0/1. Every coefficient in the library is one of these.
using Rational = boost::multiprecision::cpp_rational;

/// Renders as "p" or "p/q".
std::string rational_to_string(const Rational& r);

/// Parses "p", "-p", "p/q". Throws ParseError on anything else or q == 0.
Rational rational_from_string(std::string_view text);

/// If n >= 0 is a perfect square, sets root = sqrt(n) and returns true.
bool perfect_square(const Integer& n, Integer& root);

/// Floor of sqrt(n) for n >= 0.
Integer isqrt_floor(const Integer& n);

}  // namespace nilgeo
