#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace cfree {

/// Exact arbitrary-precision rational. Always in lowest terms with a
/// positive denominator; zero is 0/1. The whole core works over this type,
/// there is no floating point anywhere.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Builds p/q with sign normalization. Throws std::domain_error on q == 0.
Rational make_rational(Integer numer, Integer denom);

/// Parses "p/q" or a plain integer string (optional leading '-' or '+').
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form, denominator always printed: "0/1", "-3/4", "5/1".
std::string to_fraction_string(const Rational& value);

/// Plain rendering: integers without the "/1" tail, otherwise "p/q".
std::string to_plain_string(const Rational& value);

}  // namespace cfree
