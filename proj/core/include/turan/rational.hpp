#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace turan {

// Arbitrary-precision integer and rational types. All derivation, rank and
// simplex arithmetic in this library is exact; no floating point anywhere.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Largest integer q with q <= x.
BigInt floor_rational(const Rational& x);

// Smallest integer q with q >= x.
BigInt ceil_rational(const Rational& x);

// "p" or "p/q" with q > 0 and gcd(p,q)=1; the inverse of parse_rational.
std::string rational_to_string(const Rational& x);

// Accepts "p" and "p/q"; throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

}  // namespace turan
