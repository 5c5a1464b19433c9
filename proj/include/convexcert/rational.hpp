/**
 * @file rational.hpp
 * @brief Arbitrary-precision rational numbers: the scalar base of the library.
 *
 * Backed by Boost.Multiprecision (cpp_int / cpp_rational). Values are always
 * canonical: gcd(|numerator|, denominator) = 1 and denominator > 0, so
 * structural equality coincides with mathematical equality.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace convexcert {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Builds numerator/denominator, normalizing the sign onto the numerator.
/// Throws std::domain_error on a zero denominator.
Rational make_rational(BigInt numerator, BigInt denominator);

/// Exact sign: -1, 0 or +1.
int sign_of(const Rational& value);

bool is_integer(const Rational& value);

/// value^exponent by exact repeated multiplication; value^0 = 1.
Rational rational_pow(const Rational& value, unsigned exponent);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// "p" for integers, "p/q" otherwise, sign on the numerator.
std::string format_rational(const Rational& value);

/// Inverse of format_rational. Throws std::invalid_argument on malformed
/// input (including a zero denominator).
Rational parse_rational(std::string_view text);

}  // namespace convexcert
