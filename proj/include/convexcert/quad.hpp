/**
 * @file quad.hpp
 * @brief Exact arithmetic in the real quadratic field Q(sqrt(d)).
 *
 * A QuadElem stores the coordinates (a, b) of a + b*sqrt(d) as canonical
 * rationals. Since d is squarefree and >= 2, sqrt(d) is irrational and the
 * representation is injective, so structural equality is equality of real
 * numbers and signs are decided exactly from integer comparisons alone.
 *
 * Elements with b = 0 are plain rationals; they carry no radicand and are
 * compatible with every field. Arithmetic mixing two distinct radicands
 * throws std::invalid_argument.
 */
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "convexcert/rational.hpp"

namespace convexcert {

class QuadElem;

/// Validated radicand d. Construction rejects d <= 1 and non-squarefree d
/// (which covers perfect squares); both the injectivity of the (a, b)
/// representation and the exact sign rule require sqrt(d) irrational.
class QuadField {
 public:
  explicit QuadField(std::int64_t radicand);

  std::int64_t radicand() const noexcept { return radicand_; }

  QuadElem make(Rational rational_part, Rational root_part) const;
  QuadElem from_rational(Rational value) const;
  QuadElem zero() const;
  QuadElem one() const;
  QuadElem root() const;  // sqrt(d)

  /// Inverse of format_quad. Accepts sums of rational terms and rational
  /// multiples of sqrt(d); rejects any other radicand. Throws
  /// std::invalid_argument on malformed input.
  QuadElem parse(std::string_view text) const;

  friend bool operator==(const QuadField&, const QuadField&) = default;

 private:
  std::int64_t radicand_;
};

class QuadElem {
 public:
  QuadElem() = default;  // zero
  QuadElem(Rational value);  // NOLINT: rationals embed implicitly
  QuadElem(int value) : QuadElem(Rational(value)) {}

  const Rational& rational_part() const noexcept { return rat_; }
  const Rational& root_part() const noexcept { return irr_; }

  /// 0 when the value is rational, the field's d otherwise.
  std::int64_t radicand() const noexcept { return radicand_; }

  bool is_rational() const noexcept { return irr_.is_zero(); }
  bool is_zero() const noexcept { return rat_.is_zero() && irr_.is_zero(); }

  friend QuadElem operator+(const QuadElem& x, const QuadElem& y);
  friend QuadElem operator-(const QuadElem& x, const QuadElem& y);
  friend QuadElem operator*(const QuadElem& x, const QuadElem& y);
  friend QuadElem operator/(const QuadElem& x, const QuadElem& y);
  QuadElem operator-() const;

  QuadElem& operator+=(const QuadElem& y) { return *this = *this + y; }
  QuadElem& operator-=(const QuadElem& y) { return *this = *this - y; }
  QuadElem& operator*=(const QuadElem& y) { return *this = *this * y; }

  /// Structural equality of canonical coordinates. By injectivity this is
  /// real-number equality; it never throws, even across radicands.
  friend bool operator==(const QuadElem& x, const QuadElem& y);

  /// Real-number order, decided exactly via sign_of(x - y).
  friend std::strong_ordering operator<=>(const QuadElem& x, const QuadElem& y);

  /// Multiplicative inverse; throws std::domain_error on zero.
  friend QuadElem inverse(const QuadElem& x);

  friend QuadElem pow(const QuadElem& x, unsigned exponent);

  /// Exact sign of the real number a + b*sqrt(d):
  /// if b = 0 it is sign(a); if a = 0 it is sign(b); if the signs agree it
  /// is the common sign; otherwise the part with the larger square wins
  /// (a^2 vs b^2*d; equality is impossible for a, b != 0 since d is not a
  /// square of a rational).
  friend int sign_of(const QuadElem& x);

 private:
  friend class QuadField;

  QuadElem(Rational rat, Rational irr, std::int64_t radicand);

  Rational rat_;
  Rational irr_;
  std::int64_t radicand_ = 0;
};

/// "p/q", "r/s*sqrt(d)" or "p/q + r/s*sqrt(d)" with canonical rationals and
/// the sign of the root coefficient rendered as the joining operator.
std::string format_quad(const QuadElem& value);

}  // namespace convexcert
