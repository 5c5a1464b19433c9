#include "convexcert/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace convexcert {

Rational make_rational(BigInt numerator, BigInt denominator) {
  if (denominator.is_zero()) {
    throw std::domain_error("rational: zero denominator");
  }
  if (denominator.sign() < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  // cpp_rational reduces to lowest terms on construction.
  return Rational(std::move(numerator), std::move(denominator));
}

int sign_of(const Rational& value) { return value.sign(); }

bool is_integer(const Rational& value) { return denominator(value) == 1; }

Rational rational_pow(const Rational& value, unsigned exponent) {
  Rational result(1);
  for (unsigned i = 0; i < exponent; ++i) {
    result *= value;
  }
  return result;
}

BigInt factorial(unsigned n) {
  BigInt result(1);
  for (unsigned i = 2; i <= n; ++i) {
    result *= i;
  }
  return result;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) {
    return BigInt(0);
  }
  if (k > n - k) {
    k = n - k;
  }
  BigInt result(1);
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: C(n, j) is an integer for every prefix j
  }
  return result;
}

std::string format_rational(const Rational& value) { return value.str(); }

namespace {

bool valid_integer_token(std::string_view token) {
  if (!token.empty() && (token.front() == '+' || token.front() == '-')) {
    token.remove_prefix(1);
  }
  if (token.empty()) {
    return false;
  }
  for (char c : token) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  std::string_view num_part = text.substr(0, slash);
  if (!valid_integer_token(num_part)) {
    throw std::invalid_argument("rational: malformed numerator in '" +
                                std::string(text) + "'");
  }
  if (num_part.front() == '+') {
    num_part.remove_prefix(1);
  }
  BigInt num{std::string(num_part)};
  if (slash == std::string_view::npos) {
    return Rational(num);
  }
  const std::string_view den_part = text.substr(slash + 1);
  if (!valid_integer_token(den_part) || den_part.front() == '+' ||
      den_part.front() == '-') {
    throw std::invalid_argument("rational: malformed denominator in '" +
                                std::string(text) + "'");
  }
  BigInt den{std::string(den_part)};
  if (den.is_zero()) {
    throw std::invalid_argument("rational: zero denominator in '" +
                                std::string(text) + "'");
  }
  return make_rational(std::move(num), std::move(den));
}

}  // namespace convexcert
