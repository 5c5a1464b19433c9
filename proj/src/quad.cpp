#include "convexcert/quad.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>
#include <utility>

namespace convexcert {

namespace {

bool squarefree(std::int64_t n) {
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % (p * p) == 0) {
      return false;
    }
  }
  return true;
}

/// Radicand of a binary operation: pure rationals (radicand 0) are
/// compatible with everything, distinct roots are not.
std::int64_t combined_radicand(const QuadElem& x, const QuadElem& y) {
  const std::int64_t dx = x.radicand();
  const std::int64_t dy = y.radicand();
  if (dx != 0 && dy != 0 && dx != dy) {
    throw std::invalid_argument("quad: mixed radicands " + std::to_string(dx) +
                                " and " + std::to_string(dy));
  }
  return dx != 0 ? dx : dy;
}

}  // namespace

QuadField::QuadField(std::int64_t radicand) : radicand_(radicand) {
  if (radicand < 2 || !squarefree(radicand)) {
    throw std::domain_error("quad: radicand must be a squarefree integer >= 2, got " +
                            std::to_string(radicand));
  }
}

QuadElem QuadField::make(Rational rational_part, Rational root_part) const {
  return QuadElem(std::move(rational_part), std::move(root_part), radicand_);
}

QuadElem QuadField::from_rational(Rational value) const {
  return QuadElem(std::move(value));
}

QuadElem QuadField::zero() const { return QuadElem(); }

QuadElem QuadField::one() const { return QuadElem(Rational(1)); }

QuadElem QuadField::root() const { return make(Rational(0), Rational(1)); }

QuadElem::QuadElem(Rational value) : rat_(std::move(value)) {}

QuadElem::QuadElem(Rational rat, Rational irr, std::int64_t radicand)
    : rat_(std::move(rat)), irr_(std::move(irr)), radicand_(radicand) {
  if (irr_.is_zero()) {
    radicand_ = 0;
  }
}

QuadElem operator+(const QuadElem& x, const QuadElem& y) {
  const std::int64_t d = combined_radicand(x, y);
  return QuadElem(x.rat_ + y.rat_, x.irr_ + y.irr_, d);
}

QuadElem operator-(const QuadElem& x, const QuadElem& y) {
  const std::int64_t d = combined_radicand(x, y);
  return QuadElem(x.rat_ - y.rat_, x.irr_ - y.irr_, d);
}

QuadElem QuadElem::operator-() const {
  return QuadElem(-rat_, -irr_, radicand_);
}

QuadElem operator*(const QuadElem& x, const QuadElem& y) {
  const std::int64_t d = combined_radicand(x, y);
  // (a + b*sqrt(d)) * (a' + b'*sqrt(d)) = (aa' + bb'd) + (ab' + a'b)*sqrt(d)
  Rational rat = x.rat_ * y.rat_ + x.irr_ * y.irr_ * d;
  Rational irr = x.rat_ * y.irr_ + y.rat_ * x.irr_;
  return QuadElem(std::move(rat), std::move(irr), d);
}

QuadElem inverse(const QuadElem& x) {
  if (x.is_zero()) {
    throw std::domain_error("quad: inverse of zero");
  }
  // 1 / (a + b*sqrt(d)) = (a - b*sqrt(d)) / (a^2 - b^2 d); the norm is
  // nonzero since sqrt(d) is irrational.
  const Rational norm = x.rat_ * x.rat_ - x.irr_ * x.irr_ * x.radicand_;
  return QuadElem(x.rat_ / norm, -x.irr_ / norm, x.radicand_);
}

QuadElem operator/(const QuadElem& x, const QuadElem& y) {
  return x * inverse(y);
}

QuadElem pow(const QuadElem& x, unsigned exponent) {
  QuadElem result(Rational(1));
  for (unsigned i = 0; i < exponent; ++i) {
    result *= x;
  }
  return result;
}

int sign_of(const QuadElem& x) {
  const int sign_rat = sign_of(x.rat_);
  const int sign_irr = sign_of(x.irr_);
  if (sign_irr == 0) {
    return sign_rat;
  }
  if (sign_rat == 0 || sign_rat == sign_irr) {
    return sign_irr;
  }
  const Rational rat_square = x.rat_ * x.rat_;
  const Rational irr_square_d = x.irr_ * x.irr_ * x.radicand_;
  if (rat_square == irr_square_d) {
    throw std::logic_error("quad: sqrt(d) rational; radicand validation violated");
  }
  return rat_square > irr_square_d ? sign_rat : sign_irr;
}

bool operator==(const QuadElem& x, const QuadElem& y) {
  return x.rat_ == y.rat_ && x.irr_ == y.irr_ && x.radicand_ == y.radicand_;
}

std::strong_ordering operator<=>(const QuadElem& x, const QuadElem& y) {
  switch (sign_of(x - y)) {
    case -1:
      return std::strong_ordering::less;
    case 1:
      return std::strong_ordering::greater;
    default:
      return std::strong_ordering::equal;
  }
}

std::string format_quad(const QuadElem& value) {
  if (value.is_rational()) {
    return format_rational(value.rational_part());
  }
  const Rational& irr = value.root_part();
  std::string root_term = format_rational(Rational(abs(irr))) + "*sqrt(" +
                          std::to_string(value.radicand()) + ")";
  if (value.rational_part().is_zero()) {
    return sign_of(irr) < 0 ? "-" + root_term : root_term;
  }
  return format_rational(value.rational_part()) +
         (sign_of(irr) < 0 ? " - " : " + ") + root_term;
}

namespace {

/// Recursive-descent reader for sums of rational terms and rational
/// multiples of sqrt(d). Liberal about whitespace and the U+2212 minus.
class QuadReader {
 public:
  QuadReader(std::string text, std::int64_t radicand)
      : text_(std::move(text)), radicand_(radicand) {}

  std::pair<Rational, Rational> run() {
    skip_ws();
    if (eof()) {
      fail("empty input");
    }
    bool first = true;
    Rational rat_sum(0);
    Rational irr_sum(0);
    while (!eof()) {
      int sign = 1;
      if (first) {
        if (peek() == '+' || peek() == '-') {
          sign = peek() == '-' ? -1 : 1;
          ++pos_;
        }
      } else {
        if (peek() == '+') {
          ++pos_;
        } else if (peek() == '-') {
          sign = -1;
          ++pos_;
        } else {
          fail("expected '+' or '-'");
        }
      }
      skip_ws();
      auto [coefficient, is_root] = term();
      if (sign < 0) {
        coefficient = -coefficient;
      }
      (is_root ? irr_sum : rat_sum) += coefficient;
      first = false;
      skip_ws();
    }
    return {std::move(rat_sum), std::move(irr_sum)};
  }

 private:
  [[noreturn]] void fail(const std::string& reason) const {
    throw std::invalid_argument("quad: cannot parse '" + text_ + "': " + reason +
                                " at position " + std::to_string(pos_));
  }

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
  }

  bool at_keyword(std::string_view keyword) const {
    return text_.compare(pos_, keyword.size(), keyword) == 0;
  }

  std::pair<Rational, bool> term() {
    if (at_keyword("sqrt")) {
      read_root();
      return {Rational(1), true};
    }
    Rational coefficient = read_number();
    skip_ws();
    if (!eof() && peek() == '*') {
      ++pos_;
      skip_ws();
      read_root();
      return {std::move(coefficient), true};
    }
    return {std::move(coefficient), false};
  }

  void read_root() {
    if (!at_keyword("sqrt")) {
      fail("expected sqrt(...)");
    }
    pos_ += 4;
    skip_ws();
    if (eof() || peek() != '(') {
      fail("expected '(' after sqrt");
    }
    ++pos_;
    skip_ws();
    const std::size_t start = pos_;
    while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
    std::int64_t parsed = 0;
    const auto result =
        std::from_chars(text_.data() + start, text_.data() + pos_, parsed);
    if (result.ec != std::errc() || start == pos_) {
      fail("expected radicand digits");
    }
    skip_ws();
    if (eof() || peek() != ')') {
      fail("expected ')'");
    }
    ++pos_;
    if (parsed != radicand_) {
      fail("radicand " + std::to_string(parsed) + " does not match field " +
           std::to_string(radicand_));
    }
  }

  Rational read_number() {
    const std::size_t start = pos_;
    bool seen_slash = false;
    while (!eof() && (std::isdigit(static_cast<unsigned char>(peek())) ||
                      (peek() == '/' && !seen_slash))) {
      seen_slash = seen_slash || peek() == '/';
      ++pos_;
    }
    if (start == pos_) {
      fail("expected a number");
    }
    try {
      return parse_rational(std::string_view(text_).substr(start, pos_ - start));
    } catch (const std::invalid_argument&) {
      fail("malformed rational");
    }
  }

  std::string text_;
  std::int64_t radicand_;
  std::size_t pos_ = 0;
};

std::string normalize_minus(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    // U+2212 (minus sign) -> '-'
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      out.push_back('-');
      i += 2;
    } else {
      out.push_back(text[i]);
    }
  }
  return out;
}

}  // namespace

QuadElem QuadField::parse(std::string_view text) const {
  QuadReader reader(normalize_minus(text), radicand_);
  auto [rat_sum, irr_sum] = reader.run();
  return make(std::move(rat_sum), std::move(irr_sum));
}

}  // namespace convexcert
