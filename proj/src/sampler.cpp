#include "convexcert/sampler.hpp"

#include <limits>
#include <stdexcept>

namespace convexcert {

Sampler::Sampler(std::uint64_t seed, SamplerBounds bounds)
    : engine_(seed), bounds_(bounds) {
  if (bounds_.max_numerator == 0 || bounds_.max_denominator == 0) {
    throw std::invalid_argument("sampler: bounds must be positive");
  }
}

std::uint64_t Sampler::below(std::uint64_t bound) {
  if (bound == 0) {
    throw std::invalid_argument("sampler: empty range");
  }
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t raw = engine_();
    if (raw < limit) {
      return raw % bound;
    }
  }
}

Rational Sampler::rational() {
  const auto span = 2 * static_cast<std::uint64_t>(bounds_.max_numerator) + 1;
  const auto numerator = static_cast<std::int64_t>(below(span)) -
                         static_cast<std::int64_t>(bounds_.max_numerator);
  const auto denominator = static_cast<std::int64_t>(below(bounds_.max_denominator)) + 1;
  return make_rational(BigInt(numerator), BigInt(denominator));
}

Rational Sampler::positive_rational() {
  for (;;) {
    Rational candidate = rational();
    if (sign_of(candidate) > 0) {
      return candidate;
    }
  }
}

Rational Sampler::unit_rational() {
  const auto denominator = below(bounds_.max_denominator) + 1;
  const auto numerator = below(denominator + 1);
  return make_rational(BigInt(numerator), BigInt(denominator));
}

QuadElem Sampler::quad(const QuadField& field) {
  Rational rational_part = rational();
  Rational root_part = rational();
  return field.make(std::move(rational_part), std::move(root_part));
}

QuadElem Sampler::positive_quad(const QuadField& field) {
  for (;;) {
    QuadElem candidate = quad(field);
    if (sign_of(candidate) > 0) {
      return candidate;
    }
  }
}

}  // namespace convexcert
