/**
 * @file sampler.hpp
 * @brief Deterministic seeded sampling of rationals and field elements.
 *
 * Built on std::mt19937_64, whose output sequence is fixed by the C++
 * standard, with hand-rolled rejection reduction, so a given seed yields
 * the same draws on every platform and in every build mode.
 */
#pragma once

#include <cstdint>
#include <random>

#include "convexcert/quad.hpp"
#include "convexcert/rational.hpp"

namespace convexcert {

/// Numerator/denominator magnitude limits for sampled rationals. The
/// defaults keep the big-integer growth of iterated differences of
/// high-degree powers modest.
struct SamplerBounds {
  std::uint32_t max_numerator = 100;
  std::uint32_t max_denominator = 100;

  friend bool operator==(const SamplerBounds&, const SamplerBounds&) = default;
};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed, SamplerBounds bounds = {});

  const SamplerBounds& bounds() const noexcept { return bounds_; }

  /// Uniform in [0, bound); bound >= 1. Rejection reduction keeps the
  /// mapping from engine output portable.
  std::uint64_t below(std::uint64_t bound);

  /// Numerator in [-max_numerator, max_numerator], denominator in
  /// [1, max_denominator], then reduced.
  Rational rational();

  /// Rejects-and-resamples until the sign is +1.
  Rational positive_rational();

  /// Uniform p/q with 0 <= p <= q <= max_denominator.
  Rational unit_rational();

  QuadElem quad(const QuadField& field);

  /// Rejects-and-resamples until sign_of is +1.
  QuadElem positive_quad(const QuadField& field);

 private:
  std::mt19937_64 engine_;
  SamplerBounds bounds_;
};

}  // namespace convexcert
