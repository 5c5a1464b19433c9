/**
 * @file verification.hpp
 * @brief Seeded identity suites: the standing exact checks behind the
 *        `identities` command.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "convexcert/quad.hpp"
#include "convexcert/sampler.hpp"

namespace convexcert {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> failures;  // exact inputs and both sides, rendered

  bool passed() const { return failures.empty(); }
};

struct IdentitySuiteConfig {
  unsigned n_max = 5;            // power identity checked for orders 1..n_max
  unsigned degree_max = 5;       // polynomial degree for additive composition
  unsigned step_max = 4;         // step count for composition and permutations
  unsigned oracle_step_max = 6;  // step count for the oracle cross-check
  std::size_t samples = 200;     // instances per order / per suite

  friend bool operator==(const IdentitySuiteConfig&, const IdentitySuiteConfig&) = default;
};

/// Runs the four suites in a fixed order from a single seeded sampler:
/// power-identity, additive-composition, oracle-equivalence,
/// permutation-symmetry. Deterministic per (field, config, seed, bounds).
/// Throws std::invalid_argument when config.samples is zero.
std::vector<SuiteResult> run_identity_suites(const QuadField& field,
                                             const IdentitySuiteConfig& config,
                                             std::uint64_t seed,
                                             const SamplerBounds& bounds);

}  // namespace convexcert
