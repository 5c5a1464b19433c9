#include "convexcert/verification.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "convexcert/additive.hpp"
#include "convexcert/convexity.hpp"
#include "convexcert/diffcalc.hpp"
#include "convexcert/function.hpp"

namespace convexcert {

namespace {

std::string render_steps(const StepVector& steps) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i > 0) {
      out << ", ";
    }
    out << format_quad(steps[i]);
  }
  out << "]";
  return out.str();
}

StepVector draw_steps(Sampler& sampler, const QuadField& field, std::size_t count) {
  StepVector steps;
  steps.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    steps.push_back(sampler.quad(field));
  }
  return steps;
}

RealFunction random_polynomial(Sampler& sampler, unsigned degree_max) {
  const auto degree = static_cast<unsigned>(sampler.below(degree_max + 1));
  std::vector<Rational> coefficients;
  coefficients.reserve(degree + 1);
  for (unsigned i = 0; i <= degree; ++i) {
    coefficients.push_back(sampler.rational());
  }
  return polynomial_function(std::move(coefficients));
}

/// Mixed corpus: plain polynomials, the counterexample family, and
/// polynomials precomposed with a random additive map.
RealFunction draw_corpus_function(Sampler& sampler, const QuadField& field) {
  switch (sampler.below(3)) {
    case 0:
      return random_polynomial(sampler, 6);
    case 1:
      return counterexample_function(static_cast<unsigned>(sampler.below(4)) + 1);
    default:
      return compose_with_additive(random_polynomial(sampler, 5),
                                   random_additive_map(sampler, field));
  }
}

SuiteResult power_identity_suite(const QuadField& field,
                                 const IdentitySuiteConfig& config,
                                 Sampler& sampler) {
  SuiteResult result{"power-identity"};
  for (unsigned n = 1; n <= config.n_max; ++n) {
    for (std::size_t s = 0; s < config.samples; ++s) {
      const StepVector steps = draw_steps(sampler, field, n);
      const QuadElem x = sampler.quad(field);
      const IdentityCheck check = check_power_identity(n, steps, x);
      ++result.cases;
      if (!check.holds) {
        result.failures.push_back("n=" + std::to_string(n) + " steps=" +
                                  render_steps(steps) + " x=" + format_quad(x) +
                                  " lhs=" + format_quad(check.lhs) +
                                  " rhs=" + format_quad(check.rhs));
      }
    }
  }
  return result;
}

SuiteResult additive_composition_suite(const QuadField& field,
                                       const IdentitySuiteConfig& config,
                                       Sampler& sampler) {
  SuiteResult result{"additive-composition"};
  for (std::size_t s = 0; s < config.samples; ++s) {
    const AdditiveMap map = random_additive_map(sampler, field);
    const RealFunction g = random_polynomial(sampler, config.degree_max);
    const auto step_count = sampler.below(config.step_max) + 1;
    const StepVector steps = draw_steps(sampler, field, step_count);
    const QuadElem x = sampler.quad(field);
    const IdentityCheck check = check_additive_composition(g, map, steps, x);
    ++result.cases;
    if (!check.holds) {
      result.failures.push_back(
          "g=" + g.descriptor + " a=(" + format_quad(map.image_of_one()) + "; " +
          format_quad(map.image_of_root()) + ") steps=" + render_steps(steps) +
          " x=" + format_quad(x) + " lhs=" + format_quad(check.lhs) +
          " rhs=" + format_quad(check.rhs));
    }
  }
  return result;
}

SuiteResult oracle_equivalence_suite(const QuadField& field,
                                     const IdentitySuiteConfig& config,
                                     Sampler& sampler) {
  SuiteResult result{"oracle-equivalence"};
  for (std::size_t s = 0; s < config.samples; ++s) {
    const RealFunction f = draw_corpus_function(sampler, field);
    const auto step_count = sampler.below(config.oracle_step_max) + 1;
    const bool equal_steps = sampler.below(3) == 0;
    StepVector steps;
    if (equal_steps) {
      steps.assign(step_count, sampler.quad(field));
    } else {
      steps = draw_steps(sampler, field, step_count);
    }
    const QuadElem x = sampler.quad(field);
    const QuadElem recursive = delta_iterated(f, steps, x);
    const QuadElem enumerated = delta_iterated_subset_sum(f, steps, x);
    ++result.cases;
    bool holds = recursive == enumerated;
    QuadElem binomial_route;
    if (holds && equal_steps) {
      binomial_route =
          delta_equal(f, steps.front(), static_cast<unsigned>(step_count), x);
      holds = binomial_route == recursive;
    }
    if (!holds) {
      result.failures.push_back(
          "f=" + f.descriptor + " steps=" + render_steps(steps) + " x=" +
          format_quad(x) + " recursive=" + format_quad(recursive) +
          " subset-sum=" + format_quad(enumerated) +
          (equal_steps ? " binomial=" + format_quad(binomial_route) : ""));
    }
  }
  return result;
}

SuiteResult permutation_symmetry_suite(const QuadField& field,
                                       const IdentitySuiteConfig& config,
                                       Sampler& sampler) {
  SuiteResult result{"permutation-symmetry"};
  const unsigned step_max = std::min(config.step_max, 4u);
  for (std::size_t s = 0; s < config.samples; ++s) {
    const RealFunction f = draw_corpus_function(sampler, field);
    const auto step_count = sampler.below(step_max) + 1;
    StepVector steps = draw_steps(sampler, field, step_count);
    const QuadElem x = sampler.quad(field);
    const QuadElem reference = delta_iterated(f, steps, x);
    ++result.cases;
    std::sort(steps.begin(), steps.end());
    bool holds = true;
    StepVector permuted = steps;
    do {
      if (!(delta_iterated(f, permuted, x) == reference)) {
        holds = false;
        break;
      }
    } while (std::next_permutation(permuted.begin(), permuted.end()));
    if (!holds) {
      result.failures.push_back("f=" + f.descriptor + " steps=" +
                                render_steps(permuted) + " x=" + format_quad(x) +
                                " reference=" + format_quad(reference));
    }
  }
  return result;
}

}  // namespace

std::vector<SuiteResult> run_identity_suites(const QuadField& field,
                                             const IdentitySuiteConfig& config,
                                             std::uint64_t seed,
                                             const SamplerBounds& bounds) {
  if (config.samples == 0) {
    throw std::invalid_argument("verification: sample count must be positive");
  }
  if (config.n_max < 1 || config.step_max < 1 || config.oracle_step_max < 1) {
    throw std::invalid_argument("verification: size limits must be >= 1");
  }
  if (config.oracle_step_max > kMaxSubsetSteps) {
    throw std::invalid_argument("verification: oracle steps exceed the enumeration cap");
  }
  Sampler sampler(seed, bounds);
  std::vector<SuiteResult> suites;
  suites.push_back(power_identity_suite(field, config, sampler));
  suites.push_back(additive_composition_suite(field, config, sampler));
  suites.push_back(oracle_equivalence_suite(field, config, sampler));
  suites.push_back(permutation_symmetry_suite(field, config, sampler));
  return suites;
}

}  // namespace convexcert
