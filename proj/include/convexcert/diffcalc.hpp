/**
 * @file diffcalc.hpp
 * @brief Finite difference operators and their closed-form identities.
 *
 * The single-step operator maps f to x -> f(x+h) - f(x). Iterating over a
 * step vector h_1..h_k peels one step at a time; the subset-sum expansion
 * sum over S of (-1)^(k-|S|) f(x + sum of h_i, i in S) is kept as an
 * independent oracle, and the equal-step case expands through binomial
 * coefficients. For the power function x^k the iterated difference over k
 * steps collapses to k! * (product of the steps), independent of x, and
 * composing with an additive map a commutes: applying the operator to g o a
 * equals applying it to g with steps a(h_1)..a(h_k) at a(x).
 */
#pragma once

#include <cstddef>
#include <vector>

#include "convexcert/additive.hpp"
#include "convexcert/function.hpp"
#include "convexcert/quad.hpp"

namespace convexcert {

using StepVector = std::vector<QuadElem>;

/// Subset enumeration bound for the oracle; 2^k terms.
inline constexpr std::size_t kMaxSubsetSteps = 24;

/// f(x+h) - f(x).
QuadElem delta_single(const RealFunction& f, const QuadElem& h, const QuadElem& x);

/// Iterated difference over the step vector, by recursive peeling.
/// Function evaluations are memoized on the lattice of partial sums, keyed
/// by exact value, since distinct subsets of steps can sum to the same
/// point. Throws std::invalid_argument on an empty step vector.
QuadElem delta_iterated(const RealFunction& f, const StepVector& steps,
                        const QuadElem& x);

/// Independent oracle: direct subset-sum expansion, one term per subset.
/// Throws std::invalid_argument on an empty vector or more than
/// kMaxSubsetSteps steps.
QuadElem delta_iterated_subset_sum(const RealFunction& f, const StepVector& steps,
                                   const QuadElem& x);

/// Equal-step difference of the given order via the alternating binomial
/// sum, sum_j (-1)^(order-j) C(order, j) f(x + j*h). Requires order >= 1.
QuadElem delta_equal(const RealFunction& f, const QuadElem& h, unsigned order,
                     const QuadElem& x);

struct IdentityCheck {
  QuadElem lhs;
  QuadElem rhs;
  bool holds;
};

/// Iterated difference of x^n over n steps against the closed form
/// n! * (product of the steps).
IdentityCheck check_power_identity(unsigned n, const StepVector& steps,
                                   const QuadElem& x);

/// Difference of g o a at x against the difference of g with mapped steps
/// at a(x).
IdentityCheck check_additive_composition(const RealFunction& g, const AdditiveMap& a,
                                         const StepVector& steps, const QuadElem& x);

}  // namespace convexcert
