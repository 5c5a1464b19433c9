/**
 * @file convexity.hpp
 * @brief Higher-order convexity checks and the separating counterexamples.
 *
 * A function f is n-Wright-convex when the iterated difference over any
 * n+1 positive steps is >= 0, and n-Jensen-convex when that holds for
 * equal steps; the strong variants with modulus c > 0 raise the bound to
 * c * (n+1)! * (product of the steps). Splitting x along the basis {1,
 * sqrt(d)} with the complementary additive projections alpha and beta, the
 * function f(x) = alpha(x)^(n+1) + beta(x)^(n+1) is n-Jensen-convex, yet
 * its iterated difference collapses to (n+1)! * (prod alpha(h_i) +
 * prod beta(h_i)), which the witness steps [-1+sqrt(d), 1, 1+sqrt(d), ...]
 * drive to exactly -(n+1)!. The checks here certify the positive claims on
 * seeded samples and refute the negative ones with exact witnesses.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "convexcert/additive.hpp"
#include "convexcert/diffcalc.hpp"
#include "convexcert/function.hpp"
#include "convexcert/quad.hpp"
#include "convexcert/sampler.hpp"

namespace convexcert {

enum class ConvexityFamily { jensen, wright, strong_jensen, strong_wright };

bool is_strong(ConvexityFamily family);
bool is_equal_step(ConvexityFamily family);
std::string family_name(ConvexityFamily family);

/// Throws std::invalid_argument on an unknown name.
ConvexityFamily parse_family(const std::string& name);

class ConvexityKind {
 public:
  static ConvexityKind jensen(unsigned order);
  static ConvexityKind wright(unsigned order);
  static ConvexityKind strong_jensen(unsigned order, Rational modulus);
  static ConvexityKind strong_wright(unsigned order, Rational modulus);

  /// Validates order >= 1 and modulus > 0 exactly for strong families.
  ConvexityKind(ConvexityFamily family, unsigned order, Rational modulus);

  ConvexityFamily family() const noexcept { return family_; }
  unsigned order() const noexcept { return order_; }
  const Rational& modulus() const noexcept { return modulus_; }

 private:
  ConvexityFamily family_;
  unsigned order_;
  Rational modulus_;
};

/// One quantifier instance: a base point and n+1 strictly positive steps
/// (all equal for the equal-step families).
struct WitnessSample {
  QuadElem x;
  StepVector steps;
};

struct Violation {
  std::size_t sample_index;
  WitnessSample sample;
  QuadElem lhs;
  QuadElem required_rhs;
};

enum class Verdict { certified_on_samples, violated };

std::string verdict_name(Verdict verdict);

struct ConvexityReport {
  ConvexityKind kind;
  std::string function_descriptor;
  std::size_t samples_checked = 0;
  std::size_t forced_count = 0;
  /// Samples where the difference met the bound with exact equality; when
  /// zero, the certified inequality held strictly everywhere.
  std::size_t equality_count = 0;
  std::vector<Violation> violations;  // sorted by sample_index
  Verdict verdict = Verdict::certified_on_samples;
};

struct CheckConfig {
  std::size_t samples = 200;
  SamplerBounds bounds;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  /// Checked before the random samples, in order.
  std::vector<WitnessSample> forced;
};

/// Evaluates the required inequality exactly on the forced samples plus
/// `samples` seeded random ones. Deterministic for a fixed config; worker
/// threads share nothing and violations are merged in sample order.
/// Throws std::invalid_argument on an invalid config or forced sample.
ConvexityReport check_convexity(const RealFunction& f, const ConvexityKind& kind,
                                const QuadField& field, const CheckConfig& config);

/// x -> alpha(x)^(n+1) + beta(x)^(n+1): n-Jensen-convex but not
/// n-Wright-convex.
RealFunction counterexample_function(unsigned n);

/// Same shape with an arbitrary pair of additive maps in place of
/// alpha/beta; no convexity claim attaches to the result.
RealFunction counterexample_from_pair(unsigned n, AdditiveMap a, AdditiveMap b);

/// (n+1)! * (prod alpha(h_i) + prod beta(h_i)); equals the iterated
/// difference of counterexample_function(n) for every base point.
/// Requires exactly n+1 steps.
QuadElem closed_form_wright_delta(unsigned n, const StepVector& steps);

/// (n+1)! * (alpha(h)^(n+1) + beta(h)^(n+1)); equals the equal-step
/// difference of order n+1 of counterexample_function(n), any base point.
QuadElem closed_form_jensen_delta(unsigned n, const QuadElem& h);

/// The refuting steps [-1+sqrt(d), 1] extended by n-1 copies of 1+sqrt(d);
/// length n+1, all strictly positive.
StepVector refuting_witness(unsigned n, const QuadField& field);

/// g(x) = f(x) - c*x^(n+1). f is strongly convex (either sense) with
/// modulus c exactly when g is convex in the plain sense. Requires c > 0.
RealFunction strong_shift(const RealFunction& f, unsigned n, const Rational& c);

/// f(x) = g(x) + c*x^(n+1); inverse of strong_shift. Requires c > 0.
RealFunction strong_unshift(const RealFunction& g, unsigned n, const Rational& c);

/// counterexample_function(n) + c*x^(n+1): strongly n-Jensen-convex with
/// modulus c but not strongly n-Wright-convex with modulus c.
RealFunction strong_counterexample(unsigned n, const Rational& c);

/// One instance of the order-1 exchange inequality
/// f(tx+(1-t)y) + f((1-t)x+ty) <= f(x) + f(y), t rational in [0, 1].
struct ClassicSample {
  QuadElem x;
  QuadElem y;
  Rational t;
};

struct ClassicViolation {
  std::size_t sample_index;
  ClassicSample sample;
  QuadElem lhs;  // mixed-point side; a violation has lhs > rhs
  QuadElem rhs;
};

struct ClassicWrightReport {
  std::string function_descriptor;
  std::size_t samples_checked = 0;
  std::size_t equality_count = 0;
  std::vector<ClassicViolation> violations;
  Verdict verdict = Verdict::certified_on_samples;
};

/// Exact check of the exchange inequality on the given samples. Throws
/// std::domain_error when some t is outside [0, 1].
ClassicWrightReport check_classic_wright(const RealFunction& f,
                                         const std::vector<ClassicSample>& samples);

}  // namespace convexcert
