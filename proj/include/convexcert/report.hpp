/**
 * @file report.hpp
 * @brief Canonical JSON reports and their exact re-validation.
 *
 * Every number is serialized as an exact decimal string, never a float.
 * The canonical form is fully deterministic for a fixed configuration:
 * keys are emitted in sorted order and the optional "meta" section
 * (timestamps, durations) is excluded. recheck_report() re-runs the
 * embedded configuration and also re-verifies each recorded violation
 * from its stored exact values.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "convexcert/convexity.hpp"
#include "convexcert/quad.hpp"
#include "convexcert/sampler.hpp"
#include "convexcert/verification.hpp"

namespace convexcert {

inline constexpr const char* kFamilyHamel = "hamel-counterexample";
inline constexpr const char* kFamilyStrongHamel = "strong-hamel-counterexample";
inline constexpr const char* kFamilyPair = "pair-counterexample";
inline constexpr const char* kFamilyStrongPair = "strong-pair-counterexample";

/// Machine-reconstructible description of the function under test.
struct FunctionSpec {
  std::string family;  // one of the kFamily* constants above
  unsigned n = 1;
  std::optional<Rational> modulus;  // strong families
  /// Basis images of the custom alpha; beta is its complement to the
  /// identity. Present exactly for the pair families.
  std::optional<std::pair<QuadElem, QuadElem>> alpha_images;
};

RealFunction build_function(const FunctionSpec& spec, const QuadField& field);

/// Certified-claim verdict; disengaged for the pair families, where no
/// claim attaches.
std::optional<Verdict> expected_verdict(const FunctionSpec& spec,
                                        ConvexityFamily family);

struct VerifyJob {
  ConvexityKind kind;
  std::int64_t d = 2;
  std::uint64_t seed = 0;
  SamplerBounds bounds;
  std::size_t samples = 200;
  unsigned threads = 1;
  FunctionSpec function;
};

/// Forced samples for a job: the refuting witness at x = 0 for the
/// Wright-side families, nothing for the equal-step ones.
std::vector<WitnessSample> forced_witnesses(const VerifyJob& job,
                                            const QuadField& field);

/// Runs check_convexity per the job; convenience for the CLI and recheck.
ConvexityReport run_verify_job(const VerifyJob& job, const QuadField& field);

nlohmann::json verify_report_to_json(const VerifyJob& job,
                                     const ConvexityReport& report);

struct IdentitiesJob {
  std::int64_t d = 2;
  std::uint64_t seed = 0;
  SamplerBounds bounds;
  IdentitySuiteConfig config;
};

nlohmann::json identities_report_to_json(const IdentitiesJob& job,
                                         const std::vector<SuiteResult>& suites);

/// Sorted keys, two-space indent, trailing newline, "meta" stripped.
std::string canonical_dump(nlohmann::json document);

std::string render_verify_text(const VerifyJob& job, const ConvexityReport& report);
std::string render_identities_text(const IdentitiesJob& job,
                                   const std::vector<SuiteResult>& suites);

struct RecheckResult {
  std::vector<std::string> problems;

  bool ok() const { return problems.empty(); }
};

/// Re-validates a previously emitted report document: checks the schema,
/// re-verifies every recorded violation by exact re-evaluation, re-runs
/// the embedded configuration and compares canonical bytes.
RecheckResult recheck_report(const nlohmann::json& document);

}  // namespace convexcert
