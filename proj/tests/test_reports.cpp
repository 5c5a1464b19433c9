#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "convexcert/report.hpp"
#include "convexcert/version.hpp"

using namespace convexcert;

namespace {

VerifyJob wright_job(unsigned n, std::uint64_t seed, std::size_t samples) {
  VerifyJob job{ConvexityKind::wright(n), 2, seed, {}, samples, 1,
                FunctionSpec{kFamilyHamel, n, {}, {}}};
  return job;
}

}  // namespace

TEST_CASE("verify report schema and exact string payload") {
  const QuadField field(2);
  const VerifyJob job = wright_job(3, 42, 25);
  const ConvexityReport report = run_verify_job(job, field);
  const nlohmann::json document = verify_report_to_json(job, report);

  CHECK(document.at("schema") == std::string(kReportSchema));
  CHECK(document.at("artifact_version") == std::string(kVersion));
  CHECK(document.at("command") == "verify");
  CHECK(document.at("kind") == "wright");
  CHECK(document.at("n") == 3);
  CHECK(document.at("field").at("d") == 2);
  CHECK(document.at("seed") == 42);
  CHECK(document.at("samples_requested") == 25);
  CHECK(document.at("samples_checked") == 26);  // forced witness included
  CHECK(document.at("forced_samples") == 1);
  CHECK(document.at("verdict") == "violated");
  CHECK_FALSE(document.contains("c"));  // plain kind

  const auto& first = document.at("violations").at(0);
  CHECK(first.at("index") == 0);
  CHECK(first.at("x") == "0");
  CHECK(first.at("lhs") == "-24");
  CHECK(first.at("required_rhs") == "0");
  CHECK(first.at("deficit") == "24");
  CHECK(first.at("steps").size() == 4);
  CHECK(first.at("steps").at(0) == "-1 + 1*sqrt(2)");

  SUBCASE("violation indices are strictly increasing") {
    std::size_t previous = 0;
    bool first_record = true;
    for (const auto& violation : document.at("violations")) {
      const auto index = violation.at("index").get<std::size_t>();
      if (!first_record) {
        CHECK(index > previous);
      }
      previous = index;
      first_record = false;
    }
  }
}

TEST_CASE("strong kinds carry the modulus as an exact string") {
  const QuadField field(2);
  VerifyJob job{ConvexityKind::strong_wright(2, Rational(1, 3)), 2, 7, {}, 10, 1,
                FunctionSpec{kFamilyStrongHamel, 2, Rational(1, 3), {}}};
  const ConvexityReport report = run_verify_job(job, field);
  const nlohmann::json document = verify_report_to_json(job, report);
  CHECK(document.at("c") == "1/3");
  CHECK(document.at("kind") == "strong-wright");
  CHECK(document.at("violations").at(0).at("deficit") == "6");
}

TEST_CASE("canonical dump is deterministic and excludes meta") {
  const QuadField field(2);
  const VerifyJob job = wright_job(2, 11, 15);
  const std::string once =
      canonical_dump(verify_report_to_json(job, run_verify_job(job, field)));
  const std::string twice =
      canonical_dump(verify_report_to_json(job, run_verify_job(job, field)));
  CHECK(once == twice);
  CHECK(once.back() == '\n');

  nlohmann::json with_meta = verify_report_to_json(job, run_verify_job(job, field));
  with_meta["meta"] = {{"generated_at", "2026-01-01T00:00:00Z"}, {"duration_ms", 1}};
  CHECK(canonical_dump(with_meta) == once);
}

TEST_CASE("recheck accepts faithful reports and flags tampering") {
  const QuadField field(2);
  const VerifyJob job = wright_job(3, 42, 20);
  nlohmann::json document = verify_report_to_json(job, run_verify_job(job, field));

  CHECK(recheck_report(document).ok());

  SUBCASE("tampered lhs") {
    document["violations"][0]["lhs"] = "-23";
    const RecheckResult result = recheck_report(document);
    CHECK_FALSE(result.ok());
  }

  SUBCASE("tampered verdict") {
    document["verdict"] = "certified-on-samples";
    const RecheckResult result = recheck_report(document);
    CHECK_FALSE(result.ok());
  }

  SUBCASE("tampered sample count") {
    document["samples_requested"] = 19;
    CHECK_FALSE(recheck_report(document).ok());
  }

  SUBCASE("dropped violation") {
    document["violations"].erase(1);
    CHECK_FALSE(recheck_report(document).ok());
  }

  SUBCASE("malformed document") {
    CHECK_FALSE(recheck_report(nlohmann::json::array()).ok());
    CHECK_FALSE(recheck_report(nlohmann::json{{"command", "unknown"}}).ok());
    document.erase("seed");
    CHECK_FALSE(recheck_report(document).ok());
  }
}

TEST_CASE("pair-family reports reconstruct the custom additive pair") {
  const QuadField field(2);
  FunctionSpec spec{kFamilyPair, 2, {},
                    std::make_pair(field.parse("1/2"), field.parse("1/2*sqrt(2)"))};
  VerifyJob job{ConvexityKind::jensen(2), 2, 3, {}, 12, 1, spec};
  const ConvexityReport report = run_verify_job(job, field);
  nlohmann::json document = verify_report_to_json(job, report);
  CHECK(document.at("function").at("alpha_image_of_one") == "1/2");
  CHECK(document.at("function").at("alpha_image_of_root") == "1/2*sqrt(2)");
  CHECK(recheck_report(document).ok());
}

TEST_CASE("expected verdicts follow the certified claims") {
  const FunctionSpec hamel{kFamilyHamel, 3, {}, {}};
  CHECK(expected_verdict(hamel, ConvexityFamily::jensen) ==
        Verdict::certified_on_samples);
  CHECK(expected_verdict(hamel, ConvexityFamily::wright) == Verdict::violated);
  const FunctionSpec strong{kFamilyStrongHamel, 3, Rational(1), {}};
  CHECK(expected_verdict(strong, ConvexityFamily::strong_jensen) ==
        Verdict::certified_on_samples);
  CHECK(expected_verdict(strong, ConvexityFamily::strong_wright) ==
        Verdict::violated);
  const FunctionSpec pair{kFamilyPair, 2, {}, std::make_pair(QuadElem(1), QuadElem(0))};
  CHECK_FALSE(expected_verdict(pair, ConvexityFamily::wright).has_value());
}

TEST_CASE("identity suites pass and their report rechecks") {
  const QuadField field(2);
  IdentitiesJob job;
  job.seed = 7;
  job.config.samples = 20;
  job.config.n_max = 4;
  const auto suites = run_identity_suites(field, job.config, job.seed, job.bounds);
  REQUIRE(suites.size() == 4);
  CHECK(suites[0].name == "power-identity");
  CHECK(suites[1].name == "additive-composition");
  CHECK(suites[2].name == "oracle-equivalence");
  CHECK(suites[3].name == "permutation-symmetry");
  for (const SuiteResult& suite : suites) {
    CHECK(suite.passed());
    CHECK(suite.cases > 0);
  }

  nlohmann::json document = identities_report_to_json(job, suites);
  CHECK(document.at("schema") == std::string(kIdentitiesSchema));
  CHECK(document.at("all_passed") == true);
  CHECK(recheck_report(document).ok());

  SUBCASE("tampered suite counts are caught") {
    document["suites"][0]["cases"] = 1;
    CHECK_FALSE(recheck_report(document).ok());
  }

  SUBCASE("zero samples are rejected") {
    IdentitySuiteConfig bad = job.config;
    bad.samples = 0;
    CHECK_THROWS_AS(run_identity_suites(field, bad, 0, job.bounds),
                    std::invalid_argument);
  }
}

TEST_CASE("build_function validates its spec") {
  const QuadField field(2);
  CHECK_THROWS_AS(build_function(FunctionSpec{"nonsense", 2, {}, {}}, field),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_function(FunctionSpec{kFamilyStrongHamel, 2, {}, {}}, field),
                  std::invalid_argument);  // missing modulus
  CHECK_THROWS_AS(build_function(FunctionSpec{kFamilyPair, 2, {}, {}}, field),
                  std::invalid_argument);  // missing images
  CHECK_NOTHROW(build_function(FunctionSpec{kFamilyHamel, 2, {}, {}}, field));
}
