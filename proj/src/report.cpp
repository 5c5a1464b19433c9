#include "convexcert/report.hpp"

#include <exception>
#include <sstream>
#include <stdexcept>

#include "convexcert/version.hpp"

namespace convexcert {

namespace {

AdditiveMap complement_to_identity(const AdditiveMap& a, const QuadField& field) {
  return AdditiveMap(field.one() - a.image_of_one(),
                     field.root() - a.image_of_root());
}

}  // namespace

RealFunction build_function(const FunctionSpec& spec, const QuadField& field) {
  const bool strong =
      spec.family == kFamilyStrongHamel || spec.family == kFamilyStrongPair;
  const bool pair = spec.family == kFamilyPair || spec.family == kFamilyStrongPair;
  if (!pair && spec.family != kFamilyHamel && spec.family != kFamilyStrongHamel) {
    throw std::invalid_argument("report: unknown function family '" + spec.family +
                                "'");
  }
  if (strong && !spec.modulus) {
    throw std::invalid_argument("report: strong family needs a modulus");
  }
  if (pair != spec.alpha_images.has_value()) {
    throw std::invalid_argument("report: pair family needs the alpha basis images");
  }
  if (!pair) {
    return strong ? strong_counterexample(spec.n, *spec.modulus)
                  : counterexample_function(spec.n);
  }
  AdditiveMap alpha(spec.alpha_images->first, spec.alpha_images->second);
  RealFunction base =
      counterexample_from_pair(spec.n, alpha, complement_to_identity(alpha, field));
  return strong ? strong_unshift(base, spec.n, *spec.modulus) : std::move(base);
}

std::optional<Verdict> expected_verdict(const FunctionSpec& spec,
                                        ConvexityFamily family) {
  if (spec.family == kFamilyPair || spec.family == kFamilyStrongPair) {
    return std::nullopt;
  }
  return is_equal_step(family) ? Verdict::certified_on_samples : Verdict::violated;
}

std::vector<WitnessSample> forced_witnesses(const VerifyJob& job,
                                            const QuadField& field) {
  if (is_equal_step(job.kind.family())) {
    return {};
  }
  return {WitnessSample{field.zero(), refuting_witness(job.kind.order(), field)}};
}

ConvexityReport run_verify_job(const VerifyJob& job, const QuadField& field) {
  CheckConfig config;
  config.samples = job.samples;
  config.bounds = job.bounds;
  config.seed = job.seed;
  config.threads = job.threads;
  config.forced = forced_witnesses(job, field);
  const RealFunction f = build_function(job.function, field);
  return check_convexity(f, job.kind, field, config);
}

namespace {

nlohmann::json sampler_to_json(const SamplerBounds& bounds) {
  return {{"max_numerator", bounds.max_numerator},
          {"max_denominator", bounds.max_denominator}};
}

nlohmann::json function_to_json(const FunctionSpec& spec, const QuadField& field) {
  nlohmann::json out{{"family", spec.family},
                     {"descriptor", build_function(spec, field).descriptor}};
  if (spec.alpha_images) {
    out["alpha_image_of_one"] = format_quad(spec.alpha_images->first);
    out["alpha_image_of_root"] = format_quad(spec.alpha_images->second);
  }
  return out;
}

nlohmann::json steps_to_json(const StepVector& steps) {
  nlohmann::json out = nlohmann::json::array();
  for (const QuadElem& h : steps) {
    out.push_back(format_quad(h));
  }
  return out;
}

}  // namespace

nlohmann::json verify_report_to_json(const VerifyJob& job,
                                     const ConvexityReport& report) {
  const QuadField field(job.d);
  nlohmann::json document{
      {"schema", std::string(kReportSchema)},
      {"artifact_version", std::string(kVersion)},
      {"command", "verify"},
      {"kind", family_name(job.kind.family())},
      {"n", job.kind.order()},
      {"field", {{"d", job.d}}},
      {"seed", job.seed},
      {"sampler", sampler_to_json(job.bounds)},
      {"samples_requested", job.samples},
      {"samples_checked", report.samples_checked},
      {"forced_samples", report.forced_count},
      {"equalities", report.equality_count},
      {"function", function_to_json(job.function, field)},
      {"verdict", verdict_name(report.verdict)},
  };
  if (is_strong(job.kind.family())) {
    document["c"] = format_rational(job.kind.modulus());
  }
  nlohmann::json violations = nlohmann::json::array();
  for (const Violation& violation : report.violations) {
    violations.push_back(
        {{"index", violation.sample_index},
         {"x", format_quad(violation.sample.x)},
         {"steps", steps_to_json(violation.sample.steps)},
         {"lhs", format_quad(violation.lhs)},
         {"required_rhs", format_quad(violation.required_rhs)},
         {"deficit", format_quad(violation.required_rhs - violation.lhs)}});
  }
  document["violations"] = std::move(violations);
  return document;
}

nlohmann::json identities_report_to_json(const IdentitiesJob& job,
                                         const std::vector<SuiteResult>& suites) {
  nlohmann::json suites_json = nlohmann::json::array();
  bool all_passed = true;
  for (const SuiteResult& suite : suites) {
    all_passed = all_passed && suite.passed();
    suites_json.push_back({{"name", suite.name},
                           {"cases", suite.cases},
                           {"failures", suite.failures}});
  }
  return nlohmann::json{
      {"schema", std::string(kIdentitiesSchema)},
      {"artifact_version", std::string(kVersion)},
      {"command", "identities"},
      {"field", {{"d", job.d}}},
      {"seed", job.seed},
      {"sampler", sampler_to_json(job.bounds)},
      {"samples", job.config.samples},
      {"n_max", job.config.n_max},
      {"degree_max", job.config.degree_max},
      {"step_max", job.config.step_max},
      {"oracle_step_max", job.config.oracle_step_max},
      {"suites", std::move(suites_json)},
      {"all_passed", all_passed},
  };
}

std::string canonical_dump(nlohmann::json document) {
  if (document.is_object() && document.contains("meta")) {
    document.erase("meta");
  }
  return document.dump(2) + "\n";
}

std::string render_verify_text(const VerifyJob& job, const ConvexityReport& report) {
  std::ostringstream out;
  out << "kind: " << family_name(job.kind.family()) << "  n: " << job.kind.order();
  if (is_strong(job.kind.family())) {
    out << "  c: " << format_rational(job.kind.modulus());
  }
  out << "  d: " << job.d << "\n";
  out << "function: " << report.function_descriptor << "\n";
  out << "seed: " << job.seed << "  samples: " << job.samples << " (+"
      << report.forced_count << " forced)\n";
  out << "verdict: " << verdict_name(report.verdict) << "\n";
  out << "violations: " << report.violations.size()
      << "  equalities: " << report.equality_count << "\n";
  for (const Violation& violation : report.violations) {
    out << "  [" << violation.sample_index << "] x = "
        << format_quad(violation.sample.x) << "; steps = [";
    for (std::size_t i = 0; i < violation.sample.steps.size(); ++i) {
      out << (i > 0 ? ", " : "") << format_quad(violation.sample.steps[i]);
    }
    out << "]; lhs = " << format_quad(violation.lhs)
        << "; required >= " << format_quad(violation.required_rhs)
        << "; deficit = " << format_quad(violation.required_rhs - violation.lhs)
        << "\n";
  }
  return out.str();
}

std::string render_identities_text(const IdentitiesJob& job,
                                   const std::vector<SuiteResult>& suites) {
  std::ostringstream out;
  out << "identities  d: " << job.d << "  seed: " << job.seed
      << "  samples: " << job.config.samples << "  n-max: " << job.config.n_max
      << "\n";
  bool all_passed = true;
  for (const SuiteResult& suite : suites) {
    out << "  " << (suite.passed() ? "pass" : "FAIL") << "  " << suite.name << " ("
        << suite.cases << " cases)\n";
    all_passed = all_passed && suite.passed();
    for (const std::string& failure : suite.failures) {
      out << "    " << failure << "\n";
    }
  }
  out << (all_passed ? "all identities hold exactly" : "IDENTITY FAILURES FOUND")
      << "\n";
  return out.str();
}

namespace {

SamplerBounds bounds_from_json(const nlohmann::json& sampler) {
  SamplerBounds bounds;
  bounds.max_numerator = sampler.at("max_numerator").get<std::uint32_t>();
  bounds.max_denominator = sampler.at("max_denominator").get<std::uint32_t>();
  return bounds;
}

VerifyJob verify_job_from_json(const nlohmann::json& document,
                               const QuadField& field) {
  const auto family = parse_family(document.at("kind").get<std::string>());
  const auto order = document.at("n").get<unsigned>();
  Rational modulus(0);
  if (is_strong(family)) {
    modulus = parse_rational(document.at("c").get<std::string>());
  }
  FunctionSpec spec;
  spec.family = document.at("function").at("family").get<std::string>();
  spec.n = order;
  if (is_strong(family)) {
    spec.modulus = modulus;
  }
  if (document.at("function").contains("alpha_image_of_one")) {
    spec.alpha_images = {
        field.parse(document.at("function").at("alpha_image_of_one").get<std::string>()),
        field.parse(document.at("function").at("alpha_image_of_root").get<std::string>())};
  }
  VerifyJob job{ConvexityKind(family, order, modulus),
                document.at("field").at("d").get<std::int64_t>(),
                document.at("seed").get<std::uint64_t>(),
                bounds_from_json(document.at("sampler")),
                document.at("samples_requested").get<std::size_t>(),
                1,
                std::move(spec)};
  return job;
}

void recheck_violations(const nlohmann::json& document, const VerifyJob& job,
                        const QuadField& field, RecheckResult& result) {
  const RealFunction f = build_function(job.function, field);
  const bool equal_step = is_equal_step(job.kind.family());
  for (const auto& record : document.at("violations")) {
    const auto index = record.at("index").get<std::size_t>();
    const QuadElem x = field.parse(record.at("x").get<std::string>());
    StepVector steps;
    for (const auto& step : record.at("steps")) {
      steps.push_back(field.parse(step.get<std::string>()));
    }
    const QuadElem stored_lhs = field.parse(record.at("lhs").get<std::string>());
    const QuadElem stored_rhs =
        field.parse(record.at("required_rhs").get<std::string>());
    if (!(stored_lhs < stored_rhs)) {
      result.problems.push_back("violation " + std::to_string(index) +
                                ": stored lhs is not below the stored bound");
    }
    const QuadElem fresh_lhs =
        equal_step ? delta_equal(f, steps.front(),
                                 static_cast<unsigned>(steps.size()), x)
                   : delta_iterated(f, steps, x);
    if (!(fresh_lhs == stored_lhs)) {
      result.problems.push_back("violation " + std::to_string(index) +
                                ": re-evaluated lhs " + format_quad(fresh_lhs) +
                                " differs from stored " + format_quad(stored_lhs));
    }
    QuadElem fresh_rhs;
    if (is_strong(job.kind.family())) {
      fresh_rhs =
          QuadElem(Rational(factorial(job.kind.order() + 1)) * job.kind.modulus());
      for (const QuadElem& h : steps) {
        fresh_rhs *= h;
      }
    }
    if (!(fresh_rhs == stored_rhs)) {
      result.problems.push_back("violation " + std::to_string(index) +
                                ": re-evaluated bound " + format_quad(fresh_rhs) +
                                " differs from stored " + format_quad(stored_rhs));
    }
    const QuadElem stored_deficit =
        field.parse(record.at("deficit").get<std::string>());
    if (!(stored_deficit == stored_rhs - stored_lhs)) {
      result.problems.push_back("violation " + std::to_string(index) +
                                ": stored deficit is inconsistent");
    }
  }
}

void recheck_verify(const nlohmann::json& document, RecheckResult& result) {
  if (document.at("schema").get<std::string>() != kReportSchema) {
    result.problems.push_back("unexpected schema for a verify report");
    return;
  }
  const QuadField field(document.at("field").at("d").get<std::int64_t>());
  const VerifyJob job = verify_job_from_json(document, field);

  const bool violated = document.at("verdict").get<std::string>() == "violated";
  if (violated != !document.at("violations").empty()) {
    result.problems.push_back("verdict is inconsistent with the violation list");
  }

  recheck_violations(document, job, field, result);

  const ConvexityReport report = run_verify_job(job, field);
  if (canonical_dump(verify_report_to_json(job, report)) !=
      canonical_dump(document)) {
    result.problems.push_back(
        "re-running the embedded configuration produced a different report");
  }
}

void recheck_identities(const nlohmann::json& document, RecheckResult& result) {
  if (document.at("schema").get<std::string>() != kIdentitiesSchema) {
    result.problems.push_back("unexpected schema for an identities report");
    return;
  }
  IdentitiesJob job;
  job.d = document.at("field").at("d").get<std::int64_t>();
  job.seed = document.at("seed").get<std::uint64_t>();
  job.bounds = bounds_from_json(document.at("sampler"));
  job.config.samples = document.at("samples").get<std::size_t>();
  job.config.n_max = document.at("n_max").get<unsigned>();
  job.config.degree_max = document.at("degree_max").get<unsigned>();
  job.config.step_max = document.at("step_max").get<unsigned>();
  job.config.oracle_step_max = document.at("oracle_step_max").get<unsigned>();

  const QuadField field(job.d);
  const auto suites = run_identity_suites(field, job.config, job.seed, job.bounds);
  if (canonical_dump(identities_report_to_json(job, suites)) !=
      canonical_dump(document)) {
    result.problems.push_back(
        "re-running the embedded configuration produced a different report");
  }
}

}  // namespace

RecheckResult recheck_report(const nlohmann::json& document) {
  RecheckResult result;
  try {
    if (!document.is_object() || !document.contains("command")) {
      result.problems.push_back("not a report document");
      return result;
    }
    const auto command = document.at("command").get<std::string>();
    if (command == "verify") {
      recheck_verify(document, result);
    } else if (command == "identities") {
      recheck_identities(document, result);
    } else {
      result.problems.push_back("unknown command '" + command + "'");
    }
  } catch (const std::exception& error) {
    result.problems.push_back(std::string("malformed report: ") + error.what());
  }
  return result;
}

}  // namespace convexcert
