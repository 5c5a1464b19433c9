/**
 * @file main.cpp
 * @brief convexcert CLI: exact certification of higher-order Jensen/Wright
 *        convexity over Q(sqrt(d)).
 *
 * Commands:
 *   verify      - run a convexity campaign against a counterexample family
 *   identities  - run the standing finite-difference identity suites
 *   eval        - evaluate one exact expression (projections, differences,
 *                 closed forms)
 *   recheck     - re-validate a previously emitted JSON report
 *
 * Exit status: 0 on the expected outcome, 1 on configuration or parse
 * errors, 2 when exact arithmetic contradicts a certified expectation
 * (which would mean an implementation bug).
 */

#include <chrono>
#include <ctime>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "convexcert/convexity.hpp"
#include "convexcert/report.hpp"
#include "convexcert/verification.hpp"
#include "convexcert/version.hpp"

namespace {

using namespace convexcert;

struct OutputOptions {
  std::string path;  // empty = stdout
  std::string format = "json";
  bool with_meta = false;
};

void write_text(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file '" + path + "'");
  }
  out << text;
}

nlohmann::json make_meta(std::chrono::steady_clock::time_point started) {
  const auto now = std::chrono::system_clock::now();
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  const std::time_t stamp = std::chrono::system_clock::to_time_t(now);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%FT%TZ", std::gmtime(&stamp));
  return {{"generated_at", buffer}, {"duration_ms", elapsed.count()}};
}

void emit_json(nlohmann::json document, const OutputOptions& output,
               std::chrono::steady_clock::time_point started) {
  if (output.with_meta) {
    document["meta"] = make_meta(started);
    write_text(document.dump(2) + "\n", output.path);
  } else {
    write_text(canonical_dump(std::move(document)), output.path);
  }
}

struct VerifyCli {
  std::string kind;
  unsigned n = 1;
  std::string c;
  std::int64_t d = 2;
  std::size_t samples = 200;
  std::uint64_t seed = 0;
  SamplerBounds bounds;
  unsigned threads = 1;
  std::string alpha_one;
  std::string alpha_root;
  OutputOptions output;
};

int run_verify(const VerifyCli& cli) {
  const auto started = std::chrono::steady_clock::now();
  const ConvexityFamily family = parse_family(cli.kind);
  Rational modulus(0);
  if (is_strong(family)) {
    if (cli.c.empty()) {
      throw std::invalid_argument("strong kinds require --c");
    }
    modulus = parse_rational(cli.c);
  } else if (!cli.c.empty()) {
    throw std::invalid_argument("--c applies only to the strong kinds");
  }

  const QuadField field(cli.d);
  FunctionSpec spec;
  spec.n = cli.n;
  const bool custom_pair = !cli.alpha_one.empty() || !cli.alpha_root.empty();
  if (custom_pair) {
    if (cli.alpha_one.empty() || cli.alpha_root.empty()) {
      throw std::invalid_argument("--alpha-one and --alpha-root go together");
    }
    spec.alpha_images = {field.parse(cli.alpha_one), field.parse(cli.alpha_root)};
    spec.family = is_strong(family) ? kFamilyStrongPair : kFamilyPair;
  } else {
    spec.family = is_strong(family) ? kFamilyStrongHamel : kFamilyHamel;
  }
  if (is_strong(family)) {
    spec.modulus = modulus;
  }

  VerifyJob job{ConvexityKind(family, cli.n, modulus),
                cli.d,
                cli.seed,
                cli.bounds,
                cli.samples,
                cli.threads,
                std::move(spec)};
  const ConvexityReport report = run_verify_job(job, field);

  if (cli.output.format == "text") {
    write_text(render_verify_text(job, report), cli.output.path);
  } else {
    emit_json(verify_report_to_json(job, report), cli.output, started);
  }

  const auto expected = expected_verdict(job.function, family);
  if (expected && report.verdict != *expected) {
    std::cerr << "error: verdict '" << verdict_name(report.verdict)
              << "' contradicts the certified expectation '"
              << verdict_name(*expected) << "'\n";
    return 2;
  }
  return 0;
}

struct IdentitiesCli {
  IdentitySuiteConfig config;
  std::int64_t d = 2;
  std::uint64_t seed = 0;
  SamplerBounds bounds;
  OutputOptions output;
};

int run_identities(const IdentitiesCli& cli) {
  const auto started = std::chrono::steady_clock::now();
  const QuadField field(cli.d);
  const auto suites = run_identity_suites(field, cli.config, cli.seed, cli.bounds);
  IdentitiesJob job{cli.d, cli.seed, cli.bounds, cli.config};
  if (cli.output.format == "text") {
    write_text(render_identities_text(job, suites), cli.output.path);
  } else {
    emit_json(identities_report_to_json(job, suites), cli.output, started);
  }
  for (const SuiteResult& suite : suites) {
    if (!suite.passed()) {
      std::cerr << "error: suite '" << suite.name << "' found "
                << suite.failures.size() << " exact-identity failures\n";
      return 2;
    }
  }
  return 0;
}

struct EvalCli {
  std::string what;
  std::string expression;
  std::string function;
  std::string steps;
  std::string x;
  std::string h;
  unsigned n = 0;  // 0 = not set
  std::int64_t d = 2;
  std::string output_path;
};

RealFunction parse_function_spec(const std::string& text) {
  std::istringstream in(text);
  std::string word;
  if (!(in >> word)) {
    throw std::invalid_argument("empty function spec");
  }
  if (word == "pow") {
    unsigned degree = 0;
    if (!(in >> degree)) {
      throw std::invalid_argument("usage: pow <degree>");
    }
    return power_function(degree);
  }
  if (word == "counterexample") {
    unsigned order = 0;
    if (!(in >> order)) {
      throw std::invalid_argument("usage: counterexample <n>");
    }
    return counterexample_function(order);
  }
  if (word == "strong-counterexample") {
    unsigned order = 0;
    std::string modulus;
    if (!(in >> order >> modulus)) {
      throw std::invalid_argument("usage: strong-counterexample <n> <c>");
    }
    return strong_counterexample(order, parse_rational(modulus));
  }
  throw std::invalid_argument("unknown function spec '" + text +
                              "' (try: pow K | counterexample N | "
                              "strong-counterexample N C)");
}

StepVector parse_steps(const std::string& text, const QuadField& field, unsigned n) {
  if (text == "witness") {
    if (n == 0) {
      throw std::invalid_argument("--steps witness requires --n");
    }
    return refuting_witness(n, field);
  }
  StepVector steps;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    steps.push_back(field.parse(text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) {
      break;
    }
    start = comma + 1;
  }
  return steps;
}

int run_eval(const EvalCli& cli) {
  const QuadField field(cli.d);
  QuadElem value;
  if (cli.what == "alpha" || cli.what == "beta") {
    if (cli.expression.empty()) {
      throw std::invalid_argument("usage: eval " + cli.what + " <expression>");
    }
    const AdditiveMap map =
        cli.what == "alpha" ? alpha_projection() : beta_projection(field);
    value = map(field.parse(cli.expression));
  } else if (cli.what == "delta") {
    if (cli.function.empty() || cli.steps.empty() || cli.x.empty()) {
      throw std::invalid_argument(
          "usage: eval delta --f <spec> --steps <list> --x <point>");
    }
    value = delta_iterated(parse_function_spec(cli.function),
                           parse_steps(cli.steps, field, cli.n),
                           field.parse(cli.x));
  } else if (cli.what == "closed-form-wright") {
    if (cli.n == 0 || cli.steps.empty()) {
      throw std::invalid_argument(
          "usage: eval closed-form-wright --n <n> --steps <list>");
    }
    value = closed_form_wright_delta(cli.n, parse_steps(cli.steps, field, cli.n));
  } else if (cli.what == "closed-form-jensen") {
    if (cli.n == 0 || cli.h.empty()) {
      throw std::invalid_argument(
          "usage: eval closed-form-jensen --n <n> --h <step>");
    }
    value = closed_form_jensen_delta(cli.n, field.parse(cli.h));
  } else if (cli.what == "counterexample") {
    if (cli.n == 0 || cli.x.empty()) {
      throw std::invalid_argument("usage: eval counterexample --n <n> --x <point>");
    }
    value = counterexample_function(cli.n)(field.parse(cli.x));
  } else {
    throw std::invalid_argument(
        "unknown eval operation '" + cli.what +
        "' (alpha | beta | delta | closed-form-wright | closed-form-jensen | "
        "counterexample)");
  }
  write_text(format_quad(value) + "\n", cli.output_path);
  return 0;
}

int run_recheck(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read '" << path << "'\n";
    return 1;
  }
  nlohmann::json document;
  try {
    in >> document;
  } catch (const std::exception& error) {
    std::cerr << "error: not a JSON document: " << error.what() << "\n";
    return 1;
  }
  const RecheckResult result = recheck_report(document);
  if (!result.ok()) {
    for (const std::string& problem : result.problems) {
      std::cerr << "recheck: " << problem << "\n";
    }
    return 2;
  }
  std::cout << "recheck passed: all recorded values re-verified exactly\n";
  return 0;
}

void add_output_options(CLI::App* command, OutputOptions& output) {
  command->add_option("-o,--output", output.path, "Write the report to a file");
  command->add_option("--format", output.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  command->add_flag("--with-meta", output.with_meta,
                    "Add a non-canonical meta section (timestamp, duration)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "convexcert - exact construction and certification of functions that "
      "separate n-Jensen-convexity from n-Wright-convexity over Q(sqrt(d))"};
  app.set_version_flag("--version", std::string(kVersion));
  app.set_config("--config", "", "Read defaults from a TOML config file");
  app.require_subcommand(1);

  VerifyCli verify_cli;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run a convexity campaign against a counterexample family");
  verify
      ->add_option("--kind", verify_cli.kind,
                   "jensen | wright | strong-jensen | strong-wright")
      ->required();
  verify->add_option("--n", verify_cli.n, "Convexity order (n >= 1)")
      ->required()
      ->check(CLI::PositiveNumber);
  verify->add_option("--c", verify_cli.c,
                     "Strong modulus, a positive rational like 1/3");
  verify->add_option("--d", verify_cli.d, "Radicand of the field (squarefree, >= 2)")
      ->capture_default_str();
  verify->add_option("--samples", verify_cli.samples, "Random samples to draw")
      ->capture_default_str();
  verify->add_option("--seed", verify_cli.seed, "Sampler seed")
      ->capture_default_str();
  verify
      ->add_option("--max-num", verify_cli.bounds.max_numerator,
                   "Sampler numerator bound")
      ->capture_default_str();
  verify
      ->add_option("--max-den", verify_cli.bounds.max_denominator,
                   "Sampler denominator bound")
      ->capture_default_str();
  verify->add_option("--threads", verify_cli.threads, "Worker threads")
      ->capture_default_str();
  verify->add_option("--alpha-one", verify_cli.alpha_one,
                     "Custom additive pair: image of 1 under alpha");
  verify->add_option("--alpha-root", verify_cli.alpha_root,
                     "Custom additive pair: image of sqrt(d) under alpha");
  add_output_options(verify, verify_cli.output);

  IdentitiesCli identities_cli;
  CLI::App* identities = app.add_subcommand(
      "identities", "Run the exact finite-difference identity suites");
  identities
      ->add_option("--n-max", identities_cli.config.n_max,
                   "Highest power-identity order")
      ->capture_default_str();
  identities
      ->add_option("--degree-max", identities_cli.config.degree_max,
                   "Polynomial degree for the composition suite")
      ->capture_default_str();
  identities
      ->add_option("--step-max", identities_cli.config.step_max,
                   "Step count for composition/permutation suites")
      ->capture_default_str();
  identities
      ->add_option("--oracle-step-max", identities_cli.config.oracle_step_max,
                   "Step count for the oracle cross-check")
      ->capture_default_str();
  identities
      ->add_option("--samples", identities_cli.config.samples,
                   "Instances per order / per suite")
      ->capture_default_str();
  identities->add_option("--seed", identities_cli.seed, "Sampler seed")
      ->capture_default_str();
  identities->add_option("--d", identities_cli.d, "Radicand of the field")
      ->capture_default_str();
  identities
      ->add_option("--max-num", identities_cli.bounds.max_numerator,
                   "Sampler numerator bound")
      ->capture_default_str();
  identities
      ->add_option("--max-den", identities_cli.bounds.max_denominator,
                   "Sampler denominator bound")
      ->capture_default_str();
  add_output_options(identities, identities_cli.output);

  EvalCli eval_cli;
  CLI::App* eval = app.add_subcommand("eval", "Evaluate one exact expression");
  eval->set_help_flag("--help", "Print this help message and exit");
  eval->add_option("what", eval_cli.what,
                   "alpha | beta | delta | closed-form-wright | "
                   "closed-form-jensen | counterexample")
      ->required();
  eval->add_option("expression", eval_cli.expression,
                   "Field element, e.g. \"-1 + 1*sqrt(2)\" (alpha/beta)");
  eval->add_option("--f", eval_cli.function,
                   "Function spec: pow K | counterexample N | "
                   "strong-counterexample N C");
  eval->add_option("--steps", eval_cli.steps,
                   "Comma-separated steps, or 'witness' (with --n)");
  eval->add_option("--x", eval_cli.x, "Base point");
  eval->add_option("--h", eval_cli.h, "Equal step");
  eval->add_option("--n", eval_cli.n, "Convexity order");
  eval->add_option("--d", eval_cli.d, "Radicand of the field")
      ->capture_default_str();
  eval->add_option("-o,--output", eval_cli.output_path, "Write the value to a file");

  std::string recheck_path;
  CLI::App* recheck =
      app.add_subcommand("recheck", "Re-validate a previously emitted JSON report");
  recheck->add_option("report", recheck_path, "Path to the report file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (app.got_subcommand(verify)) {
      return run_verify(verify_cli);
    }
    if (app.got_subcommand(identities)) {
      return run_identities(identities_cli);
    }
    if (app.got_subcommand(eval)) {
      return run_eval(eval_cli);
    }
    if (app.got_subcommand(recheck)) {
      return run_recheck(recheck_path);
    }
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
  return 0;
}
