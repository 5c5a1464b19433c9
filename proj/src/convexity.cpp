#include "convexcert/convexity.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <utility>

namespace convexcert {

bool is_strong(ConvexityFamily family) {
  return family == ConvexityFamily::strong_jensen ||
         family == ConvexityFamily::strong_wright;
}

bool is_equal_step(ConvexityFamily family) {
  return family == ConvexityFamily::jensen ||
         family == ConvexityFamily::strong_jensen;
}

std::string family_name(ConvexityFamily family) {
  switch (family) {
    case ConvexityFamily::jensen:
      return "jensen";
    case ConvexityFamily::wright:
      return "wright";
    case ConvexityFamily::strong_jensen:
      return "strong-jensen";
    case ConvexityFamily::strong_wright:
      return "strong-wright";
  }
  throw std::logic_error("convexity: unknown family");
}

ConvexityFamily parse_family(const std::string& name) {
  if (name == "jensen") return ConvexityFamily::jensen;
  if (name == "wright") return ConvexityFamily::wright;
  if (name == "strong-jensen") return ConvexityFamily::strong_jensen;
  if (name == "strong-wright") return ConvexityFamily::strong_wright;
  throw std::invalid_argument("convexity: unknown kind '" + name + "'");
}

ConvexityKind::ConvexityKind(ConvexityFamily family, unsigned order, Rational modulus)
    : family_(family), order_(order), modulus_(std::move(modulus)) {
  if (order_ < 1) {
    throw std::invalid_argument("convexity: order must be >= 1");
  }
  if (is_strong(family_)) {
    if (sign_of(modulus_) <= 0) {
      throw std::invalid_argument("convexity: strong modulus must be positive");
    }
  } else if (!modulus_.is_zero()) {
    throw std::invalid_argument("convexity: plain kinds take no modulus");
  }
}

ConvexityKind ConvexityKind::jensen(unsigned order) {
  return ConvexityKind(ConvexityFamily::jensen, order, Rational(0));
}

ConvexityKind ConvexityKind::wright(unsigned order) {
  return ConvexityKind(ConvexityFamily::wright, order, Rational(0));
}

ConvexityKind ConvexityKind::strong_jensen(unsigned order, Rational modulus) {
  return ConvexityKind(ConvexityFamily::strong_jensen, order, std::move(modulus));
}

ConvexityKind ConvexityKind::strong_wright(unsigned order, Rational modulus) {
  return ConvexityKind(ConvexityFamily::strong_wright, order, std::move(modulus));
}

std::string verdict_name(Verdict verdict) {
  return verdict == Verdict::violated ? "violated" : "certified-on-samples";
}

namespace {

QuadElem alpha_part(const QuadElem& x) { return QuadElem(x.rational_part()); }

void validate_sample(const WitnessSample& sample, const ConvexityKind& kind) {
  if (sample.steps.size() != kind.order() + 1) {
    throw std::invalid_argument("convexity: sample needs n+1 steps");
  }
  for (const QuadElem& h : sample.steps) {
    if (sign_of(h) != 1) {
      throw std::invalid_argument("convexity: steps must be strictly positive");
    }
  }
  if (is_equal_step(kind.family())) {
    for (const QuadElem& h : sample.steps) {
      if (!(h == sample.steps.front())) {
        throw std::invalid_argument("convexity: equal-step kind needs equal steps");
      }
    }
  }
}

struct SampleOutcome {
  QuadElem lhs;
  QuadElem rhs;
  int comparison = 0;  // sign_of(lhs - rhs)
};

SampleOutcome evaluate_sample(const RealFunction& f, const ConvexityKind& kind,
                              const WitnessSample& sample) {
  SampleOutcome outcome;
  if (is_equal_step(kind.family())) {
    outcome.lhs = delta_equal(f, sample.steps.front(),
                              static_cast<unsigned>(sample.steps.size()), sample.x);
  } else {
    outcome.lhs = delta_iterated(f, sample.steps, sample.x);
  }
  if (is_strong(kind.family())) {
    QuadElem bound = QuadElem(Rational(factorial(kind.order() + 1)) * kind.modulus());
    for (const QuadElem& h : sample.steps) {
      bound *= h;
    }
    outcome.rhs = std::move(bound);
  }
  outcome.comparison = sign_of(outcome.lhs - outcome.rhs);
  return outcome;
}

}  // namespace

ConvexityReport check_convexity(const RealFunction& f, const ConvexityKind& kind,
                                const QuadField& field, const CheckConfig& config) {
  if (config.samples < 1) {
    throw std::invalid_argument("convexity: sample count must be positive");
  }
  if (config.threads < 1) {
    throw std::invalid_argument("convexity: thread count must be positive");
  }
  for (const WitnessSample& sample : config.forced) {
    validate_sample(sample, kind);
  }

  // Samples are drawn up front, sequentially, so the campaign is a pure
  // function of (kind, seed, bounds) regardless of the worker count.
  std::vector<WitnessSample> samples;
  samples.reserve(config.forced.size() + config.samples);
  samples.insert(samples.end(), config.forced.begin(), config.forced.end());
  const unsigned step_count = kind.order() + 1;
  Sampler sampler(config.seed, config.bounds);
  for (std::size_t i = 0; i < config.samples; ++i) {
    WitnessSample sample;
    sample.x = sampler.quad(field);
    if (is_equal_step(kind.family())) {
      sample.steps.assign(step_count, sampler.positive_quad(field));
    } else {
      sample.steps.reserve(step_count);
      for (unsigned j = 0; j < step_count; ++j) {
        sample.steps.push_back(sampler.positive_quad(field));
      }
    }
    samples.push_back(std::move(sample));
  }

  std::vector<SampleOutcome> outcomes(samples.size());
  const unsigned threads =
      static_cast<unsigned>(std::min<std::size_t>(config.threads, samples.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < samples.size(); ++i) {
      outcomes[i] = evaluate_sample(f, kind, samples[i]);
    }
  } else {
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t i = w; i < samples.size(); i += threads) {
          outcomes[i] = evaluate_sample(f, kind, samples[i]);
        }
      });
    }
    for (std::thread& worker : workers) {
      worker.join();
    }
  }

  ConvexityReport report{kind, f.descriptor};
  report.samples_checked = samples.size();
  report.forced_count = config.forced.size();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (outcomes[i].comparison < 0) {
      report.violations.push_back(
          {i, samples[i], std::move(outcomes[i].lhs), std::move(outcomes[i].rhs)});
    } else if (outcomes[i].comparison == 0) {
      ++report.equality_count;
    }
  }
  report.verdict = report.violations.empty() ? Verdict::certified_on_samples
                                             : Verdict::violated;
  return report;
}

RealFunction counterexample_function(unsigned n) {
  if (n < 1) {
    throw std::invalid_argument("convexity: order must be >= 1");
  }
  return {"hamel counterexample n=" + std::to_string(n),
          [degree = n + 1](const QuadElem& x) {
            const QuadElem alpha = alpha_part(x);
            return pow(alpha, degree) + pow(x - alpha, degree);
          }};
}

RealFunction counterexample_from_pair(unsigned n, AdditiveMap a, AdditiveMap b) {
  if (n < 1) {
    throw std::invalid_argument("convexity: order must be >= 1");
  }
  return {"additive-pair counterexample n=" + std::to_string(n) + " a=(" +
              format_quad(a.image_of_one()) + "; " + format_quad(a.image_of_root()) +
              ") b=(" + format_quad(b.image_of_one()) + "; " +
              format_quad(b.image_of_root()) + ")",
          [degree = n + 1, a = std::move(a), b = std::move(b)](const QuadElem& x) {
            return pow(a(x), degree) + pow(b(x), degree);
          }};
}

QuadElem closed_form_wright_delta(unsigned n, const StepVector& steps) {
  if (steps.size() != n + 1) {
    throw std::invalid_argument("convexity: closed form needs n+1 steps");
  }
  QuadElem alpha_product(Rational(1));
  QuadElem beta_product(Rational(1));
  for (const QuadElem& h : steps) {
    const QuadElem alpha = alpha_part(h);
    alpha_product *= alpha;
    beta_product *= h - alpha;
  }
  return QuadElem(Rational(factorial(n + 1))) * (alpha_product + beta_product);
}

QuadElem closed_form_jensen_delta(unsigned n, const QuadElem& h) {
  const QuadElem alpha = alpha_part(h);
  return QuadElem(Rational(factorial(n + 1))) *
         (pow(alpha, n + 1) + pow(h - alpha, n + 1));
}

StepVector refuting_witness(unsigned n, const QuadField& field) {
  if (n < 1) {
    throw std::invalid_argument("convexity: order must be >= 1");
  }
  StepVector steps;
  steps.reserve(n + 1);
  steps.push_back(field.make(Rational(-1), Rational(1)));  // -1 + sqrt(d) > 0
  steps.push_back(field.one());
  for (unsigned i = 2; i <= n; ++i) {
    steps.push_back(field.make(Rational(1), Rational(1)));
  }
  return steps;
}

namespace {

void require_positive_modulus(const Rational& c) {
  if (sign_of(c) <= 0) {
    throw std::domain_error("convexity: strong modulus must be positive");
  }
}

}  // namespace

RealFunction strong_shift(const RealFunction& f, unsigned n, const Rational& c) {
  require_positive_modulus(c);
  return {f.descriptor + " - " + format_rational(c) + "*x^" + std::to_string(n + 1),
          [f, c, degree = n + 1](const QuadElem& x) {
            return f(x) - QuadElem(c) * pow(x, degree);
          }};
}

RealFunction strong_unshift(const RealFunction& g, unsigned n, const Rational& c) {
  require_positive_modulus(c);
  return {g.descriptor + " + " + format_rational(c) + "*x^" + std::to_string(n + 1),
          [g, c, degree = n + 1](const QuadElem& x) {
            return g(x) + QuadElem(c) * pow(x, degree);
          }};
}

RealFunction strong_counterexample(unsigned n, const Rational& c) {
  require_positive_modulus(c);
  RealFunction base = counterexample_function(n);
  return {"strong hamel counterexample n=" + std::to_string(n) +
              " c=" + format_rational(c),
          [base = std::move(base), c, degree = n + 1](const QuadElem& x) {
            return base(x) + QuadElem(c) * pow(x, degree);
          }};
}

ClassicWrightReport check_classic_wright(const RealFunction& f,
                                         const std::vector<ClassicSample>& samples) {
  ClassicWrightReport report;
  report.function_descriptor = f.descriptor;
  report.samples_checked = samples.size();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const ClassicSample& sample = samples[i];
    if (sign_of(sample.t) < 0 || sample.t > 1) {
      throw std::domain_error("convexity: t must lie in [0, 1]");
    }
    const QuadElem t(sample.t);
    const QuadElem complement(Rational(1) - sample.t);
    QuadElem lhs = f(t * sample.x + complement * sample.y) +
                   f(complement * sample.x + t * sample.y);
    QuadElem rhs = f(sample.x) + f(sample.y);
    const int comparison = sign_of(lhs - rhs);
    if (comparison > 0) {
      report.violations.push_back({i, sample, std::move(lhs), std::move(rhs)});
    } else if (comparison == 0) {
      ++report.equality_count;
    }
  }
  report.verdict = report.violations.empty() ? Verdict::certified_on_samples
                                             : Verdict::violated;
  return report;
}

}  // namespace convexcert
