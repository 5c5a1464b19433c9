#include "convexcert/diffcalc.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace convexcert {

QuadElem delta_single(const RealFunction& f, const QuadElem& h, const QuadElem& x) {
  return f(x + h) - f(x);
}

namespace {

class MemoizedFunction {
 public:
  explicit MemoizedFunction(const RealFunction& f) : f_(f) {}

  const QuadElem& operator()(const QuadElem& point) {
    auto it = cache_.lower_bound(point);
    if (it == cache_.end() || it->first != point) {
      it = cache_.emplace_hint(it, point, f_(point));
    }
    return it->second;
  }

 private:
  const RealFunction& f_;
  std::map<QuadElem, QuadElem> cache_;
};

QuadElem peel(MemoizedFunction& f, const StepVector& steps, std::size_t first,
              const QuadElem& point) {
  if (first == steps.size()) {
    return f(point);
  }
  return peel(f, steps, first + 1, point + steps[first]) -
         peel(f, steps, first + 1, point);
}

}  // namespace

QuadElem delta_iterated(const RealFunction& f, const StepVector& steps,
                        const QuadElem& x) {
  if (steps.empty()) {
    throw std::invalid_argument("diffcalc: empty step vector");
  }
  MemoizedFunction memo(f);
  return peel(memo, steps, 0, x);
}

QuadElem delta_iterated_subset_sum(const RealFunction& f, const StepVector& steps,
                                   const QuadElem& x) {
  if (steps.empty()) {
    throw std::invalid_argument("diffcalc: empty step vector");
  }
  if (steps.size() > kMaxSubsetSteps) {
    throw std::invalid_argument("diffcalc: step vector of length " +
                                std::to_string(steps.size()) +
                                " exceeds the enumeration cap " +
                                std::to_string(kMaxSubsetSteps));
  }
  const std::size_t count = steps.size();
  QuadElem total;
  for (std::size_t mask = 0; mask < (std::size_t{1} << count); ++mask) {
    QuadElem point = x;
    std::size_t selected = 0;
    for (std::size_t i = 0; i < count; ++i) {
      if (mask & (std::size_t{1} << i)) {
        point += steps[i];
        ++selected;
      }
    }
    const QuadElem term = f(point);
    if ((count - selected) % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

QuadElem delta_equal(const RealFunction& f, const QuadElem& h, unsigned order,
                     const QuadElem& x) {
  if (order == 0) {
    throw std::invalid_argument("diffcalc: order must be >= 1");
  }
  QuadElem total;
  QuadElem point = x;
  for (unsigned j = 0; j <= order; ++j) {
    const Rational weight = make_rational(binomial(order, j), BigInt(1));
    const QuadElem term = QuadElem(weight) * f(point);
    if ((order - j) % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
    point += h;
  }
  return total;
}

IdentityCheck check_power_identity(unsigned n, const StepVector& steps,
                                   const QuadElem& x) {
  if (steps.size() != n) {
    throw std::invalid_argument("diffcalc: power identity needs exactly n steps");
  }
  QuadElem lhs = delta_iterated(power_function(n), steps, x);
  QuadElem rhs = QuadElem(Rational(factorial(n)));
  for (const QuadElem& h : steps) {
    rhs *= h;
  }
  const bool holds = lhs == rhs;
  return {std::move(lhs), std::move(rhs), holds};
}

IdentityCheck check_additive_composition(const RealFunction& g, const AdditiveMap& a,
                                         const StepVector& steps, const QuadElem& x) {
  QuadElem lhs = delta_iterated(compose_with_additive(g, a), steps, x);
  StepVector mapped_steps;
  mapped_steps.reserve(steps.size());
  for (const QuadElem& h : steps) {
    mapped_steps.push_back(a(h));
  }
  QuadElem rhs = delta_iterated(g, mapped_steps, a(x));
  const bool holds = lhs == rhs;
  return {std::move(lhs), std::move(rhs), holds};
}

}  // namespace convexcert
