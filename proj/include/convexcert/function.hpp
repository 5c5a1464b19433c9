/**
 * @file function.hpp
 * @brief Functions Q(sqrt(d)) -> Q(sqrt(d)) as first-class values.
 *
 * Evaluation contracts are pure and total on the field; the descriptor
 * identifies the function in reports and diagnostics.
 */
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "convexcert/additive.hpp"
#include "convexcert/quad.hpp"

namespace convexcert {

struct RealFunction {
  std::string descriptor;
  std::function<QuadElem(const QuadElem&)> eval;

  QuadElem operator()(const QuadElem& x) const { return eval(x); }
};

RealFunction constant_function(QuadElem value);
RealFunction identity_function();

/// x -> x^degree.
RealFunction power_function(unsigned degree);

/// coefficients[i] multiplies x^i; evaluated by Horner's rule.
RealFunction polynomial_function(std::vector<Rational> coefficients);

/// g composed with an additive map: x -> g(a(x)).
RealFunction compose_with_additive(RealFunction g, AdditiveMap a);

RealFunction function_sum(RealFunction f, RealFunction g);
RealFunction function_scale(const Rational& scale, RealFunction f);

}  // namespace convexcert
