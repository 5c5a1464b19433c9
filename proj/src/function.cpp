#include "convexcert/function.hpp"

#include <utility>

namespace convexcert {

RealFunction constant_function(QuadElem value) {
  return {"constant " + format_quad(value),
          [value = std::move(value)](const QuadElem&) { return value; }};
}

RealFunction identity_function() {
  return {"x", [](const QuadElem& x) { return x; }};
}

RealFunction power_function(unsigned degree) {
  return {"x^" + std::to_string(degree),
          [degree](const QuadElem& x) { return pow(x, degree); }};
}

RealFunction polynomial_function(std::vector<Rational> coefficients) {
  std::string descriptor = "polynomial deg<=" +
                           std::to_string(coefficients.empty() ? 0 : coefficients.size() - 1);
  return {std::move(descriptor),
          [coefficients = std::move(coefficients)](const QuadElem& x) {
            QuadElem value;
            for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
              value = value * x + QuadElem(*it);
            }
            return value;
          }};
}

RealFunction compose_with_additive(RealFunction g, AdditiveMap a) {
  return {g.descriptor + " o additive(" + format_quad(a.image_of_one()) + "; " +
              format_quad(a.image_of_root()) + ")",
          [g = std::move(g), a = std::move(a)](const QuadElem& x) {
            return g(a(x));
          }};
}

RealFunction function_sum(RealFunction f, RealFunction g) {
  return {"(" + f.descriptor + ") + (" + g.descriptor + ")",
          [f = std::move(f), g = std::move(g)](const QuadElem& x) {
            return f(x) + g(x);
          }};
}

RealFunction function_scale(const Rational& scale, RealFunction f) {
  return {format_rational(scale) + "*(" + f.descriptor + ")",
          [scale, f = std::move(f)](const QuadElem& x) {
            return QuadElem(scale) * f(x);
          }};
}

}  // namespace convexcert
