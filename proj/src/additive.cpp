#include "convexcert/additive.hpp"

#include <utility>

#include "convexcert/sampler.hpp"

namespace convexcert {

AdditiveMap::AdditiveMap(QuadElem image_of_one, QuadElem image_of_root)
    : image_of_one_(std::move(image_of_one)),
      image_of_root_(std::move(image_of_root)) {}

QuadElem AdditiveMap::operator()(const QuadElem& x) const {
  return QuadElem(x.rational_part()) * image_of_one_ +
         QuadElem(x.root_part()) * image_of_root_;
}

AdditiveMap alpha_projection() {
  return AdditiveMap(QuadElem(Rational(1)), QuadElem(Rational(0)));
}

AdditiveMap beta_projection(const QuadField& field) {
  return AdditiveMap(field.zero(), field.root());
}

AdditiveMap identity_map(const QuadField& field) {
  return AdditiveMap(field.one(), field.root());
}

AdditiveMap zero_map() {
  return AdditiveMap(QuadElem(Rational(0)), QuadElem(Rational(0)));
}

AdditiveMap compose(const AdditiveMap& outer, const AdditiveMap& inner) {
  return AdditiveMap(outer(inner.image_of_one()), outer(inner.image_of_root()));
}

AdditiveMap random_additive_map(Sampler& sampler, const QuadField& field) {
  QuadElem image_of_one = sampler.quad(field);
  QuadElem image_of_root = sampler.quad(field);
  return AdditiveMap(std::move(image_of_one), std::move(image_of_root));
}

}  // namespace convexcert
