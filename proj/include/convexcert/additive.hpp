/**
 * @file additive.hpp
 * @brief Q-linear (additive) self-maps of Q(sqrt(d)).
 *
 * Q(sqrt(d)) is two-dimensional over Q with basis {1, sqrt(d)}, so an
 * additive map is determined by the images of the two basis elements. The
 * complementary projections alpha (rational coordinate) and beta
 * (id - alpha) split every element along that basis.
 */
#pragma once

#include "convexcert/quad.hpp"

namespace convexcert {

class Sampler;

class AdditiveMap {
 public:
  AdditiveMap(QuadElem image_of_one, QuadElem image_of_root);

  const QuadElem& image_of_one() const noexcept { return image_of_one_; }
  const QuadElem& image_of_root() const noexcept { return image_of_root_; }

  /// Image of x = l0 + l1*sqrt(d): l0*image_of_one + l1*image_of_root.
  QuadElem operator()(const QuadElem& x) const;

  friend bool operator==(const AdditiveMap&, const AdditiveMap&) = default;

 private:
  QuadElem image_of_one_;
  QuadElem image_of_root_;
};

/// x -> rational coordinate of x. Field-independent: both images are rational.
AdditiveMap alpha_projection();

/// x -> x - alpha(x), i.e. the sqrt(d) component.
AdditiveMap beta_projection(const QuadField& field);

AdditiveMap identity_map(const QuadField& field);
AdditiveMap zero_map();

/// outer(inner(.)); additive maps are closed under composition.
AdditiveMap compose(const AdditiveMap& outer, const AdditiveMap& inner);

/// Both basis images drawn from the bounded sampler; deterministic per seed.
AdditiveMap random_additive_map(Sampler& sampler, const QuadField& field);

}  // namespace convexcert
