#pragma once

#include <string>
#include <vector>

#include "affimg/polynomial.hpp"
#include "affimg/ring.hpp"

namespace affimg {

/// Morphism A^N -> A^n given by one coordinate polynomial per codomain
/// variable, each living in the domain ring.
class PolynomialMap {
 public:
  PolynomialMap() = default;
  PolynomialMap(RingContext domain, RingContext codomain,
                std::vector<Polynomial> coordinates);

  static PolynomialMap identity(const RingContext& ring);
  static PolynomialMap constant(const RingContext& domain, const RingContext& codomain,
                                std::span<const Rational> point);

  const RingContext& domainRing() const noexcept { return domain_; }
  const RingContext& codomainRing() const noexcept { return codomain_; }
  const std::vector<Polynomial>& coordinates() const noexcept { return coords_; }
  const Polynomial& coordinate(std::size_t i) const { return coords_.at(i); }

  std::vector<Rational> operator()(std::span<const Rational> point) const;
  /// Max total degree over nonzero coordinates (0 if there are none).
  unsigned totalDegree() const;
  std::string toString() const;

  friend bool operator==(const PolynomialMap& a, const PolynomialMap& b);

 private:
  RingContext domain_;
  RingContext codomain_;
  std::vector<Polynomial> coords_;
};

/// outer o inner; inner's codomain variables are matched to outer's domain
/// variables position by position.
PolynomialMap compose(const PolynomialMap& outer, const PolynomialMap& inner);
/// g(F(z)) for g in F's codomain ring.
Polynomial pullback(const Polynomial& g, const PolynomialMap& F);

}  // namespace affimg
