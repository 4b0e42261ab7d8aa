#include "affimg/polynomial_map.hpp"

#include <map>
#include <sstream>

#include "affimg/errors.hpp"

namespace affimg {

PolynomialMap::PolynomialMap(RingContext domain, RingContext codomain,
                             std::vector<Polynomial> coordinates)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      coords_(std::move(coordinates)) {
  if (coords_.size() != codomain_.size())
    throw DomainError("map needs one coordinate per codomain variable");
  for (const Polynomial& c : coords_)
    if (!(c.ring() == domain_)) throw DomainError("map coordinate outside the domain ring");
}

PolynomialMap PolynomialMap::identity(const RingContext& ring) {
  std::vector<Polynomial> c;
  for (std::size_t i = 0; i < ring.size(); ++i) c.push_back(Polynomial::variable(ring, i));
  return PolynomialMap(ring, ring, std::move(c));
}

PolynomialMap PolynomialMap::constant(const RingContext& domain,
                                      const RingContext& codomain,
                                      std::span<const Rational> point) {
  if (point.size() != codomain.size()) throw DomainError("constant map: arity mismatch");
  std::vector<Polynomial> c;
  for (const Rational& v : point) c.push_back(Polynomial::constant(domain, v));
  return PolynomialMap(domain, codomain, std::move(c));
}

std::vector<Rational> PolynomialMap::operator()(std::span<const Rational> point) const {
  if (point.size() != domain_.size()) throw DomainError("map evaluation: arity mismatch");
  std::vector<Rational> out;
  out.reserve(coords_.size());
  for (const Polynomial& c : coords_) out.push_back(evaluate(c, point));
  return out;
}

unsigned PolynomialMap::totalDegree() const {
  unsigned d = 0;
  for (const Polynomial& c : coords_)
    if (!c.isZero()) d = std::max(d, c.totalDegree());
  return d;
}

std::string PolynomialMap::toString() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coords_.size(); ++i)
    os << (i ? ", " : "") << coords_[i].toString();
  os << ")";
  return os.str();
}

bool operator==(const PolynomialMap& a, const PolynomialMap& b) {
  return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.coords_ == b.coords_;
}

PolynomialMap compose(const PolynomialMap& outer, const PolynomialMap& inner) {
  if (inner.codomainRing().size() != outer.domainRing().size())
    throw DomainError("compose: inner codomain does not match outer domain");
  std::map<std::string, Polynomial> assignment;
  for (std::size_t i = 0; i < inner.coordinates().size(); ++i)
    assignment.emplace(outer.domainRing().name(i), inner.coordinate(i));
  std::vector<Polynomial> c;
  for (const Polynomial& p : outer.coordinates())
    c.push_back(substitute(p, assignment, inner.domainRing()));
  return PolynomialMap(inner.domainRing(), outer.codomainRing(), std::move(c));
}

Polynomial pullback(const Polynomial& g, const PolynomialMap& F) {
  if (!(g.ring() == F.codomainRing())) throw DomainError("pullback: ring mismatch");
  std::map<std::string, Polynomial> assignment;
  for (std::size_t i = 0; i < F.coordinates().size(); ++i)
    assignment.emplace(F.codomainRing().name(i), F.coordinate(i));
  return substitute(g, assignment, F.domainRing());
}

}  // namespace affimg
