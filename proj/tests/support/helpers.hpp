#pragma once

#include <random>
#include <string>
#include <vector>

#include "affimg/cli/parser.hpp"
#include "affimg/ideal.hpp"
#include "affimg/polynomial_map.hpp"

namespace affimg::testing {

inline Polynomial P(const RingContext& R, const std::string& text) {
  return cli::parsePolynomial(text, R);
}

inline Ideal I(const RingContext& R, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> v;
  for (const char* g : gens) v.push_back(P(R, g));
  return Ideal(R, v);
}

inline PolynomialMap M(const RingContext& dom, const RingContext& cod,
                       std::initializer_list<const char*> coords) {
  std::vector<Polynomial> v;
  for (const char* c : coords) v.push_back(P(dom, c));
  return PolynomialMap(dom, cod, v);
}

/// Random polynomial with small integer coefficients and total degree at
/// most `maxDegree`; `terms` candidate monomials are drawn.
inline Polynomial randomPolynomial(const RingContext& R, std::mt19937_64& rng,
                                   unsigned maxDegree, unsigned terms, int coeff = 5) {
  std::uniform_int_distribution<int> c(-coeff, coeff);
  std::vector<Term> out;
  for (unsigned k = 0; k < terms; ++k) {
    Monomial m(R.size());
    unsigned budget = std::uniform_int_distribution<unsigned>(0, maxDegree)(rng);
    for (unsigned b = 0; b < budget; ++b) {
      std::size_t v = std::uniform_int_distribution<std::size_t>(0, R.size() - 1)(rng);
      m.set(v, m[v] + 1);
    }
    out.push_back({m, Rational(c(rng))});
  }
  return Polynomial::fromTerms(R, out);
}

inline std::vector<Rational> randomRationalPoint(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  std::vector<Rational> p;
  for (std::size_t i = 0; i < n; ++i) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    p.push_back(r);
  }
  return p;
}

}  // namespace affimg::testing
