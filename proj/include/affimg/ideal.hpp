#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "affimg/polynomial.hpp"
#include "affimg/ring.hpp"
#include "affimg/term_order.hpp"

namespace affimg {

/// Finitely generated ideal with cached reduced Groebner bases.
///
/// Ideals are immutable. A cache slot per term order is filled at most once;
/// copies of an ideal share the cache, and concurrent readers are safe.
class Ideal {
 public:
  Ideal();
  explicit Ideal(RingContext ring, std::vector<Polynomial> generators = {});

  static Ideal unit(const RingContext& ring);
  /// Adopts `basis` as the reduced Groebner basis for `ord` without
  /// recomputing it; the caller guarantees it is one.
  static Ideal fromGroebnerBasis(RingContext ring, std::vector<Polynomial> basis,
                                 const TermOrder& ord);

  const RingContext& ring() const noexcept { return ring_; }
  /// Nonzero generators, as given.
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  bool hasNoGenerators() const noexcept { return gens_.empty(); }

  /// Reduced, monic Groebner basis, sorted by descending leading monomial.
  const std::vector<Polynomial>& groebnerBasis(
      const TermOrder& ord = TermOrder::grevlex()) const;
  /// Any basis already computed (grevlex first), else computes grevlex.
  const std::vector<Polynomial>& someGroebnerBasis() const;
  std::pair<TermOrder, const std::vector<Polynomial>*> someGroebnerBasisWithOrder() const;

  Ideal operator+(const Ideal& other) const;
  Ideal operator+(const Polynomial& extra) const;

  /// Generators re-expressed in another ring by variable names.
  Ideal inRing(const RingContext& target) const;

  std::string toString() const;

 private:
  struct Cache;
  RingContext ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Remainder of multivariate division; no term of the result is divisible
/// by the leading monomial of any basis element.
Polynomial normalForm(const Polynomial& p, std::span<const Polynomial> basis,
                      const TermOrder& ord);
Polynomial sPolynomial(const Polynomial& f, const Polynomial& g,
                       const TermOrder& ord);

/// Reduced Groebner basis (Buchberger with Gebauer-Moeller criteria); the
/// result is cached on `I`.
std::vector<Polynomial> buchberger(const Ideal& I, const TermOrder& ord);

bool containsOne(const Ideal& I);
bool isZeroIdeal(const Ideal& I);
bool idealMembership(const Polynomial& p, const Ideal& I);
/// Same ideal: equal reduced grevlex bases.
bool sameIdeal(const Ideal& I, const Ideal& J);

/// I intersected with the subring of the remaining variables, returned in
/// the ring without `vars`.
Ideal eliminate(const Ideal& I, std::span<const std::string> vars);
/// I : f^infinity via (I + (t f - 1)) with a fresh t eliminated.
Ideal saturate(const Ideal& I, const Polynomial& f);
/// I : x^infinity for generators homogeneous in the ring weights and x of
/// positive weight: one basis in TermOrder::weightedReverse(x), then every
/// element divided by its largest power of x. Falls back to saturate() when
/// the generators are not homogeneous.
Ideal saturateByVariable(const Ideal& I, std::size_t var);
Ideal intersectIdeals(const Ideal& I, const Ideal& J);
bool radicalMembership(const Polynomial& g, const Ideal& I);
/// Squarefree part of the single generator; UnsupportedError when the
/// reduced basis has more than one element.
Ideal radicalOfPrincipal(const Ideal& I);
/// Krull dimension of V(I); -1 when I is the unit ideal.
int dimensionOfIdeal(const Ideal& I);
bool idealEqualityUpToRadical(const Ideal& I, const Ideal& J);

/// Multivariate gcd over Q, monic under grevlex (zero only if both are zero).
Polynomial polynomialGcd(const Polynomial& f, const Polynomial& g);
/// Exact quotient f / g; DomainError if g does not divide f.
Polynomial exactQuotient(const Polynomial& f, const Polynomial& g);
Polynomial squarefreePart(const Polynomial& f);

namespace detail {

struct GroebnerStats {
  std::size_t pairsConsidered = 0;
  std::size_t zeroReductions = 0;
  std::size_t basisSize = 0;
};

/// Engine entry point; generators may contain zeros.
std::vector<Polynomial> computeGroebnerBasis(const RingContext& ring,
                                             std::span<const Polynomial> gens,
                                             const TermOrder& ord,
                                             GroebnerStats* stats = nullptr);

}  // namespace detail

}  // namespace affimg
