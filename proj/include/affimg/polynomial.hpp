#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "affimg/monomial.hpp"
#include "affimg/ring.hpp"
#include "affimg/term_order.hpp"

namespace affimg {

using Rational = mpq_class;

struct Term {
  Monomial monomial;
  Rational coefficient;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Exact multivariate polynomial over the rationals.
///
/// Terms are stored with nonzero coefficients, sorted descending by graded
/// reverse lex in ring variable order; this is the canonical form used for
/// equality and printing.
class Polynomial {
 public:
  Polynomial() = default;  // zero in the empty ring
  explicit Polynomial(RingContext ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingContext ring, const Rational& value);
  static Polynomial variable(RingContext ring, std::string_view name);
  static Polynomial variable(RingContext ring, std::size_t index);
  static Polynomial monomial(RingContext ring, Monomial m, Rational c = 1);
  /// Sorts, merges duplicates and drops zero coefficients.
  static Polynomial fromTerms(RingContext ring, std::vector<Term> terms);

  const RingContext& ring() const noexcept { return ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool isZero() const noexcept { return terms_.empty(); }
  bool isConstant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.isOne());
  }
  /// Value of a constant polynomial, nullopt otherwise.
  std::optional<Rational> constantValue() const;
  Rational constantTerm() const;
  /// Throws DomainError on the zero polynomial.
  unsigned totalDegree() const;
  unsigned degreeIn(std::size_t var) const;
  bool involves(std::size_t var) const;
  /// Bit i set iff variable i occurs in some term.
  std::uint32_t support() const noexcept;
  Rational coefficientOf(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  Polynomial& operator*=(const Polynomial& q);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }

  Polynomial pow(unsigned k) const;
  /// Same polynomial divided by its leading coefficient under `ord`.
  Polynomial monic(const TermOrder& ord = TermOrder::grevlex()) const;

  /// Canonical text: descending terms, `*` between factors, `^` for powers,
  /// rational coefficients as p/q.
  std::string toString() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void requireSameRing(const Polynomial& q, const char* op) const;

  RingContext ring_;
  std::vector<Term> terms_;
};

/// Simultaneous substitution. Variables of p without an assignment map to the
/// variable of the same name in `target` (DomainError if there is none).
Polynomial substitute(const Polynomial& p,
                      const std::map<std::string, Polynomial>& assignment,
                      const RingContext& target);
/// Target ring taken from the assigned images (or p's ring if none).
Polynomial substitute(const Polynomial& p,
                      const std::map<std::string, Polynomial>& assignment);

/// Re-express p in another ring by matching variable names.
Polynomial changeRing(const Polynomial& p, const RingContext& target);

/// Maximum over terms of the weight-exponent dot product; the zero
/// polynomial has no degree (DomainError).
int weightedDegree(const Polynomial& p);
bool isWeightedHomogeneous(const Polynomial& p);
Polynomial homogenize(const Polynomial& p, std::string_view hVar);

std::pair<Monomial, Rational> leadingTerm(const Polynomial& p,
                                          const TermOrder& ord);
Polynomial derivative(const Polynomial& p, std::size_t var);
Rational evaluate(const Polynomial& p, std::span<const Rational> point);

/// Coefficients of p as a polynomial in `var`: entry k is the coefficient of
/// var^k (as a polynomial not involving var).
std::vector<Polynomial> coefficientsIn(const Polynomial& p, std::size_t var);

}  // namespace affimg
