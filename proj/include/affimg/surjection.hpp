#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "affimg/ideal.hpp"
#include "affimg/polynomial_map.hpp"

namespace affimg {

/// Z = V(w_1, q_1, ..., q_m) in A^n, with the q_j free of w_1.
///
/// Zero q_j are dropped; a nonzero constant q_j, or no q_j at all, is
/// rejected with DomainError.
class TargetVariety {
 public:
  TargetVariety(RingContext ring, std::vector<Polynomial> q);

  const RingContext& ring() const noexcept { return ring_; }
  std::size_t n() const noexcept { return ring_.size(); }
  std::size_t m() const noexcept { return q_.size(); }
  const std::vector<Polynomial>& q() const noexcept { return q_; }
  const std::vector<unsigned>& degrees() const noexcept { return degrees_; }
  unsigned maxDegree() const noexcept { return dMax_; }
  /// (w_1, q_1, ..., q_m).
  Ideal ideal() const;

 private:
  RingContext ring_;
  std::vector<Polynomial> q_;
  std::vector<unsigned> degrees_;
  unsigned dMax_ = 0;
};

/// p_k = d^k + ... + d + 1 for k = 0..n-1 (so p_k = k + 1 when d = 1).
struct ExponentSchedule {
  std::vector<unsigned long> p;

  static ExponentSchedule forTarget(const TargetVariety& Z);
  static ExponentSchedule compute(unsigned d, std::size_t n);
};

/// Order (a_1..a_{n-1}, c_1..c_m, b_1..b_{n-1}) unless names are given.
std::vector<std::string> psiDomainNames(const TargetVariety& Z);
/// (a_1..a_{n-1}, c) for the restricted maps.
std::vector<std::string> restrictedDomainNames(const TargetVariety& Z);

/// psi(a, c, b) = (P, a_1 + b_1 P, ..., a_{n-1} + b_{n-1} P) with
/// P = 1 + sum_j c_j q_j(a).
PolynomialMap buildPsi(const TargetVariety& Z, std::vector<std::string> names = {});

/// psi restricted to c_1 = c, c_j = c^{(j-1)(1+p_{n-1})}, b_i = c^{p_{i-1}}.
PolynomialMap restrictTheoremMain(const TargetVariety& Z,
                                  std::vector<std::string> names = {});

/// True when every q_j has a nonzero w_n^{d_j} coefficient.
bool hasPurePowers(const TargetVariety& Z);
/// (1 + sum_j c^{(j-1)(d+1)+1} q_j(a), a_1, ..., a_{n-2}, a_{n-1} + c w_1).
/// DomainError when hasPurePowers fails.
PolynomialMap restrictPurePowers(const TargetVariety& Z,
                                 std::vector<std::string> names = {});

struct LinearChange {
  PolynomialMap tau;
  PolynomialMap tauInverse;
  TargetVariety transformed;
  std::vector<long> shifts;  // A_2..A_{n-1}
};

/// Shear w_i -> w_i + A_i w_n (1 < i < n) bringing every q_j into pure-power
/// form. transformed = tau(Z); the first attempt uses A = 0.
LinearChange genericLinearChange(const TargetVariety& Z, std::uint64_t seed,
                                 unsigned retries = 32);

/// One-parameter additive action phi(t, w) on A^n.
struct ParametricAction {
  std::string parameter;
  RingContext codomain;
  RingContext ring;                 // codomain variables, then the parameter
  std::vector<Polynomial> formula;  // one coordinate per codomain variable
  Ideal fixedLocus;                 // in the codomain ring

  static ParametricAction make(const RingContext& codomain, std::string parameter,
                               std::vector<Polynomial> formula,
                               std::optional<Ideal> fixedLocus = std::nullopt);

  /// phi(0, w) = w.
  bool satisfiesIdentity() const;
  /// phi(s, phi(t, w)) = phi(s + t, w).
  bool satisfiesGroupLaw() const;
  /// Every phi_i(t, w) - w_i lies in the fixed-locus ideal.
  bool fixesLocus() const;
};

/// Shear along coordinate i (0-based) by a minimal-degree polynomial in the
/// other coordinates vanishing on the projection of V(ZIdeal).
ParametricAction winkelmannGenerator(const Ideal& ZIdeal, std::size_t i,
                                     std::string parameter = "t");

/// (a_1..a_N) -> G_N(a_N, .) o ... o G_1(a_1, .)(p). Parameters are named by
/// `names` when given, else by the actions' own parameter names (duplicates
/// renamed).
PolynomialMap composeActions(const std::vector<ParametricAction>& actions,
                             std::span<const Rational> p,
                             const RingContext& codomain,
                             std::vector<std::string> names = {});

struct Restriction {
  std::map<std::string, Polynomial> substitution;
};

PolynomialMap restrictToSubvariety(const PolynomialMap& F, const Restriction& r);

/// tauInverse o F after checking tau o tauInverse = id.
PolynomialMap conjugateByAutomorphism(const PolynomialMap& F, const PolynomialMap& tau,
                                      const PolynomialMap& tauInverse);

}  // namespace affimg
