#include "affimg/surjection.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "affimg/errors.hpp"

namespace affimg {

namespace {

std::vector<std::string> numbered(const std::string& stem, std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

void requireNames(const std::vector<std::string>& names, std::size_t count,
                  const RingContext& codomain) {
  if (names.size() != count)
    throw DomainError("expected " + std::to_string(count) + " domain variable names");
  for (const std::string& n : names)
    if (codomain.contains(n))
      throw DomainError("domain variable '" + n + "' clashes with the codomain");
}

// q_j with w_{i+1} replaced by the domain variable a_i.
std::vector<Polynomial> qInA(const TargetVariety& Z, const RingContext& D,
                             const std::vector<std::string>& a) {
  std::map<std::string, Polynomial> sub;
  for (std::size_t i = 1; i < Z.n(); ++i)
    sub.emplace(Z.ring().name(i), Polynomial::variable(D, a[i - 1]));
  sub.emplace(Z.ring().name(0), Polynomial(D));
  std::vector<Polynomial> out;
  for (const Polynomial& q : Z.q()) out.push_back(substitute(q, sub, D));
  return out;
}

Monomial power(const RingContext& ring, std::size_t var, unsigned long e) {
  Monomial m(static_cast<unsigned>(ring.size()));
  m.set(var, static_cast<unsigned>(e));
  return m;
}

}  // namespace

TargetVariety::TargetVariety(RingContext ring, std::vector<Polynomial> q)
    : ring_(std::move(ring)) {
  if (ring_.size() < 2) throw DomainError("target variety needs n >= 2");
  for (Polynomial& p : q) {
    if (!(p.ring() == ring_)) throw DomainError("target generator in a different ring");
    if (p.isZero()) continue;
    if (p.isConstant()) throw DomainError("constant generator makes the target empty");
    if (p.involves(0))
      throw DomainError("target generators must not involve " + ring_.name(0));
    degrees_.push_back(p.totalDegree());
    dMax_ = std::max(dMax_, degrees_.back());
    q_.push_back(std::move(p));
  }
  if (q_.empty()) throw DomainError("target variety needs at least one nonzero generator");
}

Ideal TargetVariety::ideal() const {
  std::vector<Polynomial> gens{Polynomial::variable(ring_, 0)};
  gens.insert(gens.end(), q_.begin(), q_.end());
  return Ideal(ring_, std::move(gens));
}

ExponentSchedule ExponentSchedule::compute(unsigned d, std::size_t n) {
  ExponentSchedule s;
  unsigned long p = 1;
  for (std::size_t k = 0; k < n; ++k) {
    s.p.push_back(p);
    p = p * d + 1;
  }
  return s;
}

ExponentSchedule ExponentSchedule::forTarget(const TargetVariety& Z) {
  return compute(Z.maxDegree(), Z.n());
}

std::vector<std::string> psiDomainNames(const TargetVariety& Z) {
  std::vector<std::string> names = numbered("a", Z.n() - 1);
  for (auto& c : numbered("c", Z.m())) names.push_back(c);
  for (auto& b : numbered("b", Z.n() - 1)) names.push_back(b);
  return names;
}

std::vector<std::string> restrictedDomainNames(const TargetVariety& Z) {
  std::vector<std::string> names = numbered("a", Z.n() - 1);
  names.push_back("c");
  return names;
}

PolynomialMap buildPsi(const TargetVariety& Z, std::vector<std::string> names) {
  const std::size_t n = Z.n(), m = Z.m();
  if (names.empty()) names = psiDomainNames(Z);
  requireNames(names, m + 2 * n - 2, Z.ring());
  const RingContext D(names);
  std::vector<std::string> a(names.begin(), names.begin() + (n - 1));
  const auto q = qInA(Z, D, a);
  Polynomial P = Polynomial::constant(D, 1);
  for (std::size_t j = 0; j < m; ++j) P += Polynomial::variable(D, n - 1 + j) * q[j];
  std::vector<Polynomial> coords{P};
  for (std::size_t i = 0; i + 1 < n; ++i)
    coords.push_back(Polynomial::variable(D, i) +
                     Polynomial::variable(D, n - 1 + m + i) * P);
  return PolynomialMap(D, Z.ring(), std::move(coords));
}

PolynomialMap restrictTheoremMain(const TargetVariety& Z, std::vector<std::string> names) {
  const std::size_t n = Z.n(), m = Z.m();
  if (names.empty()) names = restrictedDomainNames(Z);
  requireNames(names, n, Z.ring());
  const RingContext D(names);
  const auto p = ExponentSchedule::forTarget(Z).p;
  const auto q = qInA(Z, D, names);
  const std::size_t c = n - 1;
  Polynomial P = Polynomial::constant(D, 1);
  for (std::size_t j = 0; j < m; ++j) {
    const unsigned long e = j == 0 ? 1 : j * (1 + p[n - 1]);
    P += Polynomial::monomial(D, power(D, c, e)) * q[j];
  }
  std::vector<Polynomial> coords{P};
  for (std::size_t i = 0; i + 1 < n; ++i)
    coords.push_back(Polynomial::variable(D, i) +
                     Polynomial::monomial(D, power(D, c, p[i])) * P);
  return PolynomialMap(D, Z.ring(), std::move(coords));
}

bool hasPurePowers(const TargetVariety& Z) {
  for (std::size_t j = 0; j < Z.m(); ++j)
    if (Z.q()[j].coefficientOf(power(Z.ring(), Z.n() - 1, Z.degrees()[j])) == 0)
      return false;
  return true;
}

PolynomialMap restrictPurePowers(const TargetVariety& Z, std::vector<std::string> names) {
  if (!hasPurePowers(Z))
    throw DomainError("a target generator lacks a pure power of " +
                      Z.ring().name(Z.n() - 1) + " in top degree; apply a generic linear change");
  const std::size_t n = Z.n(), m = Z.m();
  const unsigned d = Z.maxDegree();
  if (names.empty()) names = restrictedDomainNames(Z);
  requireNames(names, n, Z.ring());
  const RingContext D(names);
  const auto q = qInA(Z, D, names);
  const std::size_t c = n - 1;
  Polynomial P = Polynomial::constant(D, 1);
  for (std::size_t j = 0; j < m; ++j)
    P += Polynomial::monomial(D, power(D, c, j * (d + 1) + 1)) * q[j];
  std::vector<Polynomial> coords{P};
  for (std::size_t i = 0; i + 2 < n; ++i) coords.push_back(Polynomial::variable(D, i));
  coords.push_back(Polynomial::variable(D, n - 2) + Polynomial::variable(D, c) * P);
  return PolynomialMap(D, Z.ring(), std::move(coords));
}

LinearChange genericLinearChange(const TargetVariety& Z, std::uint64_t seed,
                                 unsigned retries) {
  const RingContext& R = Z.ring();
  const std::size_t n = Z.n();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-10, 10);
  const Polynomial wn = Polynomial::variable(R, n - 1);
  for (unsigned attempt = 0; attempt < retries; ++attempt) {
    std::vector<long> A(n >= 2 ? n - 2 : 0, 0);
    if (attempt > 0)
      for (long& x : A) x = dist(rng);
    std::map<std::string, Polynomial> forward, backward;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const Polynomial wi = Polynomial::variable(R, i);
      forward.emplace(R.name(i), wi + Rational(A[i - 1]) * wn);
      backward.emplace(R.name(i), wi - Rational(A[i - 1]) * wn);
    }
    std::vector<Polynomial> q;
    for (const Polynomial& g : Z.q()) q.push_back(substitute(g, forward, R));
    TargetVariety T(R, std::move(q));
    if (!hasPurePowers(T)) continue;
    std::vector<Polynomial> tau, inv;
    for (std::size_t i = 0; i < n; ++i) {
      const Polynomial wi = Polynomial::variable(R, i);
      tau.push_back(backward.count(R.name(i)) ? backward.at(R.name(i)) : wi);
      inv.push_back(forward.count(R.name(i)) ? forward.at(R.name(i)) : wi);
    }
    return {PolynomialMap(R, R, std::move(tau)), PolynomialMap(R, R, std::move(inv)),
            std::move(T), std::move(A)};
  }
  throw GenericityError("no linear change produced pure powers; try another seed");
}

ParametricAction ParametricAction::make(const RingContext& codomain, std::string parameter,
                                        std::vector<Polynomial> formula,
                                        std::optional<Ideal> fixedLocus) {
  if (codomain.contains(parameter))
    throw DomainError("action parameter '" + parameter + "' clashes with a coordinate");
  if (formula.size() != codomain.size())
    throw DomainError("action needs one formula per coordinate");
  ParametricAction act;
  act.parameter = parameter;
  act.codomain = codomain;
  std::vector<std::string> extra{parameter};
  act.ring = codomain.appended(extra);
  for (Polynomial& f : formula) act.formula.push_back(changeRing(f, act.ring));
  if (fixedLocus) {
    act.fixedLocus = fixedLocus->inRing(codomain);
  } else {
    std::vector<Polynomial> gens;
    const std::size_t t = act.ring.index(parameter);
    for (std::size_t i = 0; i < codomain.size(); ++i) {
      const Polynomial shift = act.formula[i] - Polynomial::variable(act.ring, i);
      for (const Polynomial& k : coefficientsIn(shift, t))
        if (!k.isZero()) gens.push_back(changeRing(k, codomain));
    }
    act.fixedLocus = Ideal(codomain, std::move(gens));
  }
  return act;
}

bool ParametricAction::satisfiesIdentity() const {
  std::map<std::string, Polynomial> sub{{parameter, Polynomial(codomain)}};
  for (std::size_t i = 0; i < formula.size(); ++i)
    if (!(substitute(formula[i], sub, codomain) == Polynomial::variable(codomain, i)))
      return false;
  return true;
}

bool ParametricAction::satisfiesGroupLaw() const {
  const std::string s = ring.freshName("s");
  std::vector<std::string> extra{s};
  const RingContext R = ring.appended(extra);
  const Polynomial sv = Polynomial::variable(R, s);
  const Polynomial tv = Polynomial::variable(R, parameter);
  std::vector<Polynomial> inner;
  for (const Polynomial& f : formula) inner.push_back(changeRing(f, R));
  std::map<std::string, Polynomial> outerSub{{parameter, sv}};
  for (std::size_t i = 0; i < codomain.size(); ++i) outerSub.emplace(codomain.name(i), inner[i]);
  std::map<std::string, Polynomial> sumSub{{parameter, sv + tv}};
  for (const Polynomial& f : formula)
    if (!(substitute(f, outerSub, R) == substitute(f, sumSub, R))) return false;
  return true;
}

bool ParametricAction::fixesLocus() const {
  const Ideal locus = fixedLocus.inRing(ring);
  for (std::size_t i = 0; i < formula.size(); ++i)
    if (!idealMembership(formula[i] - Polynomial::variable(ring, i), locus)) return false;
  return true;
}

ParametricAction winkelmannGenerator(const Ideal& ZIdeal, std::size_t i,
                                     std::string parameter) {
  const RingContext& R = ZIdeal.ring();
  if (i >= R.size()) throw DomainError("winkelmann generator: coordinate out of range");
  if (containsOne(ZIdeal)) throw DomainError("winkelmann generator: empty target");
  std::vector<std::string> drop{R.name(i)};
  const Ideal elim = eliminate(ZIdeal, drop);
  const auto& gb = elim.groebnerBasis();
  if (gb.empty())
    throw DomainError("projection along " + R.name(i) +
                      " is dominant; no polynomial vanishes on it");
  const Polynomial* best = &gb[0];
  for (const Polynomial& g : gb) {
    const unsigned dg = g.totalDegree(), db = best->totalDegree();
    if (dg < db || (dg == db && TermOrder::grevlex().greater(
                                    leadingTerm(*best, TermOrder::grevlex()).first,
                                    leadingTerm(g, TermOrder::grevlex()).first)))
      best = &g;
  }
  const Polynomial f = changeRing(best->monic(TermOrder::lex()), R);
  if (R.contains(parameter)) parameter = R.freshName(parameter);
  std::vector<std::string> extra{parameter};
  const RingContext AR = R.appended(extra);
  std::vector<Polynomial> formula;
  for (std::size_t k = 0; k < R.size(); ++k) {
    Polynomial wk = Polynomial::variable(AR, k);
    if (k == i) wk += Polynomial::variable(AR, parameter) * changeRing(f, AR);
    formula.push_back(std::move(wk));
  }
  return ParametricAction::make(R, parameter, std::move(formula), Ideal(R, {f}));
}

PolynomialMap composeActions(const std::vector<ParametricAction>& actions,
                             std::span<const Rational> p, const RingContext& codomain,
                             std::vector<std::string> names) {
  if (p.size() != codomain.size()) throw DomainError("base point has the wrong arity");
  if (names.empty()) {
    std::set<std::string> used(codomain.names().begin(), codomain.names().end());
    for (const ParametricAction& act : actions) {
      std::string name = act.parameter;
      for (int k = 1; used.count(name); ++k) name = act.parameter + std::to_string(k);
      used.insert(name);
      names.push_back(name);
    }
  }
  if (names.size() != actions.size())
    throw DomainError("one parameter name per action is required");
  for (const std::string& n : names)
    if (codomain.contains(n))
      throw DomainError("parameter '" + n + "' clashes with a coordinate");
  const RingContext D(names);
  std::vector<Polynomial> point;
  for (const Rational& v : p) point.push_back(Polynomial::constant(D, v));
  for (std::size_t k = 0; k < actions.size(); ++k) {
    const ParametricAction& act = actions[k];
    if (!(act.codomain == codomain)) throw DomainError("actions act on different spaces");
    std::map<std::string, Polynomial> sub{{act.parameter, Polynomial::variable(D, k)}};
    for (std::size_t i = 0; i < codomain.size(); ++i) sub.emplace(codomain.name(i), point[i]);
    std::vector<Polynomial> next;
    for (const Polynomial& f : act.formula) next.push_back(substitute(f, sub, D));
    point = std::move(next);
  }
  return PolynomialMap(D, codomain, std::move(point));
}

PolynomialMap restrictToSubvariety(const PolynomialMap& F, const Restriction& r) {
  if (r.substitution.empty()) return F;
  const RingContext target = r.substitution.begin()->second.ring();
  for (const auto& [name, image] : r.substitution) {
    if (!F.domainRing().contains(name))
      throw DomainError("restriction of '" + name + "', which is not a domain variable");
    if (!(image.ring() == target)) throw DomainError("restriction images in different rings");
  }
  for (const std::string& n : target.names())
    if (F.codomainRing().contains(n))
      throw DomainError("restriction introduces codomain variable '" + n + "'");
  std::vector<Polynomial> coords;
  for (const Polynomial& c : F.coordinates())
    coords.push_back(substitute(c, r.substitution, target));
  return PolynomialMap(target, F.codomainRing(), std::move(coords));
}

PolynomialMap conjugateByAutomorphism(const PolynomialMap& F, const PolynomialMap& tau,
                                      const PolynomialMap& tauInverse) {
  if (!(compose(tau, tauInverse) == PolynomialMap::identity(tauInverse.domainRing())))
    throw DomainError("conjugation: tau o tauInverse is not the identity");
  if (!(F.codomainRing() == tauInverse.domainRing()))
    throw DomainError("conjugation: map codomain does not match the automorphism");
  return compose(tauInverse, F);
}

}  // namespace affimg
