#include "affimg/ideal.hpp"

#include <list>
#include <mutex>
#include <sstream>

#include "affimg/errors.hpp"

namespace affimg {

struct Ideal::Cache {
  std::mutex mutex;
  std::list<std::pair<TermOrder, std::vector<Polynomial>>> bases;

  const std::vector<Polynomial>* find(const TermOrder& ord) {
    std::lock_guard lock(mutex);
    for (auto& [o, b] : bases)
      if (o == ord) return &b;
    return nullptr;
  }
  const std::vector<Polynomial>& store(const TermOrder& ord,
                                       std::vector<Polynomial> basis) {
    std::lock_guard lock(mutex);
    for (auto& [o, b] : bases)
      if (o == ord) return b;
    bases.emplace_back(ord, std::move(basis));
    return bases.back().second;
  }
};

Ideal::Ideal() : cache_(std::make_shared<Cache>()) {}

Ideal::Ideal(RingContext ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (Polynomial& g : generators) {
    if (!(g.ring() == ring_)) throw DomainError("ideal: generator in a different ring");
    if (!g.isZero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(const RingContext& ring) {
  return Ideal(ring, {Polynomial::constant(ring, 1)});
}

Ideal Ideal::fromGroebnerBasis(RingContext ring, std::vector<Polynomial> basis,
                               const TermOrder& ord) {
  Ideal I(std::move(ring), basis);
  I.cache_->store(ord, std::move(basis));
  return I;
}

const std::vector<Polynomial>& Ideal::groebnerBasis(const TermOrder& ord) const {
  if (const auto* b = cache_->find(ord)) return *b;
  return cache_->store(ord, detail::computeGroebnerBasis(ring_, gens_, ord));
}

std::pair<TermOrder, const std::vector<Polynomial>*> Ideal::someGroebnerBasisWithOrder()
    const {
  {
    std::lock_guard lock(cache_->mutex);
    for (auto& [o, b] : cache_->bases)
      if (o == TermOrder::grevlex()) return {o, &b};
    if (!cache_->bases.empty())
      return {cache_->bases.front().first, &cache_->bases.front().second};
  }
  return {TermOrder::grevlex(), &groebnerBasis(TermOrder::grevlex())};
}

const std::vector<Polynomial>& Ideal::someGroebnerBasis() const {
  return *someGroebnerBasisWithOrder().second;
}

Ideal Ideal::operator+(const Ideal& other) const {
  if (!(ring_ == other.ring_)) throw DomainError("ideal sum: different rings");
  std::vector<Polynomial> g = gens_;
  g.insert(g.end(), other.gens_.begin(), other.gens_.end());
  return Ideal(ring_, std::move(g));
}

Ideal Ideal::operator+(const Polynomial& extra) const {
  std::vector<Polynomial> g = gens_;
  g.push_back(extra);
  return Ideal(ring_, std::move(g));
}

Ideal Ideal::inRing(const RingContext& target) const {
  if (target == ring_) return *this;
  std::vector<Polynomial> g;
  g.reserve(gens_.size());
  for (const Polynomial& p : gens_) g.push_back(changeRing(p, target));
  Ideal out(target, std::move(g));
  // Same variables with other weights: the term orders do not see weights,
  // so cached bases stay valid.
  if (target.names() == ring_.names()) {
    std::lock_guard lock(cache_->mutex);
    for (auto& [o, b] : cache_->bases) {
      std::vector<Polynomial> moved;
      moved.reserve(b.size());
      for (const Polynomial& p : b) moved.push_back(changeRing(p, target));
      out.cache_->bases.emplace_back(o, std::move(moved));
    }
  }
  return out;
}

std::string Ideal::toString() const {
  std::ostringstream os;
  os << "(";
  if (gens_.empty()) os << "0";
  for (std::size_t i = 0; i < gens_.size(); ++i)
    os << (i ? ", " : "") << gens_[i].toString();
  os << ")";
  return os.str();
}

Polynomial normalForm(const Polynomial& p, std::span<const Polynomial> basis,
                      const TermOrder& ord) {
  std::vector<std::pair<Monomial, Rational>> leads;
  std::vector<const Polynomial*> divisors;
  for (const Polynomial& b : basis) {
    if (!(b.ring() == p.ring())) throw DomainError("normalForm: ring mismatch");
    if (b.isZero()) continue;
    leads.push_back(leadingTerm(b, ord));
    divisors.push_back(&b);
  }
  Polynomial rest = p;
  std::vector<Term> remainder;
  while (!rest.isZero()) {
    auto [m, c] = leadingTerm(rest, ord);
    bool reduced = false;
    for (std::size_t k = 0; k < leads.size(); ++k) {
      if (!leads[k].first.divides(m)) continue;
      Polynomial factor =
          Polynomial::monomial(p.ring(), m / leads[k].first, c / leads[k].second);
      rest -= factor * *divisors[k];
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.push_back({m, c});
      rest -= Polynomial::monomial(p.ring(), m, c);
    }
  }
  return Polynomial::fromTerms(p.ring(), std::move(remainder));
}

Polynomial sPolynomial(const Polynomial& f, const Polynomial& g, const TermOrder& ord) {
  auto [mf, cf] = leadingTerm(f, ord);
  auto [mg, cg] = leadingTerm(g, ord);
  Monomial l = lcm(mf, mg);
  return Polynomial::monomial(f.ring(), l / mf, 1 / cf) * f -
         Polynomial::monomial(g.ring(), l / mg, 1 / cg) * g;
}

std::vector<Polynomial> buchberger(const Ideal& I, const TermOrder& ord) {
  return I.groebnerBasis(ord);
}

namespace {

bool isUnitBasis(const std::vector<Polynomial>& gb) {
  return gb.size() == 1 && gb[0].isConstant();
}

}  // namespace

bool containsOne(const Ideal& I) {
  for (const Polynomial& g : I.generators())
    if (g.isConstant()) return true;
  return isUnitBasis(I.someGroebnerBasis());
}

bool isZeroIdeal(const Ideal& I) { return I.hasNoGenerators(); }

bool idealMembership(const Polynomial& p, const Ideal& I) {
  if (!(p.ring() == I.ring())) throw DomainError("idealMembership: ring mismatch");
  if (p.isZero()) return true;
  auto [ord, gb] = I.someGroebnerBasisWithOrder();
  return normalForm(p, *gb, ord).isZero();
}

bool sameIdeal(const Ideal& I, const Ideal& J) {
  if (!(I.ring() == J.ring())) return false;
  return I.groebnerBasis() == J.groebnerBasis();
}

Ideal eliminate(const Ideal& I, std::span<const std::string> vars) {
  const RingContext& ring = I.ring();
  std::uint32_t mask = 0;
  for (const auto& v : vars) mask |= 1u << ring.index(v);
  RingContext target = ring.without(vars);
  if (mask == 0) return I;
  const TermOrder ord = TermOrder::blockIndices(mask, TermOrder::grevlex());
  std::vector<Polynomial> kept;
  for (const Polynomial& g : I.groebnerBasis(ord))
    if ((g.support() & mask) == 0) kept.push_back(changeRing(g, target));
  // The block order restricted to the survivors is grevlex, so they are
  // already the reduced grevlex basis of the elimination ideal.
  return Ideal::fromGroebnerBasis(std::move(target), std::move(kept),
                                  TermOrder::grevlex());
}

namespace {

struct Extended {
  RingContext ring;
  std::string t;
};

Extended withFreshVariable(const RingContext& ring, std::string_view stem) {
  std::string t = ring.freshName(stem);
  std::vector<std::string> names{t};
  return {ring.appended(names), t};
}

}  // namespace

Ideal saturate(const Ideal& I, const Polynomial& f) {
  if (f.isZero()) throw DomainError("saturate: saturating by the zero polynomial");
  if (!(f.ring() == I.ring())) throw DomainError("saturate: ring mismatch");
  if (f.isConstant()) return I;
  auto [ring, t] = withFreshVariable(I.ring(), "t");
  std::vector<Polynomial> gens;
  for (const Polynomial& g : I.generators()) gens.push_back(changeRing(g, ring));
  gens.push_back(Polynomial::variable(ring, t) * changeRing(f, ring) -
                 Polynomial::constant(ring, 1));
  std::vector<std::string> drop{t};
  return eliminate(Ideal(ring, std::move(gens)), drop);
}

Ideal saturateByVariable(const Ideal& I, std::size_t var) {
  const RingContext& ring = I.ring();
  bool homogeneous = ring.weight(var) > 0;
  for (const Polynomial& g : I.generators())
    if (!homogeneous || !isWeightedHomogeneous(g)) homogeneous = false;
  if (!homogeneous) return saturate(I, Polynomial::variable(ring, var));
  const TermOrder ord = TermOrder::weightedReverse(ring, var);
  std::vector<Polynomial> out;
  for (const Polynomial& g : I.groebnerBasis(ord)) {
    unsigned k = ~0u;
    for (const Term& t : g.terms()) k = std::min(k, t.monomial[var]);
    if (k == 0) {
      out.push_back(g);
      continue;
    }
    Monomial divisor(static_cast<unsigned>(ring.size()));
    divisor.set(var, k);
    std::vector<Term> terms;
    for (const Term& t : g.terms()) terms.push_back({t.monomial / divisor, t.coefficient});
    out.push_back(Polynomial::fromTerms(ring, std::move(terms)));
  }
  // Dividing by powers of var keeps a basis, though not necessarily reduced.
  return Ideal(ring, std::move(out));
}

Ideal intersectIdeals(const Ideal& I, const Ideal& J) {
  if (!(I.ring() == J.ring())) throw DomainError("intersectIdeals: ring mismatch");
  if (isZeroIdeal(I) || isZeroIdeal(J)) return Ideal(I.ring());
  if (containsOne(I)) return J;
  if (containsOne(J)) return I;
  auto [ring, t] = withFreshVariable(I.ring(), "t");
  const Polynomial tv = Polynomial::variable(ring, t);
  const Polynomial one = Polynomial::constant(ring, 1);
  std::vector<Polynomial> gens;
  for (const Polynomial& g : I.generators()) gens.push_back(tv * changeRing(g, ring));
  for (const Polynomial& g : J.generators())
    gens.push_back((one - tv) * changeRing(g, ring));
  std::vector<std::string> drop{t};
  return eliminate(Ideal(ring, std::move(gens)), drop);
}

bool radicalMembership(const Polynomial& g, const Ideal& I) {
  if (!(g.ring() == I.ring())) throw DomainError("radicalMembership: ring mismatch");
  if (g.isZero()) return true;
  if (idealMembership(g, I)) return true;
  auto [ring, t] = withFreshVariable(I.ring(), "t");
  std::vector<Polynomial> gens;
  for (const Polynomial& p : I.generators()) gens.push_back(changeRing(p, ring));
  gens.push_back(Polynomial::variable(ring, t) * changeRing(g, ring) -
                 Polynomial::constant(ring, 1));
  return containsOne(Ideal(ring, std::move(gens)));
}

Ideal radicalOfPrincipal(const Ideal& I) {
  const auto& gb = I.groebnerBasis();
  if (gb.empty()) return Ideal(I.ring());
  if (isUnitBasis(gb)) return Ideal::unit(I.ring());
  if (gb.size() > 1) throw UnsupportedError("radical of a non-principal ideal");
  return Ideal(I.ring(), {squarefreePart(gb[0])});
}

int dimensionOfIdeal(const Ideal& I) {
  const std::size_t n = I.ring().size();
  if (isZeroIdeal(I)) return static_cast<int>(n);
  auto [ord, gb] = I.someGroebnerBasisWithOrder();
  if (isUnitBasis(*gb)) return -1;
  std::vector<std::uint32_t> leads;
  for (const Polynomial& g : *gb) leads.push_back(leadingTerm(g, ord).first.support());
  auto independent = [&](std::uint32_t s) {
    for (std::uint32_t l : leads)
      if ((l & ~s) == 0) return false;
    return true;
  };
  int best = 0;
  auto dfs = [&](auto&& self, std::size_t index, std::uint32_t s, int size) -> void {
    if (size + static_cast<int>(n - index) <= best) return;
    if (index == n) {
      best = size;
      return;
    }
    const std::uint32_t with = s | (1u << index);
    if (independent(with)) self(self, index + 1, with, size + 1);
    self(self, index + 1, s, size);
  };
  dfs(dfs, 0, 0, 0);
  return best;
}

bool idealEqualityUpToRadical(const Ideal& I, const Ideal& J) {
  if (!(I.ring() == J.ring())) return false;
  for (const Polynomial& g : I.generators())
    if (!radicalMembership(g, J)) return false;
  for (const Polynomial& g : J.generators())
    if (!radicalMembership(g, I)) return false;
  return true;
}

}  // namespace affimg
