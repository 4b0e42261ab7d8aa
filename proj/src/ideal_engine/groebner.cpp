// Buchberger's algorithm over Q with fraction-free integer arithmetic.
//
// Polynomials are kept primitive with integer coefficients while the basis
// is built; the final reduced basis is converted back to monic rational
// polynomials. Pair bookkeeping follows Gebauer-Moeller, which applies
// Buchberger's coprime and chain criteria.

#include <algorithm>
#include <numeric>

#include "affimg/errors.hpp"
#include "affimg/ideal.hpp"

namespace affimg::detail {

namespace {

struct ZTerm {
  Monomial m;
  mpz_class c;
};
using ZPoly = std::vector<ZTerm>;

struct Element {
  ZPoly poly;
  Monomial lm;
  std::uint32_t lmSupport = 0;
  unsigned sugar = 0;
  bool active = true;
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  unsigned sugar;
};

void makePrimitive(ZPoly& p) {
  if (p.empty()) return;
  mpz_class g = 0;
  for (const ZTerm& t : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(p.front().c) < 0) g = -g;
  if (g != 1)
    for (ZTerm& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
}

// a * (ma * p[ps..]) - b * (mb * q[qs..])
ZPoly combine(const mpz_class& a, const Monomial& ma, const ZPoly& p, std::size_t ps,
              const mpz_class& b, const Monomial& mb, const ZPoly& q, std::size_t qs,
              const TermOrder& ord) {
  ZPoly r;
  r.reserve((p.size() - ps) + (q.size() - qs));
  const bool shiftP = !ma.isOne();
  const bool shiftQ = !mb.isOne();
  const bool unitA = a == 1;
  std::size_t i = ps, j = qs;
  Monomial pm, qm;
  if (i < p.size()) pm = shiftP ? ma * p[i].m : p[i].m;
  if (j < q.size()) qm = shiftQ ? mb * q[j].m : q[j].m;
  auto advanceP = [&] {
    if (++i < p.size()) pm = shiftP ? ma * p[i].m : p[i].m;
  };
  auto advanceQ = [&] {
    if (++j < q.size()) qm = shiftQ ? mb * q[j].m : q[j].m;
  };
  while (i < p.size() || j < q.size()) {
    int cmp;
    if (j == q.size())
      cmp = 1;
    else if (i == p.size())
      cmp = -1;
    else
      cmp = ord.compare(pm, qm);
    if (cmp > 0) {
      if (unitA)
        r.push_back({pm, p[i].c});
      else
        r.push_back({pm, a * p[i].c});
      advanceP();
    } else if (cmp < 0) {
      r.push_back({qm, -b * q[j].c});
      advanceQ();
    } else {
      mpz_class c = unitA ? mpz_class(p[i].c) : mpz_class(a * p[i].c);
      mpz_submul(c.get_mpz_t(), b.get_mpz_t(), q[j].c.get_mpz_t());
      if (c != 0) r.push_back({pm, std::move(c)});
      advanceP();
      advanceQ();
    }
  }
  return r;
}

class Engine {
 public:
  Engine(const TermOrder& ord, GroebnerStats* stats) : ord_(ord), stats_(stats) {}

  // Returns reduced basis polynomials (primitive, integer) or {1} for the
  // unit ideal.
  std::vector<ZPoly> run(std::vector<ZPoly> input);

 private:
  const Element* findReducer(const Monomial& m, std::size_t exclude) const;
  ZPoly reduce(ZPoly p, std::size_t keep, unsigned& sugar, std::size_t exclude,
               bool full) const;
  ZPoly sPolynomial(const Pair& pr) const;
  void insert(ZPoly p, unsigned sugar);
  std::size_t selectPair() const;

  const TermOrder& ord_;
  GroebnerStats* stats_;
  std::vector<Element> basis_;
  std::vector<Pair> pairs_;
};

const Element* Engine::findReducer(const Monomial& m, std::size_t exclude) const {
  const std::uint32_t ms = m.support();
  const Element* best = nullptr;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Element& e = basis_[k];
    if (!e.active || k == exclude) continue;
    if ((e.lmSupport & ~ms) != 0) continue;
    if (!e.lm.divides(m)) continue;
    if (!best || e.poly.size() < best->poly.size()) best = &e;
  }
  return best;
}

// Reduction of p, leaving the first `keep` terms untouched. Without `full`
// it stops at the first irreducible term (top reduction).
ZPoly Engine::reduce(ZPoly p, std::size_t keep, unsigned& sugar, std::size_t exclude,
                     bool full) const {
  ZPoly done(std::make_move_iterator(p.begin()),
             std::make_move_iterator(p.begin() + static_cast<std::ptrdiff_t>(keep)));
  std::size_t pos = keep;
  unsigned steps = 0;
  const Monomial one(p.empty() ? 0 : p.front().m.arity());
  while (pos < p.size()) {
    const Element* g = findReducer(p[pos].m, exclude);
    if (!g) {
      if (!full) {
        makePrimitive(p);
        return p;
      }
      done.push_back(std::move(p[pos]));
      ++pos;
      continue;
    }
    mpz_class gg;
    mpz_gcd(gg.get_mpz_t(), g->poly.front().c.get_mpz_t(), p[pos].c.get_mpz_t());
    mpz_class a = g->poly.front().c / gg;
    mpz_class b = p[pos].c / gg;
    if (sgn(a) < 0) {
      a = -a;
      b = -b;
    }
    Monomial m = p[pos].m / g->lm;
    sugar = std::max(sugar, m.degree() + g->sugar);
    p = combine(a, one, p, pos + 1, b, m, g->poly, 1, ord_);
    pos = 0;
    if (a != 1)
      for (ZTerm& t : done) t.c *= a;
    if (++steps % 16 == 0) {
      // keep coefficient growth in check
      mpz_class c = 0;
      for (const ZTerm& t : done) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.c.get_mpz_t());
      for (const ZTerm& t : p) {
        if (c == 1) break;
        mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), t.c.get_mpz_t());
      }
      if (c > 1) {
        for (ZTerm& t : done) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
        for (ZTerm& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), c.get_mpz_t());
      }
    }
  }
  makePrimitive(done);
  return done;
}

ZPoly Engine::sPolynomial(const Pair& pr) const {
  const Element& f = basis_[pr.i];
  const Element& g = basis_[pr.j];
  mpz_class gg;
  mpz_gcd(gg.get_mpz_t(), f.poly.front().c.get_mpz_t(), g.poly.front().c.get_mpz_t());
  mpz_class a = g.poly.front().c / gg;
  mpz_class b = f.poly.front().c / gg;
  return combine(a, pr.lcm / f.lm, f.poly, 1, b, pr.lcm / g.lm, g.poly, 1, ord_);
}

// Gebauer-Moeller update with the new element appended to basis_.
void Engine::insert(ZPoly p, unsigned sugar) {
  Element e;
  e.lm = p.front().m;
  e.lmSupport = e.lm.support();
  e.sugar = sugar;
  e.poly = std::move(p);
  const std::size_t h = basis_.size();
  basis_.push_back(std::move(e));
  const Monomial& lmH = basis_[h].lm;

  struct Candidate {
    std::size_t g;
    Monomial lcm;
    bool coprime;
    bool keep = true;
  };
  std::vector<Candidate> cands;
  for (std::size_t g = 0; g < h; ++g) {
    if (!basis_[g].active) continue;
    cands.push_back({g, lcm(lmH, basis_[g].lm), coprime(lmH, basis_[g].lm)});
  }
  // Chain criterion among the new pairs: drop (h,g1) if another new pair's
  // lcm properly divides it, or an equal lcm was already kept.
  std::vector<std::size_t> kept;
  for (std::size_t a = 0; a < cands.size(); ++a) {
    Candidate& c = cands[a];
    if (c.coprime) {
      kept.push_back(a);
      continue;
    }
    bool drop = false;
    for (std::size_t b = a + 1; b < cands.size() && !drop; ++b)
      if (cands[b].keep && cands[b].lcm.divides(c.lcm)) drop = true;
    for (std::size_t b : kept)
      if (!drop && cands[b].lcm.divides(c.lcm)) drop = true;
    if (drop)
      c.keep = false;
    else
      kept.push_back(a);
  }
  // Old pairs made redundant by the new leading monomial.
  std::erase_if(pairs_, [&](const Pair& pr) {
    if (!lmH.divides(pr.lcm)) return false;
    Monomial l1 = lcm(basis_[pr.i].lm, lmH);
    Monomial l2 = lcm(basis_[pr.j].lm, lmH);
    return !(l1 == pr.lcm) && !(l2 == pr.lcm);
  });
  for (std::size_t a : kept) {
    const Candidate& c = cands[a];
    if (c.coprime) continue;  // product criterion
    const Element& g = basis_[c.g];
    unsigned s = std::max(g.sugar + (c.lcm.degree() - g.lm.degree()),
                          basis_[h].sugar + (c.lcm.degree() - lmH.degree()));
    pairs_.push_back({c.g, h, c.lcm, s});
  }
  for (std::size_t g = 0; g < h; ++g)
    if (basis_[g].active && lmH.divides(basis_[g].lm)) basis_[g].active = false;
}

// Sugar selection: smallest sugar, then smallest lcm degree, then the term
// order.
std::size_t Engine::selectPair() const {
  std::size_t best = 0;
  for (std::size_t k = 1; k < pairs_.size(); ++k) {
    const Pair& a = pairs_[k];
    const Pair& b = pairs_[best];
    if (a.sugar != b.sugar) {
      if (a.sugar < b.sugar) best = k;
      continue;
    }
    if (a.lcm.degree() != b.lcm.degree()) {
      if (a.lcm.degree() < b.lcm.degree()) best = k;
      continue;
    }
    if (ord_.compare(a.lcm, b.lcm) < 0) best = k;
  }
  return best;
}

std::vector<ZPoly> Engine::run(std::vector<ZPoly> input) {
  std::sort(input.begin(), input.end(), [&](const ZPoly& x, const ZPoly& y) {
    return ord_.compare(x.front().m, y.front().m) < 0;
  });
  auto unitIdeal = [](const ZPoly& p) {
    return std::vector<ZPoly>{ZPoly{{Monomial(p.front().m.arity()), 1}}};
  };
  for (ZPoly& f : input) {
    unsigned sugar = f.front().m.degree();
    for (const ZTerm& t : f) sugar = std::max(sugar, t.m.degree());
    ZPoly r = reduce(std::move(f), 0, sugar, basis_.size(), false);
    if (r.empty()) continue;
    if (r.front().m.isOne()) return unitIdeal(r);
    insert(std::move(r), sugar);
  }
  while (!pairs_.empty()) {
    std::size_t k = selectPair();
    Pair pr = pairs_[k];
    pairs_[k] = pairs_.back();
    pairs_.pop_back();
    if (stats_) ++stats_->pairsConsidered;
    ZPoly s = sPolynomial(pr);
    unsigned sugar = pr.sugar;
    ZPoly r = reduce(std::move(s), 0, sugar, basis_.size(), false);
    if (r.empty()) {
      if (stats_) ++stats_->zeroReductions;
      continue;
    }
    if (r.front().m.isOne()) return unitIdeal(r);
    insert(std::move(r), sugar);
  }
  // Interreduce the minimal basis.
  std::vector<ZPoly> out;
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (!basis_[k].active) continue;
    unsigned sugar = 0;
    out.push_back(reduce(basis_[k].poly, 1, sugar, k, true));
  }
  return out;
}

ZPoly toZPoly(const Polynomial& p, const TermOrder& ord) {
  mpz_class den = 1;
  for (const Term& t : p.terms())
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coefficient.get_den_mpz_t());
  ZPoly z;
  z.reserve(p.size());
  for (const Term& t : p.terms()) {
    mpz_class c = den / t.coefficient.get_den();
    c *= t.coefficient.get_num();
    z.push_back({t.monomial, std::move(c)});
  }
  std::sort(z.begin(), z.end(),
            [&](const ZTerm& a, const ZTerm& b) { return ord.greater(a.m, b.m); });
  makePrimitive(z);
  return z;
}

}  // namespace

std::vector<Polynomial> computeGroebnerBasis(const RingContext& ring,
                                             std::span<const Polynomial> gens,
                                             const TermOrder& ord,
                                             GroebnerStats* stats) {
  std::vector<ZPoly> input;
  for (const Polynomial& g : gens) {
    if (!(g.ring() == ring)) throw DomainError("groebner: generator in a different ring");
    if (!g.isZero()) input.push_back(toZPoly(g, ord));
  }
  Engine engine(ord, stats);
  std::vector<ZPoly> basis = engine.run(std::move(input));
  std::vector<Polynomial> out;
  out.reserve(basis.size());
  for (ZPoly& z : basis) {
    Rational lc(z.front().c);
    std::vector<Term> terms;
    terms.reserve(z.size());
    for (ZTerm& t : z) {
      Rational c(t.c);
      c /= lc;
      terms.push_back({t.m, std::move(c)});
    }
    out.push_back(Polynomial::fromTerms(ring, std::move(terms)));
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.greater(leadingTerm(a, ord).first, leadingTerm(b, ord).first);
  });
  if (stats) stats->basisSize = out.size();
  return out;
}

}  // namespace affimg::detail
