#include <bit>

#include "affimg/errors.hpp"
#include "affimg/ideal.hpp"

namespace affimg {

namespace {

Polynomial one(const RingContext& ring) { return Polynomial::constant(ring, 1); }

Polynomial leadingCoefficientIn(const Polynomial& p, std::size_t x) {
  return coefficientsIn(p, x).back();
}

Polynomial gcdRec(const Polynomial& f, const Polynomial& g);

Polynomial contentIn(const Polynomial& p, std::size_t x) {
  Polynomial c(p.ring());
  for (const Polynomial& k : coefficientsIn(p, x)) {
    if (k.isZero()) continue;
    c = gcdRec(c, k);
    if (c.isConstant()) break;
  }
  return c;
}

Polynomial primitivePartIn(const Polynomial& p, std::size_t x) {
  return exactQuotient(p, contentIn(p, x));
}

Polynomial pseudoRemainder(const Polynomial& a, const Polynomial& b, std::size_t x) {
  const unsigned db = b.degreeIn(x);
  const Polynomial lb = leadingCoefficientIn(b, x);
  const Polynomial xv = Polynomial::variable(a.ring(), x);
  int e = static_cast<int>(a.degreeIn(x)) - static_cast<int>(db) + 1;
  Polynomial r = a;
  while (!r.isZero() && r.degreeIn(x) >= db) {
    const unsigned k = r.degreeIn(x) - db;
    r = lb * r - leadingCoefficientIn(r, x) * xv.pow(k) * b;
    --e;
  }
  return e > 0 ? lb.pow(static_cast<unsigned>(e)) * r : r;
}

// Subresultant PRS; a and b primitive in x with deg a >= deg b >= 1.
Polynomial subresultantGcd(Polynomial a, Polynomial b, std::size_t x) {
  Polynomial g = one(a.ring());
  Polynomial h = one(a.ring());
  for (;;) {
    const unsigned delta = a.degreeIn(x) - b.degreeIn(x);
    Polynomial r = pseudoRemainder(a, b, x);
    if (r.isZero()) return primitivePartIn(b, x);
    if (r.degreeIn(x) == 0) return one(a.ring());
    a = std::move(b);
    b = exactQuotient(r, g * h.pow(delta));
    g = leadingCoefficientIn(a, x);
    if (delta == 1)
      h = g;
    else if (delta > 1)
      h = exactQuotient(g.pow(delta), h.pow(delta - 1));
  }
}

Polynomial gcdRec(const Polynomial& f, const Polynomial& g) {
  if (f.isZero()) return g.isZero() ? g : g.monic();
  if (g.isZero()) return f.monic();
  if (f.isConstant() || g.isConstant()) return one(f.ring());
  const std::uint32_t s = f.support() | g.support();
  const std::size_t x = 31 - std::countl_zero(s);
  if (!f.involves(x)) return gcdRec(f, contentIn(g, x));
  if (!g.involves(x)) return gcdRec(contentIn(f, x), g);
  const Polynomial cf = contentIn(f, x);
  const Polynomial cg = contentIn(g, x);
  Polynomial pf = exactQuotient(f, cf);
  Polynomial pg = exactQuotient(g, cg);
  if (pf.degreeIn(x) < pg.degreeIn(x)) std::swap(pf, pg);
  return (gcdRec(cf, cg) * subresultantGcd(pf, pg, x)).monic();
}

}  // namespace

Polynomial polynomialGcd(const Polynomial& f, const Polynomial& g) {
  if (!(f.ring() == g.ring())) throw DomainError("polynomialGcd: ring mismatch");
  return gcdRec(f, g);
}

Polynomial exactQuotient(const Polynomial& f, const Polynomial& g) {
  if (!(f.ring() == g.ring())) throw DomainError("exactQuotient: ring mismatch");
  if (g.isZero()) throw DomainError("exactQuotient: division by zero");
  if (auto c = g.constantValue()) return f * (1 / *c);
  const TermOrder ord = TermOrder::lex();
  const auto [lg, cg] = leadingTerm(g, ord);
  std::vector<Term> q;
  Polynomial r = f;
  while (!r.isZero()) {
    const auto [lr, cr] = leadingTerm(r, ord);
    if (!lg.divides(lr)) throw DomainError("exactQuotient: not divisible");
    const Polynomial t = Polynomial::monomial(f.ring(), lr / lg, cr / cg);
    r -= t * g;
    q.push_back(t.terms()[0]);
  }
  return Polynomial::fromTerms(f.ring(), std::move(q));
}

Polynomial squarefreePart(const Polynomial& f) {
  if (f.isZero()) return f;
  if (f.isConstant()) return one(f.ring());
  Polynomial g = f;
  for (std::size_t v = 0; v < f.ring().size(); ++v)
    if (f.involves(v)) g = gcdRec(g, derivative(f, v));
  return exactQuotient(f, g).monic();
}

}  // namespace affimg
