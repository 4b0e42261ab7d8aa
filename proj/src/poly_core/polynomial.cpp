#include "affimg/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "affimg/errors.hpp"

namespace affimg {

namespace {

// Canonical storage order: graded reverse lex, descending.
bool canonicalGreater(const Monomial& a, const Monomial& b) noexcept {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  for (std::size_t i = a.arity(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

void sortAndCombine(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
    return canonicalGreater(x.monomial, y.monomial);
  });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Rational c = terms[i].coefficient;
    while (j < terms.size() && terms[j].monomial == terms[i].monomial)
      c += terms[j++].coefficient;
    if (c != 0) {
      terms[out].monomial = terms[i].monomial;
      terms[out].coefficient = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

std::vector<Term> mergeSum(const std::vector<Term>& a, const std::vector<Term>& b,
                           bool subtract) {
  std::vector<Term> r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() ||
        (i < a.size() && canonicalGreater(a[i].monomial, b[j].monomial))) {
      r.push_back(a[i++]);
    } else if (i == a.size() || canonicalGreater(b[j].monomial, a[i].monomial)) {
      r.push_back({b[j].monomial, subtract ? Rational(-b[j].coefficient)
                                           : b[j].coefficient});
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].coefficient - b[j].coefficient)
                            : Rational(a[i].coefficient + b[j].coefficient);
      if (c != 0) r.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return r;
}

}  // namespace

Polynomial Polynomial::constant(RingContext ring, const Rational& value) {
  Polynomial p(std::move(ring));
  if (value != 0) p.terms_.push_back({Monomial(p.ring_.size()), value});
  return p;
}

Polynomial Polynomial::variable(RingContext ring, std::string_view name) {
  std::size_t i = ring.index(name);
  return variable(std::move(ring), i);
}

Polynomial Polynomial::variable(RingContext ring, std::size_t index) {
  if (index >= ring.size()) throw DomainError("variable index out of range");
  Monomial m(ring.size());
  m.set(index, 1);
  return monomial(std::move(ring), m, 1);
}

Polynomial Polynomial::monomial(RingContext ring, Monomial m, Rational c) {
  if (m.arity() != ring.size())
    throw DomainError("monomial arity does not match ring");
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.push_back({m, std::move(c)});
  return p;
}

Polynomial Polynomial::fromTerms(RingContext ring, std::vector<Term> terms) {
  for (const Term& t : terms)
    if (t.monomial.arity() != ring.size())
      throw DomainError("monomial arity does not match ring");
  Polynomial p(std::move(ring));
  sortAndCombine(terms);
  p.terms_ = std::move(terms);
  return p;
}

std::optional<Rational> Polynomial::constantValue() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_[0].monomial.isOne())
    return terms_[0].coefficient;
  return std::nullopt;
}

Rational Polynomial::constantTerm() const {
  if (!terms_.empty() && terms_.back().monomial.isOne())
    return terms_.back().coefficient;
  return 0;
}

unsigned Polynomial::totalDegree() const {
  if (terms_.empty()) throw DomainError("degree of the zero polynomial is undefined");
  return terms_.front().monomial.degree();
}

unsigned Polynomial::degreeIn(std::size_t var) const {
  unsigned d = 0;
  for (const Term& t : terms_) d = std::max(d, t.monomial[var]);
  return d;
}

bool Polynomial::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [var](const Term& t) { return t.monomial[var] > 0; });
}

std::uint32_t Polynomial::support() const noexcept {
  std::uint32_t m = 0;
  for (const Term& t : terms_) m |= t.monomial.support();
  return m;
}

Rational Polynomial::coefficientOf(const Monomial& m) const {
  for (const Term& t : terms_)
    if (t.monomial == m) return t.coefficient;
  return 0;
}

void Polynomial::requireSameRing(const Polynomial& q, const char* op) const {
  if (!(ring_ == q.ring_))
    throw DomainError(std::string(op) + ": polynomials live in different rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (Term& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  requireSameRing(q, "add");
  terms_ = mergeSum(terms_, q.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  requireSameRing(q, "subtract");
  terms_ = mergeSum(terms_, q.terms_, true);
  return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  p.requireSameRing(q, "multiply");
  Polynomial r(p.ring_);
  if (p.isZero() || q.isZero()) return r;
  if (q.terms_.size() == 1) {
    r.terms_.reserve(p.terms_.size());
    for (const Term& t : p.terms_)
      r.terms_.push_back({t.monomial * q.terms_[0].monomial,
                          t.coefficient * q.terms_[0].coefficient});
    return r;  // multiplying by a monomial preserves the order
  }
  std::vector<Term> acc;
  acc.reserve(p.terms_.size() * q.terms_.size());
  for (const Term& a : p.terms_)
    for (const Term& b : q.terms_)
      acc.push_back({a.monomial * b.monomial, a.coefficient * b.coefficient});
  sortAndCombine(acc);
  r.terms_ = std::move(acc);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& q) {
  *this = *this * q;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (Term& t : terms_) t.coefficient *= c;
  return *this;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

Polynomial Polynomial::monic(const TermOrder& ord) const {
  if (isZero()) return *this;
  Rational lc = leadingTerm(*this, ord).second;
  Polynomial r = *this;
  r *= Rational(1 / lc);
  return r;
}

std::string Polynomial::toString() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    const bool negative = sgn(t.coefficient) < 0;
    Rational mag = abs(t.coefficient);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (t.monomial.isOne()) {
      os << mag.get_str();
      continue;
    }
    bool needStar = false;
    if (mag != 1) {
      os << mag.get_str();
      needStar = true;
    }
    for (std::size_t i = 0; i < t.monomial.arity(); ++i) {
      unsigned e = t.monomial[i];
      if (!e) continue;
      if (needStar) os << '*';
      os << ring_.name(i);
      if (e > 1) os << '^' << e;
      needStar = true;
    }
  }
  return os.str();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.ring_ == b.ring_ && a.terms_ == b.terms_;
}

Polynomial substitute(const Polynomial& p,
                      const std::map<std::string, Polynomial>& assignment,
                      const RingContext& target) {
  const RingContext& src = p.ring();
  std::vector<std::optional<Polynomial>> images(src.size());
  for (const auto& [name, image] : assignment) {
    std::size_t i = src.index(name);
    if (!(image.ring() == target))
      throw DomainError("substitute: image of '" + name +
                        "' is not in the target ring");
    images[i] = image;
  }
  const std::uint32_t used = p.support();
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (images[i]) continue;
    if (auto j = target.find(src.name(i))) {
      images[i] = Polynomial::variable(target, *j);
    } else if (used >> i & 1u) {
      throw DomainError("substitute: variable '" + src.name(i) +
                        "' is unassigned and absent from the target ring");
    }
  }
  // powers[i][k] = images[i]^k, filled on demand
  std::vector<std::vector<Polynomial>> powers(src.size());
  auto power = [&](std::size_t i, unsigned k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * *images[i]);
    return cache[k];
  };
  std::vector<Term> acc;
  for (const Term& t : p.terms()) {
    Polynomial prod = Polynomial::constant(target, t.coefficient);
    for (std::size_t i = 0; i < src.size() && !prod.isZero(); ++i)
      if (unsigned e = t.monomial[i]) prod *= power(i, e);
    acc.insert(acc.end(), prod.terms().begin(), prod.terms().end());
  }
  return Polynomial::fromTerms(target, std::move(acc));
}

Polynomial substitute(const Polynomial& p,
                      const std::map<std::string, Polynomial>& assignment) {
  if (assignment.empty()) return p;
  return substitute(p, assignment, assignment.begin()->second.ring());
}

Polynomial changeRing(const Polynomial& p, const RingContext& target) {
  if (p.ring() == target) return p;
  const RingContext& src = p.ring();
  std::vector<std::optional<std::size_t>> where(src.size());
  const std::uint32_t used = p.support();
  for (std::size_t i = 0; i < src.size(); ++i) {
    where[i] = target.find(src.name(i));
    if (!where[i] && (used >> i & 1u))
      throw DomainError("variable '" + src.name(i) + "' is absent from the target ring");
  }
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const Term& t : p.terms()) {
    Monomial m(target.size());
    for (std::size_t i = 0; i < src.size(); ++i)
      if (t.monomial[i]) m.set(*where[i], t.monomial[i]);
    terms.push_back({m, t.coefficient});
  }
  return Polynomial::fromTerms(target, std::move(terms));
}

namespace {

int termWeight(const RingContext& ring, const Monomial& m) {
  int w = 0;
  for (std::size_t i = 0; i < ring.size(); ++i)
    w += ring.weight(i) * static_cast<int>(m[i]);
  return w;
}

}  // namespace

int weightedDegree(const Polynomial& p) {
  if (p.isZero())
    throw DomainError("weighted degree of the zero polynomial is undefined");
  int d = 0;
  for (const Term& t : p.terms()) d = std::max(d, termWeight(p.ring(), t.monomial));
  return d;
}

bool isWeightedHomogeneous(const Polynomial& p) {
  if (p.isZero()) return true;
  int d = termWeight(p.ring(), p.terms()[0].monomial);
  for (const Term& t : p.terms())
    if (termWeight(p.ring(), t.monomial) != d) return false;
  return true;
}

Polynomial homogenize(const Polynomial& p, std::string_view hVar) {
  const RingContext& ring = p.ring();
  std::size_t h = ring.index(hVar);
  if (ring.weight(h) != 1)
    throw DomainError("homogenize: the homogenizing variable must have weight 1");
  if (p.involves(h))
    throw DomainError("homogenize: '" + std::string(hVar) + "' occurs in the polynomial");
  if (p.isZero()) return p;
  const int target = weightedDegree(p);
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const Term& t : p.terms()) {
    Monomial m = t.monomial;
    m.set(h, static_cast<unsigned>(target - termWeight(ring, m)));
    terms.push_back({m, t.coefficient});
  }
  return Polynomial::fromTerms(ring, std::move(terms));
}

std::pair<Monomial, Rational> leadingTerm(const Polynomial& p, const TermOrder& ord) {
  if (p.isZero()) throw DomainError("leading term of the zero polynomial");
  const Term* best = &p.terms()[0];
  for (const Term& t : p.terms())
    if (ord.greater(t.monomial, best->monomial)) best = &t;
  return {best->monomial, best->coefficient};
}

Polynomial derivative(const Polynomial& p, std::size_t var) {
  std::vector<Term> terms;
  for (const Term& t : p.terms()) {
    unsigned e = t.monomial[var];
    if (!e) continue;
    Monomial m = t.monomial;
    m.set(var, e - 1);
    terms.push_back({m, t.coefficient * e});
  }
  return Polynomial::fromTerms(p.ring(), std::move(terms));
}

Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
  if (point.size() != p.ring().size())
    throw DomainError("evaluate: point has the wrong number of coordinates");
  Rational sum = 0;
  for (const Term& t : p.terms()) {
    Rational v = t.coefficient;
    for (std::size_t i = 0; i < point.size() && v != 0; ++i)
      for (unsigned k = 0; k < t.monomial[i]; ++k) v *= point[i];
    sum += v;
  }
  return sum;
}

std::vector<Polynomial> coefficientsIn(const Polynomial& p, std::size_t var) {
  std::vector<std::vector<Term>> buckets(p.isZero() ? 0 : p.degreeIn(var) + 1);
  for (const Term& t : p.terms()) {
    Monomial m = t.monomial;
    unsigned e = m[var];
    m.set(var, 0);
    buckets[e].push_back({m, t.coefficient});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Polynomial::fromTerms(p.ring(), std::move(b)));
  return out;
}

}  // namespace affimg
