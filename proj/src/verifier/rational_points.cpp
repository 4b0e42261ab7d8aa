#include "affimg/rational_points.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace affimg {

namespace {

// Positive divisors of |v|, or nothing when |v| is too large to factor by
// trial division.
std::optional<std::vector<mpz_class>> divisors(mpz_class v) {
  v = abs(v);
  if (v > mpz_class("1000000000000")) return std::nullopt;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    small.push_back(d);
    if (d * d != v) large.push_back(v / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rational> rationalRoots(const Polynomial& p, std::size_t var) {
  std::vector<Polynomial> coeffs = coefficientsIn(p, var);
  std::vector<Rational> c;
  for (const Polynomial& k : coeffs) {
    auto v = k.constantValue();
    if (!v) return {};
    c.push_back(*v);
  }
  std::set<Rational> roots;
  std::size_t low = 0;
  while (low < c.size() && c[low] == 0) ++low;
  if (low == c.size()) return {};
  if (low > 0) roots.insert(0);
  mpz_class den = 1;
  for (const Rational& v : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  std::vector<mpz_class> z;
  for (std::size_t i = low; i < c.size(); ++i) z.push_back(mpz_class(c[i] * den));
  if (z.size() > 1) {
    auto ps = divisors(z.front());
    auto qs = divisors(z.back());
    if (ps && qs) {
      for (const mpz_class& num : *ps)
        for (const mpz_class& q : *qs)
          for (int sign : {1, -1}) {
            Rational r(sign * num, q);
            r.canonicalize();
            Rational acc = 0;
            for (auto it = z.rbegin(); it != z.rend(); ++it) acc = acc * r + Rational(*it);
            if (acc == 0) roots.insert(r);
          }
    }
  }
  return {roots.begin(), roots.end()};
}

bool vanishesAt(const Ideal& I, std::span<const Rational> point) {
  for (const Polynomial& g : I.generators())
    if (evaluate(g, point) != 0) return false;
  return true;
}

Point randomGridPoint(std::size_t n, std::mt19937_64& rng, int radius) {
  std::uniform_int_distribution<int> den(1, 2);
  std::uniform_int_distribution<int> num(-2 * radius, 2 * radius);
  Point p;
  for (std::size_t i = 0; i < n; ++i) {
    Rational v(num(rng), den(rng));
    v.canonicalize();
    p.push_back(v);
  }
  return p;
}

std::optional<Point> randomPointOn(const Ideal& I, std::mt19937_64& rng, unsigned attempts,
                                   int radius) {
  const RingContext& R = I.ring();
  const std::size_t n = R.size();
  const auto& gb = I.groebnerBasis(TermOrder::lex());
  if (gb.size() == 1 && gb[0].isConstant()) return std::nullopt;
  for (unsigned attempt = 0; attempt < attempts; ++attempt) {
    std::map<std::string, Polynomial> assigned;
    Point point(n);
    bool failed = false;
    for (std::size_t k = n; k-- > 0 && !failed;) {
      // Basis elements whose support lies in {x_k, ..., x_{n-1}} and
      // involve x_k become univariate after the substitution.
      std::vector<Rational> candidates;
      bool constrained = false;
      for (const Polynomial& g : gb) {
        if (!g.involves(k) || (g.support() & ((1u << k) - 1))) continue;
        const Polynomial u = substitute(g, assigned, R);
        if (u.isZero()) continue;
        if (u.isConstant()) {
          failed = true;
          break;
        }
        std::vector<Rational> roots = rationalRoots(u, k);
        if (!constrained) {
          candidates = std::move(roots);
          constrained = true;
        } else {
          std::vector<Rational> keep;
          std::set_intersection(candidates.begin(), candidates.end(), roots.begin(),
                                roots.end(), std::back_inserter(keep));
          candidates = std::move(keep);
        }
      }
      if (failed) break;
      Rational value;
      if (constrained) {
        if (candidates.empty()) {
          failed = true;
          break;
        }
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        value = candidates[pick(rng)];
      } else {
        value = randomGridPoint(1, rng, radius)[0];
      }
      point[k] = value;
      assigned.insert_or_assign(R.name(k), Polynomial::constant(R, value));
    }
    if (!failed && vanishesAt(I, point)) return point;
  }
  return std::nullopt;
}

}  // namespace affimg
