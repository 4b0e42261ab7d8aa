#include <gtest/gtest.h>

#include <random>

#include "affimg/errors.hpp"
#include "affimg/ideal.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace affimg;
using affimg::testing::I;
using affimg::testing::P;
using affimg::testing::randomPolynomial;

namespace {

const RingContext XY({"x", "y"});
const RingContext XYZ({"x", "y", "z"});

// Leading monomials of `basis` pairwise non-dividing, no term of any element
// divisible by another leading monomial.
bool isReduced(const std::vector<Polynomial>& basis, const TermOrder& ord) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (leadingTerm(basis[i], ord).second != 1) return false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const Monomial lj = leadingTerm(basis[j], ord).first;
      for (const Term& t : basis[i].terms())
        if (lj.divides(t.monomial)) return false;
    }
  }
  return true;
}

Ideal randomIdeal(std::mt19937_64& rng) {
  const std::size_t nv = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  std::vector<std::string> names{"x", "y", "z"};
  names.resize(nv);
  RingContext R(names);
  const std::size_t ng = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
  std::vector<Polynomial> gens;
  for (std::size_t k = 0; k < ng; ++k) gens.push_back(randomPolynomial(R, rng, 2, 4));
  return Ideal(R, gens);
}

}  // namespace

TEST(Groebner, TextbookBasis) {
  // x^3 - 2xy, x^2 y - 2y^2 + x under grevlex
  Ideal J = I(XY, {"x^3 - 2*x*y", "x^2*y - 2*y^2 + x"});
  const auto& gb = J.groebnerBasis();
  ASSERT_EQ(gb.size(), 3u);
  EXPECT_EQ(gb[0], P(XY, "x^2"));
  EXPECT_EQ(gb[1], P(XY, "x*y"));
  EXPECT_EQ(gb[2], P(XY, "y^2 - 1/2*x"));
}

TEST(Groebner, LexBasisOfTwistedCubic) {
  RingContext R({"t", "x", "y", "z"});
  Ideal J = I(R, {"t - x", "t^2 - y", "t^3 - z"});
  const auto& gb = J.groebnerBasis(TermOrder::lex());
  std::vector<Polynomial> expected{P(R, "t - x"), P(R, "x^2 - y"), P(R, "x*y - z"),
                                   P(R, "x*z - y^2"), P(R, "y^3 - z^2")};
  EXPECT_EQ(gb, expected);
}

TEST(Groebner, RandomIdealsSatisfyBuchbergersCriterion) {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 200; ++k) {
    Ideal J = randomIdeal(rng);
    for (const TermOrder& ord : {TermOrder::grevlex(), TermOrder::lex()}) {
      const auto& gb = J.groebnerBasis(ord);
      EXPECT_TRUE(isReduced(gb, ord));
      for (std::size_t i = 0; i < gb.size(); ++i)
        for (std::size_t j = i + 1; j < gb.size(); ++j)
          EXPECT_TRUE(normalForm(sPolynomial(gb[i], gb[j], ord), gb, ord).isZero());
      for (const auto& g : J.generators())
        EXPECT_TRUE(normalForm(g, gb, ord).isZero());
    }
    // both bases describe the same ideal
    for (const auto& g : J.groebnerBasis(TermOrder::lex()))
      EXPECT_TRUE(normalForm(g, J.groebnerBasis(), TermOrder::grevlex()).isZero());
  }
}

TEST(Groebner, NormalFormIsARemainder) {
  std::vector<Polynomial> basis{P(XY, "x*y - 1"), P(XY, "y^2 - 1")};
  Polynomial f = P(XY, "x^2*y + x*y^2 + y^2");
  Polynomial r = normalForm(f, basis, TermOrder::lex());
  EXPECT_EQ(r, P(XY, "x + y + 1"));
}

TEST(Ideal, UnitAndZero) {
  EXPECT_TRUE(containsOne(I(XY, {"x", "x + 1"})));
  EXPECT_TRUE(containsOne(Ideal::unit(XY)));
  EXPECT_FALSE(containsOne(I(XY, {"x*y"})));
  EXPECT_TRUE(isZeroIdeal(Ideal(XY)));
  EXPECT_TRUE(isZeroIdeal(I(XY, {"0"})));
  EXPECT_FALSE(isZeroIdeal(I(XY, {"y"})));
}

TEST(Ideal, Membership) {
  Ideal J = I(XYZ, {"x - y^2", "y - z^3"});
  EXPECT_TRUE(idealMembership(P(XYZ, "x - z^6"), J));
  EXPECT_FALSE(idealMembership(P(XYZ, "x - z^5"), J));
  EXPECT_TRUE(sameIdeal(J, I(XYZ, {"x - z^6", "y - z^3"})));
  EXPECT_FALSE(sameIdeal(J, I(XYZ, {"x - z^6"})));
}

TEST(Ideal, SumAndRingChange) {
  Ideal J = I(XY, {"x"}) + P(XY, "y - 1");
  EXPECT_EQ(J.generators().size(), 2u);
  Ideal K = J.inRing(XYZ);
  EXPECT_EQ(K.ring(), XYZ);
  EXPECT_TRUE(idealMembership(P(XYZ, "x*z + y - 1"), K));
  EXPECT_THROW(I(XY, {"x"}) + I(XYZ, {"x"}), DomainError);
}

TEST(Eliminate, ProjectionOfTwistedCubic) {
  RingContext R({"t", "x", "y", "z"});
  std::vector<std::string> t{"t"};
  Ideal E = eliminate(I(R, {"x - t", "y - t^2", "z - t^3"}), t);
  ASSERT_EQ(E.ring().names(), (std::vector<std::string>{"x", "y", "z"}));
  EXPECT_TRUE(sameIdeal(E, I(E.ring(), {"x^2 - y", "x*y - z", "y^2 - x*z"})));
}

TEST(Eliminate, MatchesSylvesterResultant) {
  // f, g monic in x, so V(res_x(f, g)) is exactly the projection
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> coef(-4, 4);
  std::vector<std::string> xname{"x"};
  for (int trial = 0; trial < 50; ++trial) {
    auto make = [&](int degX) {
      const Polynomial x = P(XY, "x"), y = P(XY, "y");
      auto c = [&] { return Polynomial::constant(XY, coef(rng)); };
      Polynomial f = c() * y * y + c() * y + c();
      if (degX == 1) return x + f;
      return x * x + c() * x * y + c() * x + f;
    };
    const int df = std::uniform_int_distribution<int>(1, 2)(rng);
    const int dg = std::uniform_int_distribution<int>(1, 2)(rng);
    Polynomial f = make(df), g = make(dg);
    Ideal E = eliminate(Ideal(XY, {f, g}), xname);
    const RingContext& Y = E.ring();

    std::vector<Rational> ys, rs;
    for (int k = 0; k < 12; ++k) {
      Rational y0 = k - 6;
      std::vector<Rational> pt{0, y0};
      auto coeffsAt = [&](const Polynomial& p) {
        std::vector<Rational> c;
        for (const auto& ck : coefficientsIn(p, 0)) c.push_back(evaluate(ck, pt));
        return c;
      };
      ys.push_back(y0);
      rs.push_back(affimg::testing::sylvesterResultant(coeffsAt(f), coeffsAt(g)));
    }
    Polynomial res = affimg::testing::interpolate(Y, 0, ys, rs);
    EXPECT_TRUE(idealEqualityUpToRadical(E, Ideal(Y, {res})))
        << "f = " << f.toString() << ", g = " << g.toString() << ", elim = " << E.toString()
        << ", res = " << res.toString();
  }
}

TEST(Saturate, DefinitionalIdentity) {
  Ideal S = saturate(I(XY, {"x^2*y"}), P(XY, "x"));
  EXPECT_TRUE(sameIdeal(S, I(XY, {"y"})));
  Ideal T = saturate(I(XY, {"x*(y - 1)", "x^2"}), P(XY, "x"));
  EXPECT_TRUE(containsOne(T));
  EXPECT_TRUE(sameIdeal(saturate(I(XY, {"y"}), P(XY, "3")), I(XY, {"y"})));
}

TEST(Saturate, ContainsIAndIsSaturated) {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 30; ++k) {
    Ideal J(XYZ, {randomPolynomial(XYZ, rng, 2, 3) * P(XYZ, "x"),
                  randomPolynomial(XYZ, rng, 2, 3)});
    Polynomial f = P(XYZ, "x");
    Ideal S = saturate(J, f);
    for (const auto& g : J.generators()) EXPECT_TRUE(idealMembership(g, S));
    // every element of S times a power of f lands in J
    for (const auto& g : S.groebnerBasis()) {
      bool found = false;
      Polynomial h = g;
      for (int e = 0; e <= 8 && !found; ++e, h = h * f) found = idealMembership(h, J);
      EXPECT_TRUE(found) << g.toString();
    }
    EXPECT_TRUE(sameIdeal(saturate(S, f), S));
  }
}

TEST(Saturate, BayerMatchesRabinowitsch) {
  RingContext R({"a", "b", "e", "w"}, {1, 1, 1, 0});
  RingContext R0({"a", "b", "w"}, {1, 1, 0});
  std::mt19937_64 rng(31);
  for (int k = 0; k < 20; ++k) {
    std::vector<Polynomial> gens;
    for (int j = 0; j < 2; ++j) {
      Polynomial f = randomPolynomial(R0, rng, 3, 4);
      if (f.isZero()) continue;
      gens.push_back(homogenize(changeRing(f, R), "e"));
    }
    Ideal J(R, gens);
    EXPECT_TRUE(sameIdeal(saturateByVariable(J, 2), saturate(J, P(R, "e"))));
  }
}

TEST(Intersect, DefinitionalIdentity) {
  EXPECT_TRUE(sameIdeal(intersectIdeals(I(XY, {"x"}), I(XY, {"y"})), I(XY, {"x*y"})));
  EXPECT_TRUE(sameIdeal(intersectIdeals(I(XY, {"x^2", "y"}), I(XY, {"x", "y^2"})),
                        I(XY, {"x^2", "x*y", "y^2"})));
  EXPECT_TRUE(sameIdeal(intersectIdeals(Ideal::unit(XY), I(XY, {"x"})), I(XY, {"x"})));
  EXPECT_TRUE(isZeroIdeal(intersectIdeals(Ideal(XY), I(XY, {"x"}))));
}

TEST(Intersect, LatticeProperties) {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 30; ++k) {
    Ideal A(XY, {randomPolynomial(XY, rng, 2, 3), randomPolynomial(XY, rng, 2, 3)});
    Ideal B(XY, {randomPolynomial(XY, rng, 2, 3)});
    Ideal C = intersectIdeals(A, B);
    for (const auto& g : C.groebnerBasis()) {
      EXPECT_TRUE(idealMembership(g, A));
      EXPECT_TRUE(idealMembership(g, B));
    }
    for (const auto& a : A.generators())
      for (const auto& b : B.generators()) EXPECT_TRUE(idealMembership(a * b, C));
  }
}

TEST(Radical, Membership) {
  EXPECT_TRUE(radicalMembership(P(XY, "x"), I(XY, {"x^3"})));
  EXPECT_TRUE(radicalMembership(P(XY, "x + y"), I(XY, {"x^2", "y^5"})));
  EXPECT_FALSE(radicalMembership(P(XY, "x"), I(XY, {"x*y"})));
  EXPECT_TRUE(idealEqualityUpToRadical(I(XY, {"x^2", "y^3"}), I(XY, {"x", "y"})));
  EXPECT_FALSE(idealEqualityUpToRadical(I(XY, {"x*y"}), I(XY, {"x"})));
}

TEST(Radical, OfPrincipal) {
  EXPECT_TRUE(sameIdeal(radicalOfPrincipal(I(XY, {"x^3*(y - 1)^2"})), I(XY, {"x*y - x"})));
  EXPECT_THROW(radicalOfPrincipal(I(XY, {"x", "y"})), UnsupportedError);
}

TEST(Dimension, KnownVarieties) {
  EXPECT_EQ(dimensionOfIdeal(Ideal(XYZ)), 3);
  EXPECT_EQ(dimensionOfIdeal(Ideal::unit(XYZ)), -1);
  EXPECT_EQ(dimensionOfIdeal(I(XYZ, {"x*y - z^2"})), 2);
  EXPECT_EQ(dimensionOfIdeal(I(XYZ, {"x^2 - y", "x*y - z"})), 1);
  EXPECT_EQ(dimensionOfIdeal(I(XYZ, {"x - 1", "y^2", "z + y"})), 0);
  // union of a plane and a line
  EXPECT_EQ(dimensionOfIdeal(I(XYZ, {"x*y", "x*z"})), 2);
}

TEST(Gcd, RandomProducts) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 40; ++k) {
    Polynomial f = randomPolynomial(XYZ, rng, 2, 3), g = randomPolynomial(XYZ, rng, 2, 3),
               h = randomPolynomial(XYZ, rng, 2, 3);
    if (f.isZero() || g.isZero() || h.isZero()) continue;
    Polynomial d = polynomialGcd(f * g, f * h);
    // f divides the gcd, and the gcd divides both products
    EXPECT_NO_THROW(exactQuotient(d, f));
    EXPECT_NO_THROW(exactQuotient(f * g, d));
    EXPECT_NO_THROW(exactQuotient(f * h, d));
    EXPECT_EQ(exactQuotient(f * g, g), f);
  }
  EXPECT_EQ(polynomialGcd(P(XY, "x^2 - y^2"), P(XY, "2*x + 2*y")), P(XY, "x + y"));
  EXPECT_EQ(polynomialGcd(P(XY, "x"), P(XY, "y")), P(XY, "1"));
  EXPECT_THROW(exactQuotient(P(XY, "x"), P(XY, "y")), DomainError);
}

TEST(Gcd, SquarefreePart) {
  EXPECT_EQ(squarefreePart(P(XY, "4*x^3*(y + 1)^2*(x - y)")),
            (P(XY, "x*(y + 1)*(x - y)")).monic());
  EXPECT_EQ(squarefreePart(P(XY, "7")), P(XY, "1"));
}
