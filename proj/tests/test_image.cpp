#include <gtest/gtest.h>

#include "affimg/errors.hpp"
#include "affimg/image.hpp"
#include "support/helpers.hpp"

using namespace affimg;
using affimg::testing::I;
using affimg::testing::M;
using affimg::testing::P;

namespace {

const RingContext ABC({"a", "b", "c"});
const RingContext W3({"w1", "w2", "w3"});
const RingContext W2({"w1", "w2"});

PolynomialMap cubicMap() {
  return M(ABC, W3, {"1 + c*(a^2 - b^3 - b)", "a", "b + c + c^2*(a^2 - b^3 - b)"});
}

bool radicalEq(const Ideal& a, const Ideal& b) { return idealEqualityUpToRadical(a, b); }

}  // namespace

TEST(PolynomialMap, EvaluationAndComposition) {
  PolynomialMap F = M(ABC, W2, {"a + b", "a*c"});
  std::vector<Rational> pt{1, 2, 3};
  EXPECT_EQ(F(pt), (std::vector<Rational>{3, 3}));
  EXPECT_EQ(F.totalDegree(), 2u);
  EXPECT_EQ(F.toString(), "(a + b, a*c)");
  PolynomialMap G = M(W2, RingContext({"u"}), {"w1^2 - w2"});
  PolynomialMap GF = compose(G, F);
  EXPECT_EQ(GF.coordinate(0), P(ABC, "(a + b)^2 - a*c"));
  EXPECT_EQ(pullback(P(W2, "w1*w2"), F), P(ABC, "(a + b)*a*c"));
  EXPECT_EQ(compose(F, PolynomialMap::identity(ABC)), F);
  EXPECT_THROW(PolynomialMap(ABC, W2, {P(ABC, "a")}), DomainError);
  EXPECT_THROW(PolynomialMap(ABC, W2, {P(ABC, "a"), P(W2, "w1")}), DomainError);
}

TEST(GraphIdeal, WeightsAndClashes) {
  Ideal G = graphIdeal(cubicMap(), Ideal(ABC));
  const RingContext& R = G.ring();
  ASSERT_EQ(R.size(), 6u);
  EXPECT_EQ(R.weight(R.index("a")), 1);
  EXPECT_EQ(R.weight(R.index("w1")), 0);
  EXPECT_EQ(G.generators().size(), 3u);
  PolynomialMap bad = M(RingContext({"w1"}), W2, {"w1", "w1"});
  EXPECT_THROW(graphIdeal(bad, Ideal(bad.domainRing())), DomainError);
}

TEST(ImageClosure, Parabola) {
  RingContext Z({"z"});
  Ideal C = imageClosure(graphIdeal(M(Z, W2, {"z", "z^2"}), Ideal(Z)));
  EXPECT_EQ(C.ring(), W2);
  EXPECT_TRUE(sameIdeal(C, I(W2, {"w2 - w1^2"})));
}

TEST(BoundaryLocus, RoundOneOfTheCubicMap) {
  BoundaryDetails d = boundaryLocusDetailed(graphIdeal(cubicMap(), Ideal(ABC)));
  ASSERT_EQ(d.charts.size(), 3u);
  EXPECT_TRUE(containsOne(d.charts[0]));
  EXPECT_TRUE(containsOne(d.charts[1]));
  EXPECT_TRUE(radicalEq(d.charts[2], I(d.charts[2].ring(), {"w1"})));
  EXPECT_TRUE(radicalEq(d.boundary, I(d.boundary.ring(), {"w1"})));
}

TEST(ConstructibleImage, CubicMapTwoRounds) {
  ImageResult r = constructibleImage(cubicMap(), Ideal(ABC));
  ASSERT_EQ(r.trace.rounds.size(), 2u);
  ASSERT_EQ(r.set.pieces.size(), 2u);
  EXPECT_TRUE(isZeroIdeal(r.set.pieces[0].closed));
  EXPECT_TRUE(radicalEq(r.set.pieces[0].removed, I(W3, {"w1"})));
  EXPECT_TRUE(radicalEq(r.set.pieces[1].closed, I(W3, {"w1"})));
  auto J = complementIdeal(r.set, 3);
  ASSERT_TRUE(J.has_value());
  EXPECT_TRUE(radicalEq(*J, I(W3, {"w1", "w2^2 - w3^3 - w3"})));
  EXPECT_TRUE(containsOne(r.trace.finalGraph));
}

TEST(ConstructibleImage, LineMapMissesTheW2Axis) {
  ImageResult r = constructibleImage(M(ABC, W3, {"1 + c*b", "a", "b + c*(1 + c*b)"}), Ideal(ABC));
  auto J = complementIdeal(r.set, 3);
  ASSERT_TRUE(J.has_value());
  EXPECT_TRUE(radicalEq(*J, I(W3, {"w1", "w3"})));
  // not a hypersurface
  EXPECT_FALSE(radicalEq(*J, I(W3, {"w2"})));
}

TEST(ConstructibleImage, TwistedCubicComplement) {
  ImageResult r =
      constructibleImage(M(ABC, W3, {"1 + c*b + a^2", "a", "b + c*(1 + c*b) + a^3"}), Ideal(ABC));
  auto J = complementIdeal(r.set, 3);
  ASSERT_TRUE(J.has_value());
  EXPECT_TRUE(radicalEq(*J, I(W3, {"w2^2 - w1", "w2^3 - w3"})));
}

TEST(ConstructibleImage, IdentityIsOnto) {
  RingContext Z({"z1", "z2", "z3"});
  ImageResult r = constructibleImage(M(Z, W3, {"z1", "z2", "z3"}), Ideal(Z));
  ASSERT_EQ(r.trace.rounds.size(), 1u);
  auto J = complementIdeal(r.set, 3);
  ASSERT_TRUE(J.has_value());
  EXPECT_TRUE(containsOne(*J));
}

TEST(ConstructibleImage, ParabolaIsClosed) {
  RingContext Z({"z"});
  ImageResult r = constructibleImage(M(Z, W2, {"z", "z^2"}), Ideal(Z));
  ASSERT_EQ(r.set.pieces.size(), 1u);
  EXPECT_TRUE(sameIdeal(r.set.pieces[0].closed, I(W2, {"w2 - w1^2"})));
  EXPECT_TRUE(containsOne(r.set.pieces[0].removed));
  EXPECT_FALSE(complementIdeal(r.set, 2).has_value());
}

TEST(ConstructibleImage, PlaneBlowDownIsNotLocallyClosed) {
  // (x, y) -> (x, x y): everything off w1 = 0, plus the origin
  RingContext XY({"x", "y"});
  ImageResult r = constructibleImage(M(XY, W2, {"x", "x*y"}), Ideal(XY));
  ASSERT_EQ(r.set.pieces.size(), 2u);
  EXPECT_TRUE(radicalEq(r.set.pieces[0].removed, I(W2, {"w1"})));
  EXPECT_TRUE(radicalEq(r.set.pieces[1].closed, I(W2, {"w1", "w2"})));
  EXPECT_TRUE(r.trace.rounds[1].sliced);
  EXPECT_FALSE(complementIdeal(r.set, 2).has_value());
}

TEST(ConstructibleImage, ConstantMapNeedsSlicing) {
  RingContext XY({"x", "y"});
  ImageResult r = constructibleImage(M(XY, W2, {"1", "-2"}), Ideal(XY));
  ASSERT_EQ(r.set.pieces.size(), 1u);
  EXPECT_TRUE(r.trace.rounds[0].sliced);
  EXPECT_EQ(r.trace.rounds[0].imageDimension, 0);
  EXPECT_TRUE(sameIdeal(r.set.pieces[0].closed, I(W2, {"w1 - 1", "w2 + 2"})));
}

TEST(ConstructibleImage, RespectsConstraints) {
  // the hyperbola x y = 1 maps onto the punctured line under x
  RingContext XY({"x", "y"});
  RingContext W({"w"});
  ImageResult r = constructibleImage(M(XY, W, {"x"}), I(XY, {"x*y - 1"}));
  ASSERT_EQ(r.set.pieces.size(), 1u);
  EXPECT_TRUE(isZeroIdeal(r.set.pieces[0].closed));
  EXPECT_TRUE(radicalEq(r.set.pieces[0].removed, I(W, {"w"})));
  auto J = complementIdeal(r.set, 1);
  ASSERT_TRUE(J.has_value());
  EXPECT_TRUE(radicalEq(*J, I(W, {"w"})));
}

TEST(ConstructibleImage, ParallelChartsAgree) {
  ImageOptions serial, parallel;
  parallel.jobs = 3;
  ImageResult a = constructibleImage(cubicMap(), Ideal(ABC), serial);
  ImageResult b = constructibleImage(cubicMap(), Ideal(ABC), parallel);
  ASSERT_EQ(a.set.pieces.size(), b.set.pieces.size());
  for (std::size_t i = 0; i < a.set.pieces.size(); ++i) {
    EXPECT_EQ(a.set.pieces[i].closed.groebnerBasis(), b.set.pieces[i].closed.groebnerBasis());
    EXPECT_EQ(a.set.pieces[i].removed.groebnerBasis(), b.set.pieces[i].removed.groebnerBasis());
  }
}

TEST(ConstructibleImage, RoundLimitKeepsTheTrace) {
  ImageOptions o;
  o.roundLimit = 1;
  try {
    constructibleImage(cubicMap(), Ideal(ABC), o);
    FAIL() << "expected RoundLimitError";
  } catch (const RoundLimitError& e) {
    EXPECT_EQ(e.trace().rounds.size(), 1u);
  }
}

TEST(ComplementIdeal, HandBuiltSets) {
  // A^2 \ V(w1) union V(w1) \ V(w1, w2): complement is the origin
  ConstructibleSet s{W2,
                     {{Ideal(W2), I(W2, {"w1"})}, {I(W2, {"w1"}), I(W2, {"w1", "w2"})}}};
  auto J = complementIdeal(s, 2);
  ASSERT_TRUE(J.has_value());
  EXPECT_TRUE(radicalEq(*J, I(W2, {"w1", "w2"})));
  // the punctured axis alone has a non-closed complement
  ConstructibleSet t{W2, {{I(W2, {"w1"}), I(W2, {"w1", "w2"})}}};
  EXPECT_FALSE(complementIdeal(t, 2).has_value());
  EXPECT_THROW(complementIdeal(s, 3), DomainError);
}

TEST(Slicing, MatchesImageDimension) {
  RingContext XY({"x", "y"});
  PolynomialMap F = M(XY, RingContext({"w"}), {"x + y"});
  Ideal C = sliceToImageDimension(F, Ideal(XY), 5);
  EXPECT_EQ(dimensionOfIdeal(C), 1);
  EXPECT_TRUE(isZeroIdeal(imageClosure(graphIdeal(F, C))));
}
