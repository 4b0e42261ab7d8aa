#include "affimg/image.hpp"

#include <map>
#include <random>

#include "affimg/errors.hpp"
#include "affimg/parallel.hpp"

namespace affimg {

namespace {

std::vector<std::string> positiveWeightNames(const RingContext& ring) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < ring.size(); ++i)
    if (ring.weight(i) > 0) out.push_back(ring.name(i));
  return out;
}

RingContext weightZeroRing(const RingContext& ring) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < ring.size(); ++i)
    if (ring.weight(i) == 0) out.push_back(ring.name(i));
  return RingContext(std::move(out));
}

Ideal inDomain(const Ideal& constraints, const RingContext& domain) {
  if (constraints.hasNoGenerators()) return Ideal(domain);
  if (!(constraints.ring() == domain))
    throw DomainError("constraints must live in the domain ring");
  return constraints;
}

struct Slice {
  Ideal sliced;
  std::vector<Polynomial> forms;
};

Slice sliceGraph(const Ideal& G, const Ideal& closure, int targetDim,
                 std::mt19937_64& rng, unsigned retries) {
  const RingContext& ring = G.ring();
  const int k = dimensionOfIdeal(G) - targetDim;
  std::uniform_int_distribution<int> coeff(-20, 20);
  for (unsigned attempt = 0; attempt < retries; ++attempt) {
    std::vector<Polynomial> forms;
    for (int f = 0; f < k; ++f) {
      Polynomial form = Polynomial::constant(ring, coeff(rng));
      for (std::size_t i = 0; i < ring.size(); ++i)
        if (ring.weight(i) > 0) form += Rational(coeff(rng)) * Polynomial::variable(ring, i);
      forms.push_back(std::move(form));
    }
    Ideal S = G;
    for (const Polynomial& f : forms) S = S + f;
    if (dimensionOfIdeal(S) != targetDim) continue;
    const Ideal slicedClosure = imageClosure(S);
    bool same = true;
    for (const Polynomial& g : slicedClosure.generators())
      if (!radicalMembership(g, closure)) {
        same = false;
        break;
      }
    if (same) return {std::move(S), std::move(forms)};
  }
  throw GenericityError("no random slice preserved the image closure; try another seed");
}

}  // namespace

Ideal graphIdeal(const PolynomialMap& F, const Ideal& constraints) {
  const RingContext& dom = F.domainRing();
  const RingContext& cod = F.codomainRing();
  std::vector<std::string> names = dom.names();
  std::vector<int> weights(dom.size(), 1);
  for (const std::string& w : cod.names()) {
    if (dom.contains(w))
      throw DomainError("graph ideal: variable '" + w + "' is in domain and codomain");
    names.push_back(w);
    weights.push_back(0);
  }
  const RingContext prod(std::move(names), std::move(weights));
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < cod.size(); ++i)
    gens.push_back(Polynomial::variable(prod, cod.name(i)) - changeRing(F.coordinate(i), prod));
  const Ideal onDomain = inDomain(constraints, dom);
  for (const Polynomial& g : onDomain.generators()) gens.push_back(changeRing(g, prod));
  return Ideal(prod, std::move(gens));
}

Ideal imageClosure(const Ideal& G) {
  return eliminate(G, positiveWeightNames(G.ring())).inRing(weightZeroRing(G.ring()));
}

BoundaryDetails boundaryLocusDetailed(const Ideal& G, unsigned jobs) {
  const RingContext& ring = G.ring();
  const RingContext target = weightZeroRing(ring);
  std::vector<std::string> z = positiveWeightNames(ring);
  BoundaryDetails out;
  if (z.empty()) {
    out.atInfinity = Ideal::unit(ring);
    out.boundary = Ideal::unit(target);
    return out;
  }
  std::size_t position = 0;
  for (std::size_t i = 0; i < ring.size(); ++i)
    if (ring.weight(i) > 0) position = i + 1;
  const std::string e = ring.freshName("e");
  const RingContext extended = ring.inserted(position, e, 1);
  std::vector<Polynomial> homogenized;
  for (const Polynomial& g : G.generators())
    homogenized.push_back(homogenize(changeRing(g, extended), e));
  const std::size_t ei = extended.index(e);
  const Ideal closure = saturateByVariable(Ideal(extended, std::move(homogenized)), ei);
  out.atInfinity = closure + Polynomial::variable(extended, e);

  // Chart z_i = 1 of the part at infinity: substitute e = 0 and z_i = 1,
  // then project away the remaining z.
  out.charts.resize(z.size());
  detail::parallelFor(z.size(), jobs, [&](std::size_t i) {
    std::vector<std::string> dropped{z[i], e};
    const RingContext chartRing = extended.without(dropped);
    std::map<std::string, Polynomial> sub{{z[i], Polynomial::constant(chartRing, 1)},
                                          {e, Polynomial(chartRing)}};
    std::vector<Polynomial> gens;
    for (const Polynomial& g : closure.generators()) gens.push_back(substitute(g, sub, chartRing));
    std::vector<std::string> rest;
    for (const std::string& y : z)
      if (y != z[i]) rest.push_back(y);
    Ideal elim = eliminate(Ideal(chartRing, std::move(gens)), rest).inRing(target);
    if (elim.groebnerBasis().size() <= 1) elim = radicalOfPrincipal(elim);
    out.charts[i] = std::move(elim);
  });
  out.boundary = out.charts[0];
  for (std::size_t i = 1; i < out.charts.size(); ++i)
    out.boundary = intersectIdeals(out.boundary, out.charts[i]);
  return out;
}

Ideal boundaryLocus(const Ideal& G) { return boundaryLocusDetailed(G).boundary; }

ImageResult constructibleImage(const PolynomialMap& F, const Ideal& constraints,
                               const ImageOptions& options) {
  const RingContext& cod = F.codomainRing();
  const std::size_t roundLimit =
      options.roundLimit ? options.roundLimit : F.domainRing().size() + 2;
  std::mt19937_64 rng(options.seed);
  ImageResult result;
  result.set.ring = cod;
  Ideal gamma = graphIdeal(F, constraints);
  for (std::size_t round = 0;; ++round) {
    if (containsOne(gamma)) break;
    if (round >= roundLimit) {
      result.trace.finalGraph = gamma;
      throw RoundLimitError("image recursion exceeded its round limit of " +
                                std::to_string(roundLimit),
                            std::move(result.trace));
    }
    ImageRound rec;
    rec.graph = gamma;
    const Ideal rawClosure = imageClosure(gamma);
    rec.closure = rawClosure.inRing(cod);
    rec.domainDimension = dimensionOfIdeal(gamma);
    rec.imageDimension = dimensionOfIdeal(rawClosure);
    rec.working = gamma;
    if (rec.domainDimension > rec.imageDimension) {
      rec.working =
          sliceGraph(gamma, rawClosure, rec.imageDimension, rng, options.sliceRetries).sliced;
      rec.sliced = true;
    }
    rec.boundary = boundaryLocusDetailed(rec.working, options.jobs);
    const Ideal W = rec.boundary.boundary.inRing(cod);
    result.set.pieces.push_back({rec.closure, W});
    gamma = gamma + W.inRing(gamma.ring());
    result.trace.rounds.push_back(std::move(rec));
  }
  result.trace.finalGraph = gamma;
  return result;
}

std::optional<Ideal> complementIdeal(const ConstructibleSet& result,
                                     std::size_t ambientDim) {
  if (result.ring.size() != ambientDim)
    throw DomainError("complementIdeal: ambient dimension mismatch");
  const auto& pieces = result.pieces;
  // Round i covers V(C_i) \ V(W_{i+1}) inside V(D_i), D_0 = (0) and
  // D_i = C_{i-1} + W_i; what round i misses is V(D_i) \ V(C_i) plus,
  // after the last round, all of V(D_end).
  Ideal D(result.ring);
  Ideal K = Ideal::unit(result.ring);
  for (const ConstructiblePiece& piece : pieces) {
    for (const Polynomial& g : piece.closed.generators())
      K = intersectIdeals(K, saturate(D, g));
    D = piece.closed + piece.removed;
  }
  K = intersectIdeals(K, D);
  // The complement is closed exactly when V(K) meets no piece.
  for (const ConstructiblePiece& piece : pieces) {
    const Ideal onPiece = K + piece.closed;
    for (const Polynomial& g : piece.removed.generators())
      if (!radicalMembership(g, onPiece)) return std::nullopt;
  }
  return Ideal::fromGroebnerBasis(K.ring(), K.groebnerBasis(), TermOrder::grevlex());
}

Ideal sliceToImageDimension(const PolynomialMap& F, const Ideal& constraints,
                            std::uint64_t seed, unsigned retries) {
  const Ideal K = inDomain(constraints, F.domainRing());
  const Ideal G = graphIdeal(F, K);
  const Ideal closure = imageClosure(G);
  const int imageDim = dimensionOfIdeal(closure);
  if (dimensionOfIdeal(G) <= imageDim) return K;
  std::mt19937_64 rng(seed);
  Slice s = sliceGraph(G, closure, imageDim, rng, retries);
  Ideal out = K;
  for (const Polynomial& f : s.forms) out = out + changeRing(f, F.domainRing());
  return out;
}

}  // namespace affimg
