#include "affimg/verifier.hpp"

#include <random>

#include "affimg/errors.hpp"
#include "affimg/parallel.hpp"

namespace affimg {

const char* variantName(Variant v) {
  return v == Variant::TheoremMain ? "theorem-main" : "pure-powers";
}

std::optional<Variant> parseVariant(std::string_view name) {
  if (name == "theorem-main") return Variant::TheoremMain;
  if (name == "pure-powers") return Variant::PurePowers;
  return std::nullopt;
}

std::size_t Certificate::offTargetCount() const {
  std::size_t k = 0;
  for (const auto& s : fiberSamples) k += !s.onTarget;
  return k;
}

std::size_t Certificate::onTargetCount() const {
  return fiberSamples.size() - offTargetCount();
}

bool Certificate::fibersOk() const {
  for (const auto& s : fiberSamples)
    if (!s.ok()) return false;
  return true;
}

bool Certificate::verdict() const {
  return avoidanceCheck && complementIdealMatch && fibersOk() &&
         (!degreeBound || degreeBound->ok);
}

bool avoidsIdeal(const PolynomialMap& F, const Ideal& IZ) {
  if (!(IZ.ring() == F.codomainRing())) throw DomainError("target is not in the codomain ring");
  const Ideal G = graphIdeal(F, Ideal(F.domainRing()));
  return containsOne(G + IZ.inRing(G.ring()));
}

bool avoidsTarget(const PolynomialMap& F, const TargetVariety& Z) {
  return avoidsIdeal(F, Z.ideal());
}

bool fiberNonempty(const PolynomialMap& F, std::span<const Rational> w0) {
  if (w0.size() != F.codomainRing().size()) throw DomainError("fiber point has the wrong arity");
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < w0.size(); ++i)
    gens.push_back(F.coordinate(i) - Polynomial::constant(F.domainRing(), w0[i]));
  return !containsOne(Ideal(F.domainRing(), std::move(gens)));
}

DegreeAudit checkDegreeBound(const PolynomialMap& F, const TargetVariety& Z, Variant variant) {
  DegreeAudit a;
  a.observed = F.totalDegree();
  if (variant == Variant::TheoremMain)
    a.bound = Z.m() * ExponentSchedule::forTarget(Z).p.back();
  else
    a.bound = Z.m() * (Z.maxDegree() + 1) + 1;
  a.ok = a.observed <= a.bound;
  return a;
}

Certificate verifySurjection(const PolynomialMap& F, const Ideal& IZ,
                             const VerifyOptions& options) {
  Certificate cert;
  cert.requestedOffTarget = options.offTargetSamples;
  cert.requestedOnTarget = options.onTargetSamples;
  cert.avoidanceCheck = avoidsIdeal(F, IZ);
  ImageOptions io;
  io.seed = options.seed;
  io.jobs = options.jobs;
  cert.image = constructibleImage(F, Ideal(F.domainRing()), io);
  cert.complement = complementIdeal(cert.image.set, F.codomainRing().size());
  cert.complementIdealMatch =
      cert.complement && idealEqualityUpToRadical(*cert.complement, IZ);

  // Sampling draws from a stream independent of the image computation.
  std::mt19937_64 rng(options.seed ^ 0x9e3779b97f4a7c15ULL);
  const std::size_t n = F.codomainRing().size();
  std::vector<FiberSample> samples;
  std::vector<Point> onPoints;
  for (std::size_t k = 0; k < options.onTargetSamples; ++k) {
    auto p = randomPointOn(IZ, rng);
    if (!p) break;
    onPoints.push_back(*p);
    samples.push_back({std::move(*p), true, false});
  }
  std::size_t off = 0;
  for (unsigned guard = 0; off < options.offTargetSamples && guard < 100 * (1 + options.offTargetSamples); ++guard) {
    Point p;
    // Every other sample is an on-target point moved in one coordinate, so
    // the neighbourhood of V(IZ) gets probed as well.
    if (!onPoints.empty() && off % 2 == 1) {
      std::uniform_int_distribution<std::size_t> which(0, onPoints.size() - 1);
      std::uniform_int_distribution<std::size_t> coord(0, n - 1);
      p = onPoints[which(rng)];
      p[coord(rng)] += randomGridPoint(1, rng)[0];
    } else {
      p = randomGridPoint(n, rng);
    }
    if (vanishesAt(IZ, p)) continue;
    samples.push_back({std::move(p), false, false});
    ++off;
  }
  detail::parallelFor(samples.size(), options.jobs, [&](std::size_t i) {
    samples[i].fiberNonempty = fiberNonempty(F, samples[i].point);
  });
  cert.fiberSamples = std::move(samples);
  return cert;
}

Certificate verifySurjection(const PolynomialMap& F, const TargetVariety& Z,
                             const VerifyOptions& options) {
  Certificate cert = verifySurjection(F, Z.ideal(), options);
  if (options.variant) cert.degreeBound = checkDegreeBound(F, Z, *options.variant);
  return cert;
}

}  // namespace affimg
