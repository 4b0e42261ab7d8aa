#include "affimg/cli/report.hpp"

#include <sstream>

namespace affimg::cli {

std::string renderRational(const Rational& r) { return r.get_str(); }

std::string renderPoint(std::span<const Rational> p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + renderRational(p[i]);
  return s + ")";
}

std::string renderIdeal(const Ideal& I) {
  const auto& gb = I.groebnerBasis();
  if (gb.empty()) return "(0)";
  std::string s = "(";
  for (std::size_t i = 0; i < gb.size(); ++i) s += (i ? ", " : "") + gb[i].toString();
  return s + ")";
}

std::string renderMap(const PolynomialMap& F) {
  std::ostringstream os;
  for (std::size_t i = 0; i < F.coordinates().size(); ++i)
    os << "  " << F.codomainRing().name(i) << " = " << F.coordinate(i).toString() << "\n";
  return os.str();
}

Json toJson(const Polynomial& p) { return p.toString(); }

Json toJson(const Ideal& I) {
  Json arr = Json::array();
  for (const auto& g : I.groebnerBasis()) arr.push_back(g.toString());
  return arr;
}

namespace {

Json generatorsJson(const Ideal& I) {
  Json arr = Json::array();
  for (const auto& g : I.generators()) arr.push_back(g.toString());
  return arr;
}

Json pointJson(std::span<const Rational> p) {
  Json arr = Json::array();
  for (const auto& x : p) arr.push_back(renderRational(x));
  return arr;
}

}  // namespace

Json toJson(const PolynomialMap& F) {
  Json coords = Json::array();
  for (const auto& c : F.coordinates()) coords.push_back(c.toString());
  return Json{{"domain", F.domainRing().names()},
              {"codomain", F.codomainRing().names()},
              {"coordinates", coords},
              {"degree", F.totalDegree()}};
}

Json toJson(const ConstructibleSet& set) {
  Json pieces = Json::array();
  for (const auto& piece : set.pieces)
    pieces.push_back({{"closed", toJson(piece.closed)}, {"removed", toJson(piece.removed)}});
  return Json{{"ring", set.ring.names()}, {"pieces", pieces}};
}

Json toJson(const ImageTrace& trace) {
  Json rounds = Json::array();
  for (std::size_t k = 0; k < trace.rounds.size(); ++k) {
    const ImageRound& r = trace.rounds[k];
    Json charts = Json::array();
    for (const auto& c : r.boundary.charts) charts.push_back(generatorsJson(c));
    Json j{{"round", k + 1},
           {"graph", generatorsJson(r.graph)},
           {"graphBasisSize", r.graph.someGroebnerBasis().size()},
           {"domainDimension", r.domainDimension},
           {"imageDimension", r.imageDimension},
           {"sliced", r.sliced}};
    if (r.sliced) j["working"] = generatorsJson(r.working);
    j["closure"] = generatorsJson(r.closure);
    j["atInfinity"] = generatorsJson(r.boundary.atInfinity);
    j["atInfinityBasisSize"] = r.boundary.atInfinity.generators().size();
    j["charts"] = charts;
    j["boundary"] = generatorsJson(r.boundary.boundary);
    rounds.push_back(std::move(j));
  }
  return Json{{"rounds", rounds}, {"finalGraph", generatorsJson(trace.finalGraph)}};
}

Json toJson(const Certificate& cert) {
  Json samples = Json::array();
  for (const auto& s : cert.fiberSamples)
    samples.push_back({{"point", pointJson(s.point)},
                       {"onTarget", s.onTarget},
                       {"fiberNonempty", s.fiberNonempty},
                       {"ok", s.ok()}});
  Json j{{"verdict", cert.verdict()},
         {"avoidance", cert.avoidanceCheck},
         {"complement", cert.complement ? toJson(*cert.complement) : Json(nullptr)},
         {"complementMatchesTarget", cert.complementIdealMatch},
         {"fibers",
          {{"ok", cert.fibersOk()},
           {"offTargetRequested", cert.requestedOffTarget},
           {"offTargetSampled", cert.offTargetCount()},
           {"onTargetRequested", cert.requestedOnTarget},
           {"onTargetSampled", cert.onTargetCount()},
           {"samples", samples}}}};
  if (cert.degreeBound)
    j["degreeBound"] = {{"observed", cert.degreeBound->observed},
                        {"bound", cert.degreeBound->bound},
                        {"ok", cert.degreeBound->ok}};
  else
    j["degreeBound"] = nullptr;
  j["image"] = {{"set", toJson(cert.image.set)}, {"trace", toJson(cert.image.trace)}};
  return j;
}

std::string summarizeImage(const ImageResult& result,
                           const std::optional<Ideal>& complement) {
  std::ostringstream os;
  const auto& rounds = result.trace.rounds;
  os << "rounds: " << rounds.size() << "\n";
  for (std::size_t k = 0; k < rounds.size(); ++k) {
    const ImageRound& r = rounds[k];
    os << "round " << k + 1 << ": dim graph " << r.domainDimension << ", dim closure "
       << r.imageDimension << (r.sliced ? " (sliced)" : "") << "\n";
    os << "  closure  " << renderIdeal(r.closure) << "\n";
    for (std::size_t c = 0; c < r.boundary.charts.size(); ++c)
      os << "  chart " << c + 1 << "  " << renderIdeal(r.boundary.charts[c]) << "\n";
    os << "  boundary " << renderIdeal(r.boundary.boundary) << "\n";
  }
  os << "pieces:\n";
  for (const auto& piece : result.set.pieces)
    os << "  V" << renderIdeal(piece.closed) << " \\ V" << renderIdeal(piece.removed)
       << "\n";
  const std::size_t n = result.set.ring.size();
  const bool closedImage = result.set.pieces.size() == 1 &&
                           containsOne(result.set.pieces.front().removed);
  if (closedImage && !(complement && containsOne(*complement)))
    os << "image = V" << renderIdeal(result.set.pieces.front().closed) << " (closed)\n";
  if (!complement) {
    os << "complement: not closed\n";
  } else if (containsOne(*complement)) {
    os << "image = A^" << n << "\n";
  } else {
    os << "complement: V" << renderIdeal(*complement) << "\n";
    os << "image = A^" << n << " \\ V" << renderIdeal(*complement) << "\n";
  }
  return os.str();
}

std::string summarizeCertificate(const Certificate& cert) {
  std::ostringstream os;
  auto mark = [](bool ok) { return ok ? "PASS" : "FAIL"; };
  os << "avoidance:   " << mark(cert.avoidanceCheck) << "\n";
  os << "complement:  "
     << (cert.complement ? "V" + renderIdeal(*cert.complement) : std::string("not closed"))
     << "\n";
  os << "covers rest: " << mark(cert.complementIdealMatch) << "\n";
  std::size_t offOk = 0, onOk = 0;
  for (const auto& s : cert.fiberSamples) (s.onTarget ? onOk : offOk) += s.ok();
  os << "fibers:      " << mark(cert.fibersOk()) << " (off target " << offOk << "/"
     << cert.offTargetCount() << " nonempty of " << cert.requestedOffTarget
     << " requested, on target " << onOk << "/" << cert.onTargetCount() << " empty of "
     << cert.requestedOnTarget << " requested)\n";
  std::size_t bad = 0;
  for (const auto& s : cert.fiberSamples) {
    if (s.ok()) continue;
    if (++bad <= 5)
      os << "  bad fiber at " << renderPoint(s.point)
         << (s.onTarget ? " (on target, nonempty)" : " (off target, empty)") << "\n";
  }
  if (bad > 5) os << "  ... " << bad - 5 << " more bad fibers\n";
  if (cert.degreeBound)
    os << "degree:      " << mark(cert.degreeBound->ok) << " (" << cert.degreeBound->observed
       << " <= " << cert.degreeBound->bound << ")\n";
  os << "verdict:     " << mark(cert.verdict()) << "\n";
  return os.str();
}

}  // namespace affimg::cli
