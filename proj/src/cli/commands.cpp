#include "affimg/cli/commands.hpp"

#include <sstream>

#include "affimg/errors.hpp"

namespace affimg::cli {
namespace {

struct Settings {
  std::uint64_t seed = 1;
  std::size_t samples = 20;
  std::size_t onSamples = 20;
  unsigned jobs = 1;
  std::optional<Variant> variant;
  bool genericChange = false;
};

Settings resolve(const ProblemFile& file, const CommandOptions& o) {
  const ProblemOptions& f = file.options;
  Settings s;
  s.seed = o.seed.value_or(f.seed.value_or(1));
  s.samples = o.samples.value_or(f.samples.value_or(20));
  s.onSamples = f.onSamples.value_or(s.samples);
  s.jobs = o.jobs.value_or(f.jobs.value_or(1));
  s.variant = o.variant ? o.variant : f.variant;
  s.genericChange = o.genericChange || f.genericChange;
  return s;
}

Json header(const char* command, const ProblemFile& file) {
  return Json{{"schema", 1}, {"command", command}, {"input", file.source}};
}

ImageOptions imageOptions(const ProblemFile& file, const Settings& s) {
  ImageOptions o;
  o.seed = s.seed;
  o.jobs = s.jobs;
  if (file.options.sliceRetries) o.sliceRetries = *file.options.sliceRetries;
  if (file.options.roundLimit) o.roundLimit = *file.options.roundLimit;
  return o;
}

Json targetJson(const ProblemFile& file) {
  Json j{{"codomain", file.codomain.names()}};
  if (!file.q.empty()) {
    Json q = Json::array();
    for (const auto& p : file.q) q.push_back(p.toString());
    j["q"] = q;
  }
  j["ideal"] = toJson(file.targetIdeal());
  return j;
}

void finish(Report& r) { r.json["exitCode"] = r.exitCode; }

// Runs the image algorithm, filling the report; a round-limit failure
// becomes an engine error carrying the partial trace.
std::optional<ImageResult> imageInto(Report& r, Json& slot, std::ostringstream& text,
                                     const PolynomialMap& F, const Ideal& constraints,
                                     const ImageOptions& options) {
  try {
    ImageResult result = constructibleImage(F, constraints, options);
    const auto complement = complementIdeal(result.set, F.codomainRing().size());
    slot["set"] = toJson(result.set);
    slot["complement"] = complement ? toJson(*complement) : Json(nullptr);
    slot["imageIsAffineSpace"] = complement && containsOne(*complement);
    slot["trace"] = toJson(result.trace);
    text << summarizeImage(result, complement);
    return result;
  } catch (const RoundLimitError& e) {
    slot["trace"] = toJson(e.trace());
    slot["error"] = e.what();
    text << "error: " << e.what() << "\n";
    text << "partial trace: " << e.trace().rounds.size() << " rounds\n";
    r.exitCode = kExitEngineError;
    return std::nullopt;
  }
}

}  // namespace

Report runConstruct(const ProblemFile& file, const CommandOptions& options) {
  const Settings s = resolve(file, options);
  const TargetVariety Z = file.targetVariety();
  const Variant variant = s.variant.value_or(Variant::TheoremMain);
  std::vector<std::string> names;
  if (file.domain) names = file.domain->names();

  Report r;
  r.json = header("construct", file);
  r.json["variant"] = variantName(variant);
  r.json["target"] = targetJson(file);
  std::ostringstream text;
  text << "construct " << variantName(variant) << " for Z = V" << renderIdeal(Z.ideal())
       << "\n";

  PolynomialMap F;
  Json change = nullptr;
  if (variant == Variant::TheoremMain) {
    F = restrictTheoremMain(Z, names);
  } else if (hasPurePowers(Z)) {
    F = restrictPurePowers(Z, names);
  } else if (!s.genericChange) {
    throw DomainError("pure-powers needs a nonzero " + Z.ring().name(Z.n() - 1) +
                      "^d_j term in every q_j; rerun with --generic-change to apply a "
                      "generic linear change first");
  } else {
    const LinearChange lc = genericLinearChange(Z, s.seed);
    const PolynomialMap inner = restrictPurePowers(lc.transformed, names);
    F = conjugateByAutomorphism(inner, lc.tau, lc.tauInverse);
    change = {{"seed", s.seed},
              {"shifts", lc.shifts},
              {"tau", toJson(lc.tau)},
              {"tauInverse", toJson(lc.tauInverse)},
              {"transformedQ", Json::array()}};
    for (const auto& q : lc.transformed.q()) change["transformedQ"].push_back(q.toString());
    text << "linear change: tau = " << lc.tau.toString() << "\n";
  }
  const DegreeAudit audit = checkDegreeBound(F, Z, variant);
  r.json["linearChange"] = change;
  r.json["map"] = toJson(F);
  r.json["degree"] = {{"observed", audit.observed}, {"bound", audit.bound}, {"ok", audit.ok}};
  text << "F(" ;
  for (std::size_t i = 0; i < F.domainRing().size(); ++i)
    text << (i ? ", " : "") << F.domainRing().name(i);
  text << "):\n" << renderMap(F);
  text << "degree: " << audit.observed << " (bound " << audit.bound << ", "
       << (audit.ok ? "within" : "EXCEEDED") << ")\n";
  r.summary = text.str();
  finish(r);
  return r;
}

Report runImage(const ProblemFile& file, const CommandOptions& options) {
  if (!file.map) throw DomainError("image needs a [map] section");
  const Settings s = resolve(file, options);
  Report r;
  r.json = header("image", file);
  r.json["seed"] = s.seed;
  r.json["map"] = toJson(*file.map);
  std::ostringstream text;
  text << "image of F = " << file.map->toString() << "\n";
  Json slot = Json::object();
  imageInto(r, slot, text, *file.map, file.constraintIdeal(), imageOptions(file, s));
  r.json["image"] = slot;
  r.summary = text.str();
  finish(r);
  return r;
}

Report runVerify(const ProblemFile& file, const CommandOptions& options) {
  if (!file.map) throw DomainError("verify needs a [map] section");
  if (!file.hasTarget()) throw DomainError("verify needs a [target] section");
  if (!file.constraints.empty())
    throw DomainError("verify takes maps defined on all of affine space; drop 'constraint'");
  const Settings s = resolve(file, options);
  VerifyOptions vo;
  vo.offTargetSamples = s.samples;
  vo.onTargetSamples = s.onSamples;
  vo.seed = s.seed;
  vo.jobs = s.jobs;
  vo.variant = s.variant;
  const Certificate cert = file.q.empty()
                               ? verifySurjection(*file.map, file.targetIdeal(), vo)
                               : verifySurjection(*file.map, file.targetVariety(), vo);
  Report r;
  r.json = header("verify", file);
  r.json["seed"] = s.seed;
  r.json["variant"] = s.variant ? Json(variantName(*s.variant)) : Json(nullptr);
  r.json["map"] = toJson(*file.map);
  r.json["target"] = targetJson(file);
  r.json["certificate"] = toJson(cert);
  r.exitCode = cert.verdict() ? kExitOk : kExitVerifyFailed;
  std::ostringstream text;
  text << "verify F = " << file.map->toString() << "\n";
  text << "target Z = V" << renderIdeal(file.targetIdeal()) << "\n";
  text << summarizeCertificate(cert);
  r.summary = text.str();
  finish(r);
  return r;
}

PolynomialMap orbitMap(const ProblemFile& file) {
  if (!file.point) throw DomainError("orbit needs a base point");
  std::vector<ParametricAction> actions;
  std::optional<Ideal> target;
  for (std::size_t k = 0; k < file.actions.size(); ++k) {
    const ActionSpec& spec = file.actions[k];
    if (spec.kind == ActionSpec::Kind::Winkelmann) {
      if (!target) {
        if (!file.hasTarget()) throw DomainError("winkelmann actions need a [target] section");
        target = file.targetIdeal();
      }
      actions.push_back(winkelmannGenerator(*target, spec.coordinate, spec.parameter));
      continue;
    }
    ParametricAction a = ParametricAction::make(file.codomain, spec.parameter, spec.formula);
    const std::string where = "action " + std::to_string(k + 1) + " (line " +
                              std::to_string(spec.at.line) + ")";
    const std::string& t = spec.parameter;
    if (!a.satisfiesIdentity())
      throw DomainError(where + " violates phi(0, w) = w");
    if (!a.satisfiesGroupLaw())
      throw DomainError(where + " violates phi(s, phi(" + t + ", w)) = phi(s + " + t +
                        ", w)");
    actions.push_back(std::move(a));
  }
  PolynomialMap F = composeActions(actions, *file.point, file.codomain);
  for (const RestrictSpec& rs : file.restrictions) {
    if (!F.domainRing().contains(rs.variable))
      throw ParseError("restrict: '" + rs.variable + "' is not an action parameter",
                       rs.at.line, rs.at.column);
    const std::string var = rs.variable;
    const RingContext rest = F.domainRing().without(std::span<const std::string>(&var, 1));
    Restriction r;
    r.substitution.emplace(var, parsePolynomial(rs.expression, rest, rs.at));
    F = restrictToSubvariety(F, r);
  }
  return F;
}

Report runOrbit(const ProblemFile& file, const CommandOptions& options) {
  const Settings s = resolve(file, options);
  const PolynomialMap F = orbitMap(file);
  Report r;
  r.json = header("orbit", file);
  r.json["point"] = Json::array();
  for (const auto& x : *file.point) r.json["point"].push_back(renderRational(x));
  Json actions = Json::array();
  for (const auto& spec : file.actions) {
    if (spec.kind == ActionSpec::Kind::Winkelmann) {
      actions.push_back({{"kind", "winkelmann"},
                         {"coordinate", spec.coordinate + 1},
                         {"parameter", spec.parameter}});
    } else {
      Json f = Json::array();
      for (const auto& p : spec.formula) f.push_back(p.toString());
      actions.push_back({{"kind", "explicit"}, {"parameter", spec.parameter}, {"formula", f}});
    }
  }
  r.json["actions"] = actions;
  Json restrictions = Json::array();
  for (const auto& rs : file.restrictions)
    restrictions.push_back({{"variable", rs.variable}, {"value", rs.expression}});
  r.json["restrictions"] = restrictions;
  r.json["map"] = toJson(F);
  std::ostringstream text;
  text << "orbit map F(";
  for (std::size_t i = 0; i < F.domainRing().size(); ++i)
    text << (i ? ", " : "") << F.domainRing().name(i);
  text << "):\n" << renderMap(F);
  if (file.options.image) {
    r.json["seed"] = s.seed;
    Json slot = Json::object();
    imageInto(r, slot, text, F, Ideal(F.domainRing()), imageOptions(file, s));
    r.json["image"] = slot;
  } else {
    r.json["image"] = nullptr;
  }
  r.summary = text.str();
  finish(r);
  return r;
}

Report runCommand(std::string_view command, const std::string& path,
                  const CommandOptions& options) {
  Report r;
  auto fail = [&](int code, const char* kind, const std::string& message) {
    r = Report{};
    r.json = Json{{"schema", 1},
                  {"command", std::string(command)},
                  {"input", path},
                  {"error", {{"kind", kind}, {"message", message}}}};
    r.exitCode = code;
    r.summary = std::string(kind) + ": " + message + "\n";
    finish(r);
  };
  try {
    const ProblemFile file = loadProblem(path);
    if (command == "construct") return runConstruct(file, options);
    if (command == "image") return runImage(file, options);
    if (command == "verify") return runVerify(file, options);
    if (command == "orbit") return runOrbit(file, options);
    fail(kExitInputError, "input error", "unknown command '" + std::string(command) + "'");
  } catch (const ParseError& e) {
    fail(kExitInputError, "input error", path + ":" + e.what());
  } catch (const DomainError& e) {
    fail(kExitInputError, "input error", e.what());
  } catch (const UnsupportedError& e) {
    fail(kExitInputError, "input error", e.what());
  } catch (const GenericityError& e) {
    fail(kExitEngineError, "engine error", e.what());
  } catch (const std::exception& e) {
    fail(kExitEngineError, "engine error", e.what());
  }
  return r;
}

}  // namespace affimg::cli
