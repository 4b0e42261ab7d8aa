#include "affimg/cli/problem_file.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "affimg/errors.hpp"

namespace affimg::cli {
namespace {

struct Entry {
  std::string section;
  std::string key;
  std::string value;
  SourcePosition keyAt;
  SourcePosition valueAt;
};

struct Piece {
  std::string text;
  SourcePosition at;
};

bool isSpace(char c) { return c == ' ' || c == '\t'; }

Piece trimmed(std::string_view s, SourcePosition at) {
  std::size_t b = 0, e = s.size();
  while (b < e && isSpace(s[b])) ++b;
  while (e > b && isSpace(s[e - 1])) --e;
  return {std::string(s.substr(b, e - b)), {at.line, at.column + b}};
}

std::vector<Piece> splitOn(const Piece& p, char sep) {
  std::vector<Piece> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= p.text.size(); ++i) {
    if (i == p.text.size() || p.text[i] == sep) {
      out.push_back(trimmed(std::string_view(p.text).substr(start, i - start),
                            {p.at.line, p.at.column + start}));
      start = i + 1;
    }
  }
  return out;
}

std::vector<Entry> tokenize(std::string_view text) {
  static const std::set<std::string> kSections = {"ring", "target", "map", "actions",
                                                  "options"};
  std::vector<Entry> entries;
  std::string section;
  std::size_t lineNo = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++lineNo;
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    Piece whole = trimmed(line, {lineNo, 1});
    if (whole.text.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (whole.text.front() == '[') {
      if (whole.text.back() != ']')
        throw ParseError("malformed section header", lineNo, whole.at.column);
      std::string name = trimmed(std::string_view(whole.text).substr(1, whole.text.size() - 2),
                                 whole.at).text;
      if (!kSections.count(name))
        throw ParseError("unknown section [" + name + "]", lineNo, whole.at.column);
      section = name;
      continue;
    }
    auto eq = whole.text.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected 'key = value'", lineNo, whole.at.column);
    if (section.empty())
      throw ParseError("entry outside of any section", lineNo, whole.at.column);
    Piece key = trimmed(std::string_view(whole.text).substr(0, eq), whole.at);
    Piece value = trimmed(std::string_view(whole.text).substr(eq + 1),
                          {lineNo, whole.at.column + eq + 1});
    if (key.text.empty()) throw ParseError("missing key", lineNo, whole.at.column);
    if (value.text.empty())
      throw ParseError("missing value for '" + key.text + "'", lineNo, value.at.column);
    entries.push_back({section, key.text, value.text, key.at, value.at});
    if (end == text.size()) break;
  }
  return entries;
}

bool validName(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::vector<std::string> nameList(const Entry& e) {
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (const Piece& p : splitOn({e.value, e.valueAt}, ',')) {
    if (!validName(p.text))
      throw ParseError("invalid variable name '" + p.text + "'", p.at.line, p.at.column);
    if (!seen.insert(p.text).second)
      throw ParseError("duplicate variable '" + p.text + "'", p.at.line, p.at.column);
    names.push_back(p.text);
  }
  return names;
}

template <class T>
T unsignedValue(const Entry& e, T minimum = 0) {
  unsigned long long v = 0;
  const char* first = e.value.data();
  const char* last = first + e.value.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || v > static_cast<unsigned long long>(T(-1)))
    throw ParseError("expected a nonnegative integer for '" + e.key + "'", e.valueAt.line,
                     e.valueAt.column);
  if (v < minimum)
    throw ParseError("'" + e.key + "' must be at least " + std::to_string(minimum),
                     e.valueAt.line, e.valueAt.column);
  return static_cast<T>(v);
}

bool boolValue(const Entry& e) {
  if (e.value == "true" || e.value == "yes" || e.value == "1") return true;
  if (e.value == "false" || e.value == "no" || e.value == "0") return false;
  throw ParseError("expected true or false for '" + e.key + "'", e.valueAt.line,
                   e.valueAt.column);
}

[[noreturn]] void unknownKey(const Entry& e) {
  throw ParseError("unknown key '" + e.key + "' in [" + e.section + "]", e.keyAt.line,
                   e.keyAt.column);
}

void rejectDuplicate(std::set<std::string>& seen, const Entry& e) {
  if (!seen.insert(e.section + "." + e.key).second)
    throw ParseError("duplicate key '" + e.key + "'", e.keyAt.line, e.keyAt.column);
}

ActionSpec parseAction(const Entry& e, const RingContext& codomain) {
  ActionSpec spec;
  spec.at = e.valueAt;
  const auto colon = e.value.find(':');
  if (colon == std::string::npos)
    throw ParseError("expected 'winkelmann i : parameter' or 'explicit t : f1, ..., fn'",
                     e.valueAt.line, e.valueAt.column);
  Piece head = trimmed(std::string_view(e.value).substr(0, colon), e.valueAt);
  Piece tail = trimmed(std::string_view(e.value).substr(colon + 1),
                       {e.valueAt.line, e.valueAt.column + colon + 1});
  std::istringstream words(head.text);
  std::string kind, arg, extra;
  words >> kind >> arg;
  if (words >> extra)
    throw ParseError("unexpected '" + extra + "' in action", head.at.line, head.at.column);
  if (kind == "winkelmann") {
    spec.kind = ActionSpec::Kind::Winkelmann;
    std::size_t i = 0;
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), i);
    if (arg.empty() || ec != std::errc() || ptr != arg.data() + arg.size() || i == 0 ||
        i > codomain.size())
      throw ParseError("winkelmann coordinate must be in 1.." +
                           std::to_string(codomain.size()),
                       head.at.line, head.at.column);
    spec.coordinate = i - 1;
    if (!validName(tail.text))
      throw ParseError("invalid parameter name '" + tail.text + "'", tail.at.line,
                       tail.at.column);
    spec.parameter = tail.text;
  } else if (kind == "explicit") {
    spec.kind = ActionSpec::Kind::Explicit;
    if (!validName(arg))
      throw ParseError("invalid parameter name '" + arg + "'", head.at.line, head.at.column);
    spec.parameter = arg;
  } else {
    throw ParseError("unknown action kind '" + kind + "'", head.at.line, head.at.column);
  }
  if (codomain.contains(spec.parameter))
    throw ParseError("parameter '" + spec.parameter + "' clashes with a codomain variable",
                     head.at.line, head.at.column);
  if (spec.kind == ActionSpec::Kind::Explicit) {
    std::string p = spec.parameter;
    RingContext ring = codomain.appended(std::span<const std::string>(&p, 1));
    auto parts = splitOn(tail, ',');
    if (parts.size() != codomain.size())
      throw ParseError("explicit action needs " + std::to_string(codomain.size()) +
                           " coordinates, got " + std::to_string(parts.size()),
                       tail.at.line, tail.at.column);
    for (const Piece& part : parts) spec.formula.push_back(parsePolynomial(part.text, ring, part.at));
  }
  return spec;
}

}  // namespace

TargetVariety ProblemFile::targetVariety() const {
  if (!generators.empty())
    throw DomainError("target is given by generator lines, not by q lines");
  if (q.empty()) throw DomainError("problem has no [target] q lines");
  return TargetVariety(codomain, q);
}

Ideal ProblemFile::targetIdeal() const {
  if (!generators.empty()) return Ideal(codomain, generators);
  return targetVariety().ideal();
}

Ideal ProblemFile::constraintIdeal() const {
  if (!map) throw DomainError("problem has no [map]");
  return Ideal(map->domainRing(), constraints);
}

ProblemFile parseProblem(std::string_view text, std::string source) {
  const std::vector<Entry> entries = tokenize(text);
  ProblemFile out;
  out.source = std::move(source);
  std::set<std::string> seen;

  std::optional<std::vector<std::string>> codomainNames;
  std::optional<std::size_t> n;
  SourcePosition nAt;
  for (const Entry& e : entries) {
    if (e.section != "ring") continue;
    rejectDuplicate(seen, e);
    if (e.key == "codomain") {
      codomainNames = nameList(e);
    } else if (e.key == "domain") {
      out.domain = RingContext(nameList(e));
    } else if (e.key == "n") {
      n = unsignedValue<std::size_t>(e, 1);
      nAt = e.valueAt;
    } else {
      unknownKey(e);
    }
  }
  if (!codomainNames && !n) throw ParseError("[ring] needs 'codomain' or 'n'", 1, 1);
  if (codomainNames && n && codomainNames->size() != *n)
    throw ParseError("'n' disagrees with the codomain list", nAt.line, nAt.column);
  if (!codomainNames) {
    codomainNames.emplace();
    for (std::size_t i = 1; i <= *n; ++i) codomainNames->push_back("w" + std::to_string(i));
  }
  if (codomainNames->size() > kMaxVariables)
    throw ParseError("too many codomain variables", 1, 1);
  out.codomain = RingContext(*codomainNames);
  if (out.domain) {
    for (const auto& name : out.domain->names())
      if (out.codomain.contains(name))
        throw ParseError("variable '" + name + "' is in both domain and codomain", 1, 1);
  }

  std::map<std::string, Polynomial> coords;
  bool anyMap = false;
  for (const Entry& e : entries) {
    if (e.section == "ring") continue;
    if (e.section == "target") {
      if (e.key == "q") {
        out.q.push_back(parsePolynomial(e.value, out.codomain, e.valueAt));
      } else if (e.key == "generator") {
        out.generators.push_back(parsePolynomial(e.value, out.codomain, e.valueAt));
      } else {
        unknownKey(e);
      }
      if (!out.q.empty() && !out.generators.empty())
        throw ParseError("[target] mixes 'q' and 'generator' lines", e.keyAt.line,
                         e.keyAt.column);
    } else if (e.section == "map") {
      anyMap = true;
      if (!out.domain)
        throw ParseError("[map] needs a [ring] domain list", e.keyAt.line, e.keyAt.column);
      if (e.key == "constraint") {
        out.constraints.push_back(parsePolynomial(e.value, *out.domain, e.valueAt));
      } else if (out.codomain.contains(e.key)) {
        rejectDuplicate(seen, e);
        coords.emplace(e.key, parsePolynomial(e.value, *out.domain, e.valueAt));
      } else {
        unknownKey(e);
      }
    } else if (e.section == "actions") {
      if (e.key == "action") {
        out.actions.push_back(parseAction(e, out.codomain));
      } else if (e.key == "point") {
        rejectDuplicate(seen, e);
        Point p;
        for (const Piece& part : splitOn({e.value, e.valueAt}, ','))
          p.push_back(parseRational(part.text, part.at));
        if (p.size() != out.codomain.size())
          throw ParseError("point needs " + std::to_string(out.codomain.size()) +
                               " coordinates",
                           e.valueAt.line, e.valueAt.column);
        out.point = std::move(p);
      } else if (e.key == "restrict") {
        const auto arrow = e.value.find("->");
        if (arrow == std::string::npos)
          throw ParseError("expected 'restrict = variable -> expression'", e.valueAt.line,
                           e.valueAt.column);
        Piece var = trimmed(std::string_view(e.value).substr(0, arrow), e.valueAt);
        Piece rhs = trimmed(std::string_view(e.value).substr(arrow + 2),
                            {e.valueAt.line, e.valueAt.column + arrow + 2});
        if (!validName(var.text))
          throw ParseError("invalid variable name '" + var.text + "'", var.at.line,
                           var.at.column);
        if (rhs.text.empty())
          throw ParseError("missing expression", rhs.at.line, rhs.at.column);
        out.restrictions.push_back({var.text, rhs.text, rhs.at});
      } else {
        unknownKey(e);
      }
    } else if (e.section == "options") {
      rejectDuplicate(seen, e);
      auto& o = out.options;
      if (e.key == "variant") {
        o.variant = parseVariant(e.value);
        if (!o.variant)
          throw ParseError("unknown variant '" + e.value + "'", e.valueAt.line,
                           e.valueAt.column);
      } else if (e.key == "seed") {
        o.seed = unsignedValue<std::uint64_t>(e);
      } else if (e.key == "samples") {
        o.samples = unsignedValue<std::size_t>(e);
      } else if (e.key == "on-samples") {
        o.onSamples = unsignedValue<std::size_t>(e);
      } else if (e.key == "jobs") {
        o.jobs = unsignedValue<unsigned>(e, 1);
      } else if (e.key == "round-limit") {
        o.roundLimit = unsignedValue<std::size_t>(e, 1);
      } else if (e.key == "slice-retries") {
        o.sliceRetries = unsignedValue<unsigned>(e, 1);
      } else if (e.key == "generic-change") {
        o.genericChange = boolValue(e);
      } else if (e.key == "image") {
        o.image = boolValue(e);
      } else {
        unknownKey(e);
      }
    }
  }

  if (anyMap) {
    std::vector<Polynomial> list;
    for (const auto& name : out.codomain.names()) {
      auto it = coords.find(name);
      if (it == coords.end())
        throw ParseError("[map] is missing coordinate '" + name + "'", 1, 1);
      list.push_back(it->second);
    }
    out.map = PolynomialMap(*out.domain, out.codomain, std::move(list));
  }
  return out;
}

ProblemFile loadProblem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'", 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parseProblem(buf.str(), path);
}

}  // namespace affimg::cli
