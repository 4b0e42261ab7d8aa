#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "affimg/cli/parser.hpp"
#include "affimg/ideal.hpp"
#include "affimg/polynomial_map.hpp"
#include "affimg/rational_points.hpp"
#include "affimg/surjection.hpp"
#include "affimg/verifier.hpp"

namespace affimg::cli {

struct ActionSpec {
  enum class Kind { Winkelmann, Explicit };
  Kind kind = Kind::Explicit;
  std::string parameter;
  std::size_t coordinate = 0;        // Winkelmann, 0-based
  std::vector<Polynomial> formula;   // Explicit, in codomain + parameter
  SourcePosition at;
};

struct RestrictSpec {
  std::string variable;
  std::string expression;  // parsed once the parameter ring is known
  SourcePosition at;
};

struct ProblemOptions {
  std::optional<Variant> variant;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
  std::optional<std::size_t> onSamples;
  std::optional<unsigned> jobs;
  std::optional<std::size_t> roundLimit;
  std::optional<unsigned> sliceRetries;
  bool genericChange = false;
  bool image = false;
};

/// Sectioned key-value input:
///
///   [ring]     codomain = w1, w2, w3  (or n = 3)   domain = a, b, c
///   [target]   q = ...  (repeatable)   or   generator = ...  (repeatable)
///   [map]      w1 = ...  one per codomain variable;  constraint = ...
///   [actions]  action = winkelmann 2 : a  |  action = explicit t : f1, ..., fn
///              point = 1, 0, 0    restrict = d -> c
///   [options]  variant, seed, samples, on-samples, jobs, round-limit,
///              slice-retries, generic-change, image
///
/// `#` starts a comment. Unknown sections and keys are rejected.
struct ProblemFile {
  std::string source;  // path or label, echoed in reports
  RingContext codomain;
  std::optional<RingContext> domain;
  std::vector<Polynomial> q;
  std::vector<Polynomial> generators;
  std::optional<PolynomialMap> map;
  std::vector<Polynomial> constraints;  // in the domain ring
  std::vector<ActionSpec> actions;
  std::optional<Point> point;
  std::vector<RestrictSpec> restrictions;
  ProblemOptions options;

  bool hasTarget() const { return !q.empty() || !generators.empty(); }
  /// From the q lines; DomainError when the file uses `generator` lines.
  TargetVariety targetVariety() const;
  /// I(Z) from either form.
  Ideal targetIdeal() const;
  Ideal constraintIdeal() const;
};

ProblemFile parseProblem(std::string_view text, std::string source = "<input>");
/// Reads the file; an unreadable path is reported as ParseError at 0:0.
ProblemFile loadProblem(const std::string& path);

}  // namespace affimg::cli
