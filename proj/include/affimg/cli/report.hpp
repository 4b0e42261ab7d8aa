#pragma once

#include <string>

#include <json.hpp>

#include "affimg/image.hpp"
#include "affimg/verifier.hpp"

namespace affimg::cli {

using Json = nlohmann::ordered_json;

/// What a command produced: the JSON document (schema 1), the text printed
/// on standard output, and the process exit code.
struct Report {
  Json json;
  std::string summary;
  int exitCode = 0;
};

std::string renderRational(const Rational& r);
std::string renderPoint(std::span<const Rational> p);
/// "(g1, g2, ...)" over the reduced grevlex basis; "(1)" for the unit ideal.
std::string renderIdeal(const Ideal& I);
/// One line per coordinate, "  w1 = ...".
std::string renderMap(const PolynomialMap& F);

Json toJson(const Polynomial& p);
Json toJson(const Ideal& I);  // reduced grevlex basis
Json toJson(const PolynomialMap& F);
Json toJson(const ConstructibleSet& set);
Json toJson(const ImageTrace& trace);
Json toJson(const Certificate& cert);

/// Human-readable lines for an image decomposition (shared by `image` and
/// `orbit`).
std::string summarizeImage(const ImageResult& result, const std::optional<Ideal>& complement);
std::string summarizeCertificate(const Certificate& cert);

}  // namespace affimg::cli
