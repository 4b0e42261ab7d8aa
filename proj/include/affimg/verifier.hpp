#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "affimg/image.hpp"
#include "affimg/rational_points.hpp"
#include "affimg/surjection.hpp"

namespace affimg {

enum class Variant { TheoremMain, PurePowers };

const char* variantName(Variant v);
std::optional<Variant> parseVariant(std::string_view name);

struct FiberSample {
  Point point;
  bool onTarget = false;
  bool fiberNonempty = false;
  /// Expected outcome: nonempty off the target, empty on it.
  bool ok() const { return fiberNonempty != onTarget; }
};

struct DegreeAudit {
  unsigned observed = 0;
  unsigned long bound = 0;
  bool ok = false;
};

struct Certificate {
  bool avoidanceCheck = false;
  std::optional<Ideal> complement;
  bool complementIdealMatch = false;
  std::vector<FiberSample> fiberSamples;
  std::size_t requestedOffTarget = 0;
  std::size_t requestedOnTarget = 0;
  std::optional<DegreeAudit> degreeBound;
  ImageResult image;

  std::size_t offTargetCount() const;
  std::size_t onTargetCount() const;
  bool fibersOk() const;
  /// Conjunction of every check that ran.
  bool verdict() const;
};

struct VerifyOptions {
  std::size_t offTargetSamples = 20;
  std::size_t onTargetSamples = 20;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  /// Audit the degree bound of this construction (TargetVariety inputs only).
  std::optional<Variant> variant;
};

/// True iff graph(F) + I(Z) is the unit ideal, that is F misses V(IZ).
bool avoidsIdeal(const PolynomialMap& F, const Ideal& IZ);
bool avoidsTarget(const PolynomialMap& F, const TargetVariety& Z);

/// True iff F^{-1}(w0) is nonempty over the algebraic closure.
bool fiberNonempty(const PolynomialMap& F, std::span<const Rational> w0);

DegreeAudit checkDegreeBound(const PolynomialMap& F, const TargetVariety& Z, Variant variant);

/// Certifies F(A^N) = A^n \ V(IZ).
Certificate verifySurjection(const PolynomialMap& F, const Ideal& IZ,
                             const VerifyOptions& options = {});
Certificate verifySurjection(const PolynomialMap& F, const TargetVariety& Z,
                             const VerifyOptions& options = {});

}  // namespace affimg
