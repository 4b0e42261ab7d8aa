#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "affimg/errors.hpp"
#include "affimg/ideal.hpp"
#include "affimg/polynomial_map.hpp"

namespace affimg {

/// (w_i - F_i(z)) + constraints in k[z, w], z of weight 1 and w of weight 0.
/// Domain and codomain variable names must be disjoint.
Ideal graphIdeal(const PolynomialMap& F, const Ideal& constraints);

/// Ideal of the closure of the projection of V(G) to the weight-0 variables,
/// returned in the ring of those variables (with unit weights).
Ideal imageClosure(const Ideal& G);

struct BoundaryDetails {
  Ideal atInfinity;          // closure of the graph intersected with e = 0
  std::vector<Ideal> charts;  // one elimination ideal per chart z_i = 1
  Ideal boundary;            // intersection of the charts
};

/// Projection of the part at infinity of the projective closure of V(G).
BoundaryDetails boundaryLocusDetailed(const Ideal& G, unsigned jobs = 1);
Ideal boundaryLocus(const Ideal& G);

struct ConstructiblePiece {
  Ideal closed;
  Ideal removed;
};

/// Union of the pieces V(closed) \ V(removed).
struct ConstructibleSet {
  RingContext ring;
  std::vector<ConstructiblePiece> pieces;
};

struct ImageRound {
  Ideal graph;      // accumulated graph ideal at the start of the round
  bool sliced = false;
  Ideal working;    // graph after slicing (equal to `graph` otherwise)
  int domainDimension = 0;
  int imageDimension = 0;
  Ideal closure;
  BoundaryDetails boundary;
};

struct ImageTrace {
  std::vector<ImageRound> rounds;
  Ideal finalGraph;
};

struct ImageOptions {
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  unsigned sliceRetries = 8;
  /// 0 selects the default, domain dimension + 2.
  std::size_t roundLimit = 0;
};

struct ImageResult {
  ConstructibleSet set;
  ImageTrace trace;
};

/// Raised when the boundary recursion does not reach the unit ideal within
/// the round limit; carries the rounds completed so far.
class RoundLimitError : public InternalError {
 public:
  RoundLimitError(const std::string& message, ImageTrace trace)
      : InternalError(message), trace_(std::move(trace)) {}
  const ImageTrace& trace() const noexcept { return trace_; }

 private:
  ImageTrace trace_;
};

/// Decomposes F(V(constraints)) into locally closed pieces by repeatedly
/// removing the boundary locus and recursing on its preimage.
ImageResult constructibleImage(const PolynomialMap& F, const Ideal& constraints,
                               const ImageOptions& options = {});

/// J with union = A^n \ V(J) when the complement of the union is closed;
/// absent otherwise. J is the ideal of the closure of the complement.
std::optional<Ideal> complementIdeal(const ConstructibleSet& result,
                                     std::size_t ambientDim);

/// Constraints plus random affine forms so that the sliced domain has the
/// dimension of the image closure and the same image closure.
Ideal sliceToImageDimension(const PolynomialMap& F, const Ideal& constraints,
                            std::uint64_t seed, unsigned retries = 8);

}  // namespace affimg
