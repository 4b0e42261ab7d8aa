#pragma once

#include <optional>
#include <random>
#include <vector>

#include "affimg/ideal.hpp"

namespace affimg {

using Point = std::vector<Rational>;

/// Distinct rational roots of a univariate polynomial in `var`, ascending.
/// Roots are found by the rational root test on the integer-cleared
/// polynomial; coefficients too large to enumerate divisors of are skipped.
std::vector<Rational> rationalRoots(const Polynomial& p, std::size_t var);

bool vanishesAt(const Ideal& I, std::span<const Rational> point);

/// Coordinates k/den with den in {1, 2} and |k| <= 2 * radius.
Point randomGridPoint(std::size_t n, std::mt19937_64& rng, int radius = 4);

/// Rational point of V(I) by back-substitution through the lex basis:
/// free coordinates get random grid values, determined ones a random
/// rational root. Absent when no point turned up within `attempts`.
std::optional<Point> randomPointOn(const Ideal& I, std::mt19937_64& rng,
                                   unsigned attempts = 64, int radius = 4);

}  // namespace affimg
