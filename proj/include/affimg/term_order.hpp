#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "affimg/monomial.hpp"
#include "affimg/ring.hpp"

namespace affimg {

/// Global monomial order made of variable blocks compared lexicographically.
/// Inside a block the comparison is lex or graded reverse lex in ring
/// variable order (earlier ring variables are larger).
class TermOrder {
 public:
  enum class Kind { Lex, GRevLex, Weight, ReverseDegree };

  static TermOrder lex();
  static TermOrder grevlex();
  /// `front` variables dominate (compared by grevlex among themselves); ties
  /// are broken by `back` on the remaining variables.
  static TermOrder block(const RingContext& ring,
                         std::span<const std::string> front,
                         const TermOrder& back = grevlex());
  static TermOrder blockIndices(std::uint32_t frontMask,
                                const TermOrder& back = grevlex());
  /// Ring weighted degree first, then smaller powers of `var` are larger,
  /// then grevlex on the other variables. For ideals homogeneous in the ring
  /// weights, var divides a polynomial exactly when it divides its leading
  /// monomial.
  static TermOrder weightedReverse(const RingContext& ring, std::size_t var);

  /// Negative, zero, positive as a <, ==, > b.
  int compare(const Monomial& a, const Monomial& b) const noexcept;
  bool greater(const Monomial& a, const Monomial& b) const noexcept {
    return compare(a, b) > 0;
  }

  std::string describe() const;

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  struct Block {
    std::uint32_t mask;  // variables of this block, disjoint from earlier ones
    Kind kind;
    std::vector<int> weights;  // Weight blocks only
    friend bool operator==(const Block&, const Block&) = default;
  };
  std::vector<Block> blocks_;
};

}  // namespace affimg
