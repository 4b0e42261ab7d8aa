#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>

#include "affimg/errors.hpp"

namespace affimg {

/// Largest ring arity supported. Rings in this library are small; a fixed
/// inline buffer keeps monomials off the heap inside the Groebner engine.
inline constexpr std::size_t kMaxVariables = 24;

/// Dense exponent vector, one entry per ring variable.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t arity) : arity_(checkArity(arity)) {}
  Monomial(std::initializer_list<unsigned> exponents)
      : arity_(checkArity(exponents.size())) {
    std::size_t i = 0;
    for (unsigned e : exponents) set(i++, e);
  }
  explicit Monomial(std::span<const unsigned> exponents)
      : arity_(checkArity(exponents.size())) {
    for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
  }

  std::size_t arity() const noexcept { return arity_; }
  unsigned operator[](std::size_t i) const noexcept { return exps_[i]; }
  unsigned degree() const noexcept { return degree_; }
  bool isOne() const noexcept { return degree_ == 0; }

  void set(std::size_t i, unsigned e) {
    if (e > 0xFFFFu) throw DomainError("exponent overflow");
    degree_ = degree_ - exps_[i] + e;
    exps_[i] = static_cast<Exponent>(e);
  }

  /// Bit i set iff variable i occurs.
  std::uint32_t support() const noexcept {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < arity_; ++i)
      if (exps_[i]) mask |= (1u << i);
    return mask;
  }

  bool divides(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < arity_; ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.arity_);
    for (std::size_t i = 0; i < a.arity_; ++i) {
      unsigned e = unsigned{a.exps_[i]} + b.exps_[i];
      if (e > 0xFFFFu) throw DomainError("exponent overflow");
      r.exps_[i] = static_cast<Exponent>(e);
    }
    r.degree_ = a.degree_ + b.degree_;
    return r;
  }

  /// a / b, requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) noexcept {
    Monomial r(a.arity_);
    for (std::size_t i = 0; i < a.arity_; ++i)
      r.exps_[i] = static_cast<Exponent>(a.exps_[i] - b.exps_[i]);
    r.degree_ = a.degree_ - b.degree_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) noexcept {
    Monomial r(a.arity_);
    unsigned d = 0;
    for (std::size_t i = 0; i < a.arity_; ++i) {
      r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
      d += r.exps_[i];
    }
    r.degree_ = d;
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) noexcept {
    for (std::size_t i = 0; i < a.arity_; ++i)
      if (a.exps_[i] && b.exps_[i]) return false;
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    if (a.arity_ != b.arity_ || a.degree_ != b.degree_) return false;
    return std::equal(a.exps_.begin(), a.exps_.begin() + a.arity_,
                      b.exps_.begin());
  }

 private:
  static std::uint8_t checkArity(std::size_t n) {
    if (n > kMaxVariables) throw DomainError("too many ring variables");
    return static_cast<std::uint8_t>(n);
  }

  std::array<Exponent, kMaxVariables> exps_{};
  std::uint32_t degree_ = 0;
  std::uint8_t arity_ = 0;
};

}  // namespace affimg
