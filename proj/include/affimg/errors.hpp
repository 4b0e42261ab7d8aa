#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace affimg {

/// Precondition violated by the caller: ring mismatch, unknown variable,
/// malformed map, and similar.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the expression and problem-file parsers. Positions are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                           ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A randomized step (linear change, slicing) ran out of retries.
class GenericityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The request is valid but outside what the engine implements.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed; indicates a bug rather than bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace affimg
