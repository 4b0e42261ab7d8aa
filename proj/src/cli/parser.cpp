#include "affimg/cli/parser.hpp"

#include <cctype>
#include <string>

#include "affimg/errors.hpp"

namespace affimg::cli {
namespace {

constexpr unsigned long kMaxExponent = 0xFFFF;

bool isNameStart(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool isNameChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool isDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

class Parser {
 public:
  Parser(std::string_view src, const RingContext* ring, SourcePosition at)
      : src_(src), ring_(ring), at_(at) {}

  Polynomial parseAll() {
    skipSpace();
    if (pos_ == src_.size()) fail("empty expression");
    Polynomial p = expr();
    expectEnd();
    return p;
  }

  Rational rationalAll() {
    skipSpace();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
      skipSpace();
    }
    if (!isDigit(peek())) fail("expected a rational literal");
    Rational r = literal();
    expectEnd();
    return negative ? Rational(-r) : r;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { failAt(pos_, message); }
  [[noreturn]] void failAt(std::size_t pos, const std::string& message) const {
    throw ParseError(message, at_.line, at_.column + pos);
  }

  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  void skipSpace() {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t')) ++pos_;
  }

  void expectEnd() {
    skipSpace();
    if (pos_ == src_.size()) return;
    if (src_[pos_] == ')') fail("unbalanced ')'");
    if (isNameStart(src_[pos_]) || isDigit(src_[pos_]) || src_[pos_] == '(')
      fail("missing operator (multiplication must be written with '*')");
    fail(std::string("unexpected character '") + src_[pos_] + "'");
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      skipSpace();
      char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      Polynomial rhs = term();
      if (c == '+')
        acc += rhs;
      else
        acc -= rhs;
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    for (;;) {
      skipSpace();
      if (peek() != '*') return acc;
      ++pos_;
      acc = acc * unary();
    }
  }

  Polynomial unary() {
    skipSpace();
    if (peek() == '-') {
      ++pos_;
      return -unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = atom();
    skipSpace();
    if (peek() != '^') return base;
    ++pos_;
    unsigned long e = exponent();
    return base.pow(static_cast<unsigned>(e));
  }

  unsigned long exponent() {
    skipSpace();
    const std::size_t start = pos_;
    if (peek() == '-') fail("malformed exponent: exponents must be nonnegative integers");
    if (!isDigit(peek())) fail("malformed exponent: expected a nonnegative integer");
    unsigned long base = integer(kMaxExponent, "exponent");
    if (peek() == '/') failAt(start, "malformed exponent: exponents must be integers");
    if (isNameChar(peek())) fail("malformed exponent: expected a nonnegative integer");
    skipSpace();
    if (peek() != '^') return base;
    ++pos_;
    unsigned long top = exponent();
    unsigned long r = 1;
    for (unsigned long k = 0; k < top; ++k) {
      r *= base;
      if (r > kMaxExponent) failAt(start, "exponent too large");
      if (base <= 1) break;
    }
    if (top == 0) r = 1;
    return r;
  }

  unsigned long integer(unsigned long limit, const char* what) {
    const std::size_t start = pos_;
    unsigned long v = 0;
    while (isDigit(peek())) {
      v = v * 10 + static_cast<unsigned long>(peek() - '0');
      if (v > limit) failAt(start, std::string(what) + " too large");
      ++pos_;
    }
    return v;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (isDigit(peek())) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  Rational literal() {
    const std::size_t start = pos_;
    mpz_class num(digits());
    if (peek() == '.') fail("non-rational literal: use p/q instead of decimals");
    if (peek() != '/') {
      if (isNameStart(peek()) || peek() == '_')
        fail("missing operator (multiplication must be written with '*')");
      return Rational(num);
    }
    ++pos_;
    if (!isDigit(peek())) fail("non-rational literal: expected a denominator");
    mpz_class den(digits());
    if (den == 0) failAt(start, "non-rational literal: zero denominator");
    if (peek() == '.' || peek() == '/') fail("non-rational literal");
    if (isNameStart(peek()) || peek() == '_')
      fail("missing operator (multiplication must be written with '*')");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  Polynomial atom() {
    skipSpace();
    char c = peek();
    if (c == '(') {
      const std::size_t open = pos_;
      ++pos_;
      skipSpace();
      if (peek() == ')') fail("empty parentheses");
      Polynomial inner = expr();
      skipSpace();
      if (peek() != ')') failAt(open, "unbalanced '('");
      ++pos_;
      return inner;
    }
    if (isDigit(c)) return Polynomial::constant(*ring_, literal());
    if (isNameStart(c)) {
      const std::size_t start = pos_;
      while (isNameChar(peek())) ++pos_;
      std::string_view name = src_.substr(start, pos_ - start);
      if (!ring_->contains(name))
        failAt(start, "unknown variable '" + std::string(name) + "'");
      return Polynomial::variable(*ring_, name);
    }
    if (c == '\0') fail("unexpected end of expression");
    if (c == '.') fail("non-rational literal: use p/q instead of decimals");
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view src_;
  const RingContext* ring_;
  SourcePosition at_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parsePolynomial(std::string_view src, const RingContext& ring,
                           SourcePosition at) {
  Parser parser(src, &ring, at);
  try {
    return parser.parseAll();
  } catch (const DomainError& e) {
    // exponent overflow from the arithmetic itself
    throw ParseError(e.what(), at.line, at.column);
  }
}

Rational parseRational(std::string_view src, SourcePosition at) {
  Parser parser(src, nullptr, at);
  return parser.rationalAll();
}

}  // namespace affimg::cli
