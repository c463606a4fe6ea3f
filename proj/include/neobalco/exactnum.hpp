#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace neobalco {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Quotient that must be exact; throws std::domain_error on a nonzero remainder.
Int exact_div(const Int& num, const Int& den);

// Floor square root by Newton iteration seeded from the bit length.
// No floating point. Throws std::domain_error for negative input.
Int isqrt(const Int& n);

// The square root if n is a perfect square, empty otherwise (and for n < 0).
std::optional<Int> as_perfect_square(const Int& n);

// Element a + b*sqrt(2) of Q(sqrt 2). Components stay canonical because
// Rational is always reduced with a positive denominator, so operator==
// is plain structural equality.
struct QuadSurd {
  Rational a;
  Rational b;

  QuadSurd() = default;
  QuadSurd(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}

  static QuadSurd alpha() { return {1, 1}; }   // 1 + sqrt(2)
  static QuadSurd beta() { return {1, -1}; }   // 1 - sqrt(2)

  friend bool operator==(const QuadSurd&, const QuadSurd&) = default;
};

QuadSurd operator+(const QuadSurd& x, const QuadSurd& y);
QuadSurd operator-(const QuadSurd& x, const QuadSurd& y);
QuadSurd operator-(const QuadSurd& x);
QuadSurd operator*(const QuadSurd& x, const QuadSurd& y);

QuadSurd conjugate(const QuadSurd& x);  // a - b*sqrt(2)
Rational norm(const QuadSurd& x);       // a^2 - 2 b^2

// x^k by repeated squaring. Negative k requires norm(x) = +-1 (the inverse
// is then conjugate(x) * norm(x)); throws std::domain_error otherwise.
QuadSurd pow(const QuadSurd& x, std::int64_t k);

std::string to_string(const QuadSurd& x);

class NotAnInteger : public std::domain_error {
 public:
  explicit NotAnInteger(const QuadSurd& x);
  const QuadSurd& value() const { return value_; }

 private:
  QuadSurd value_;
};

// Collapse a surd that ought to be a rational integer. Throws NotAnInteger
// (carrying the offending value) if b != 0 or a has a denominator.
Int to_int(const QuadSurd& x);

}  // namespace neobalco
