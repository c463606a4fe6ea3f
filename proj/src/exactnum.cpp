#include "neobalco/exactnum.hpp"

#include <utility>

namespace neobalco {

Int exact_div(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("exact_div: zero divisor");
  Int q = num / den;
  if (q * den != num) {
    throw std::domain_error("exact_div: " + num.str() + " not divisible by " + den.str());
  }
  return q;
}

Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt: negative argument " + n.str());
  if (n < 2) return n;
  // 2^ceil(bits/2) >= sqrt(n), so the iteration decreases monotonically
  // to floor(sqrt(n)) and stops at the first non-decrease.
  const unsigned bits = boost::multiprecision::msb(n) + 1;
  Int x = Int(1) << ((bits + 1) / 2);
  for (;;) {
    Int y = (x + n / x) >> 1;
    if (y >= x) return x;
    x = std::move(y);
  }
}

std::optional<Int> as_perfect_square(const Int& n) {
  if (n < 0) return std::nullopt;
  Int r = isqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

QuadSurd operator+(const QuadSurd& x, const QuadSurd& y) { return {x.a + y.a, x.b + y.b}; }

QuadSurd operator-(const QuadSurd& x, const QuadSurd& y) { return {x.a - y.a, x.b - y.b}; }

QuadSurd operator-(const QuadSurd& x) { return {-x.a, -x.b}; }

QuadSurd operator*(const QuadSurd& x, const QuadSurd& y) {
  return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
}

QuadSurd conjugate(const QuadSurd& x) { return {x.a, -x.b}; }

Rational norm(const QuadSurd& x) { return x.a * x.a - 2 * x.b * x.b; }

QuadSurd pow(const QuadSurd& x, std::int64_t k) {
  QuadSurd base = x;
  std::uint64_t e;
  if (k < 0) {
    Rational nrm = norm(x);
    if (nrm != 1 && nrm != -1) {
      throw std::domain_error("pow: negative exponent needs unit norm, got norm " +
                              to_string({nrm, 0}) + " for " + to_string(x));
    }
    base = conjugate(x);
    if (nrm == -1) base = -base;
    e = static_cast<std::uint64_t>(-(k + 1)) + 1;
  } else {
    e = static_cast<std::uint64_t>(k);
  }
  QuadSurd acc{1, 0};
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

static std::string rational_str(const Rational& r) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const QuadSurd& x) {
  if (x.b == 0) return rational_str(x.a);
  std::string surd = rational_str(x.b < 0 ? Rational(-x.b) : x.b) + "*sqrt(2)";
  if (x.a == 0) return (x.b < 0 ? "-" : "") + surd;
  return rational_str(x.a) + (x.b < 0 ? " - " : " + ") + surd;
}

NotAnInteger::NotAnInteger(const QuadSurd& x)
    : std::domain_error("not an integer: " + to_string(x)), value_(x) {}

Int to_int(const QuadSurd& x) {
  if (x.b != 0 || boost::multiprecision::denominator(x.a) != 1) throw NotAnInteger(x);
  return boost::multiprecision::numerator(x.a);
}

}  // namespace neobalco
