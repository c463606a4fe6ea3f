#include "neobalco/exactnum.hpp"

#include "doctest.h"

#include <boost/multiprecision/cpp_int.hpp>

#include <random>

using neobalco::as_perfect_square;
using neobalco::conjugate;
using neobalco::exact_div;
using neobalco::Int;
using neobalco::isqrt;
using neobalco::norm;
using neobalco::NotAnInteger;
using neobalco::QuadSurd;
using neobalco::Rational;
using neobalco::to_int;

TEST_CASE("rationals are canonical") {
  CHECK(Rational(-3, 6) == Rational(-1, 2));
  CHECK(boost::multiprecision::numerator(Rational(-3, 6)) == -1);
  CHECK(boost::multiprecision::denominator(Rational(-3, 6)) == 2);
  CHECK(Rational(4, 2) == 2);
  CHECK(Rational(0, 7) == 0);
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
}

TEST_CASE("exact_div") {
  CHECK(exact_div(48, 8) == 6);
  CHECK(exact_div(-144, 4) == -36);
  CHECK(exact_div(0, 5) == 0);
  CHECK_THROWS_AS(exact_div(7, 2), std::domain_error);
  CHECK_THROWS_AS(exact_div(1, 0), std::domain_error);
}

TEST_CASE("isqrt on known values") {
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(1) == 1);
  CHECK(isqrt(2) == 1);
  CHECK(isqrt(3) == 1);
  CHECK(isqrt(4) == 2);
  CHECK(isqrt(15) == 3);
  CHECK(isqrt(16) == 4);
  CHECK(isqrt(225) == 15);
  Int big = Int(10);
  for (int i = 1; i < 40; ++i) big *= 10;  // 10^40
  Int root = Int(10);
  for (int i = 1; i < 20; ++i) root *= 10;  // 10^20
  CHECK(isqrt(big) == root);
  CHECK_THROWS_AS(isqrt(Int(-1)), std::domain_error);
}

TEST_CASE("isqrt bounds on random input, against boost sqrt") {
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 500; ++trial) {
    Int n = Int(rng());
    if (trial % 3 == 1) n = (n << 64) | rng();
    if (trial % 3 == 2) n = (n << 64) | rng(), n = (n << 31) | (rng() >> 33);
    const Int r = isqrt(n);
    CHECK(r * r <= n);
    CHECK((r + 1) * (r + 1) > n);
    CHECK(r == boost::multiprecision::sqrt(n));
  }
}

TEST_CASE("perfect square detection") {
  CHECK(as_perfect_square(0) == Int(0));
  CHECK(as_perfect_square(1) == Int(1));
  CHECK_FALSE(as_perfect_square(2).has_value());
  CHECK(as_perfect_square(257049) == Int(507));
  CHECK_FALSE(as_perfect_square(-4).has_value());
  for (Int k = 0; k <= 10000; ++k) {
    CHECK(as_perfect_square(k * k) == k);
  }
  for (Int k = 1; k <= 10000; ++k) {
    CHECK_FALSE(as_perfect_square(k * k + 1).has_value());
  }
}

TEST_CASE("surd arithmetic basics") {
  const QuadSurd a = QuadSurd::alpha();
  const QuadSurd b = QuadSurd::beta();
  CHECK(a * b == QuadSurd{-1, 0});
  CHECK(a * a == QuadSurd{3, 2});
  CHECK(pow(a, 3) == QuadSurd{7, 5});
  CHECK(QuadSurd{Rational(3, 2), Rational(1, 2)} + QuadSurd{Rational(1, 2), Rational(1, 2)} ==
        QuadSurd{2, 1});
  CHECK(norm(a) == -1);
  CHECK(norm(b) == -1);
  CHECK(norm(QuadSurd{3, 2}) == 1);
  CHECK(conjugate(QuadSurd{1, 1}) == b);
}

TEST_CASE("surd powers, including negative exponents of units") {
  const QuadSurd a = QuadSurd::alpha();
  const QuadSurd b = QuadSurd::beta();
  CHECK(pow(a, 0) == QuadSurd{1, 0});
  CHECK(pow(a, -1) == QuadSurd{-1, 1});
  CHECK(pow(b, -1) == QuadSurd{-1, -1});
  CHECK(pow(a, -2) == QuadSurd{3, -2});
  for (std::int64_t k = -20; k <= 20; ++k) {
    const QuadSurd want{k % 2 == 0 ? 1 : -1, 0};  // (alpha beta)^k = (-1)^k
    CHECK(pow(a, k) * pow(b, k) == want);
  }
  // sqrt(2) has norm -2: no inverse power inside the ring
  CHECK_THROWS_AS(pow(QuadSurd{0, 1}, -1), std::domain_error);
}

TEST_CASE("surd ring laws on random elements") {
  std::mt19937 rng(991);
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 20);
  auto make = [&] { return QuadSurd{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))}; };
  for (int trial = 0; trial < 200; ++trial) {
    const QuadSurd x = make(), y = make(), z = make();
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x * y) * z == x * (y * z));
    CHECK(conjugate(x * y) == conjugate(x) * conjugate(y));
    CHECK(norm(x * y) == norm(x) * norm(y));
    CHECK(x - x == QuadSurd{0, 0});
  }
}

TEST_CASE("to_int accepts integers and rejects everything else") {
  CHECK(to_int(QuadSurd{7, 0}) == 7);
  CHECK(to_int(QuadSurd{-3, 0}) == -3);
  // (3(alpha^3 + beta^3) + 6)/8 = (3*14 + 6)/8 = 6
  const QuadSurd s =
      (pow(QuadSurd::alpha(), 3) + pow(QuadSurd::beta(), 3)) * QuadSurd{Rational(3, 8), 0} +
      QuadSurd{Rational(6, 8), 0};
  CHECK(to_int(s) == 6);
  CHECK_THROWS_AS(to_int(QuadSurd{Rational(7, 2), 0}), NotAnInteger);
  CHECK_THROWS_AS(to_int(QuadSurd{1, 1}), NotAnInteger);
  try {
    to_int(QuadSurd{Rational(1, 2), 1});
    FAIL("expected NotAnInteger");
  } catch (const NotAnInteger& e) {
    CHECK(e.value() == QuadSurd{Rational(1, 2), 1});
    CHECK(std::string(e.what()).find("1/2") != std::string::npos);
  }
}

TEST_CASE("surd formatting") {
  CHECK(neobalco::to_string(QuadSurd{7, 0}) == "7");
  CHECK(neobalco::to_string(QuadSurd{7, -5}) == "7 - 5*sqrt(2)");
  CHECK(neobalco::to_string(QuadSurd{0, Rational(1, 2)}) == "1/2*sqrt(2)");
  CHECK(neobalco::to_string(QuadSurd{Rational(-3, 2), 1}) == "-3/2 + 1*sqrt(2)");
}
