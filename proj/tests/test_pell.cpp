#include "neobalco/pell.hpp"

#include "doctest.h"

#include <vector>

using neobalco::AutoMatrix;
using neobalco::Int;
using neobalco::SolutionPair;

TEST_CASE("automorphism and its small powers") {
  CHECK(neobalco::automorphism() == AutoMatrix{3, 2, 4, 3});
  CHECK(neobalco::matrix_power(1) == AutoMatrix{3, 2, 4, 3});
  CHECK(neobalco::matrix_power(2) == AutoMatrix{17, 12, 24, 17});
  CHECK(neobalco::matrix_power(3) == AutoMatrix{99, 70, 140, 99});
  CHECK_THROWS_AS(neobalco::matrix_power(0), std::domain_error);
  CHECK_THROWS_AS(neobalco::closed_matrix_power(0), std::domain_error);
}

TEST_CASE("closed matrix power equals iterated multiplication") {
  for (std::int64_t n = 1; n <= 40; ++n) {
    CHECK(neobalco::closed_matrix_power(n) == neobalco::matrix_power(n));
  }
}

TEST_CASE("matrix powers keep determinant 1") {
  for (std::int64_t n = 1; n <= 40; ++n) {
    const AutoMatrix m = neobalco::matrix_power(n);
    CHECK(m.m11 * m.m22 - m.m12 * m.m21 == 1);
    CHECK(m.m11 == m.m22);
    CHECK(m.m21 == 2 * m.m12);
  }
}

TEST_CASE("orbit start") {
  const std::vector<SolutionPair> want = {{3, 3}, {21, 15}, {123, 87}, {717, 507}};
  CHECK(neobalco::solve_orbit(4) == want);
  CHECK_THROWS_AS(neobalco::solve_orbit(0), std::domain_error);
}

TEST_CASE("every orbit pair solves the equation and matches the closed form") {
  const auto orbit = neobalco::solve_orbit(40);
  for (std::int64_t n = 1; n <= 40; ++n) {
    const SolutionPair& p = orbit[static_cast<std::size_t>(n - 1)];
    CHECK(neobalco::is_solution(p));
    CHECK(p.x * p.x - 2 * p.y * p.y == -9);
    CHECK(neobalco::orbit_closed(n) == p);
    CHECK(neobalco::orbit_matches_theorem(n));
  }
}

TEST_CASE("is_solution rejects near misses") {
  CHECK(neobalco::is_solution({3, 3}));
  CHECK_FALSE(neobalco::is_solution({3, 4}));
  CHECK_FALSE(neobalco::is_solution({4, 3}));
  CHECK_FALSE(neobalco::is_solution({21, 16}));
  CHECK_FALSE(neobalco::is_solution({0, 0}));
}

TEST_CASE("brute search below 100000 finds exactly the first orbit pairs") {
  // Independent of the matrix machinery: x must be odd multiple of 3 for
  // x^2 + 9 to be twice a square; just scan every x and test the square.
  std::vector<SolutionPair> found;
  for (Int x = 1; x <= 100000; ++x) {
    const Int twice = x * x + 9;
    if (twice % 2 != 0) continue;
    const auto y = neobalco::as_perfect_square(twice / 2);
    if (y) found.push_back({x, *y});
  }
  const std::vector<SolutionPair> want = {{3, 3},     {21, 15},     {123, 87},
                                          {717, 507}, {4179, 2955}, {24357, 17223}};
  CHECK(found == want);
}
