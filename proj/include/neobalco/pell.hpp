#pragma once

#include "neobalco/exactnum.hpp"

#include <cstdint>
#include <vector>

namespace neobalco {

// Positive solution (x, y) of x^2 - 2y^2 = -9.
struct SolutionPair {
  Int x;
  Int y;

  friend bool operator==(const SolutionPair&, const SolutionPair&) = default;
};

// 2x2 integer matrix, row major. The automorphism M = [[3,2],[4,3]] preserves
// x^2 - 2y^2 and generates the whole solution orbit from [3 3].
struct AutoMatrix {
  Int m11, m12;
  Int m21, m22;

  friend bool operator==(const AutoMatrix&, const AutoMatrix&) = default;
};

AutoMatrix automorphism();

// M^n by iterated multiplication (n >= 1).
AutoMatrix matrix_power(std::int64_t n);

// The closed form of M^n in balancing numbers:
// [[3B_n - B_{n-1}, 2B_n], [4B_n, 3B_n - B_{n-1}]] (n >= 1).
AutoMatrix closed_matrix_power(std::int64_t n);

bool is_solution(const SolutionPair& p);

// First `count` orbit pairs [3 3] M^{n-1}, n = 1..count.
std::vector<SolutionPair> solve_orbit(std::int64_t count);

// n-th orbit pair from the closed form
// (21B_{n-1} - 3B_{n-2}, 15B_{n-1} - 3B_{n-2}), n >= 1 (uses B_{-1} = -1).
SolutionPair orbit_closed(std::int64_t n);

// n-th iterated orbit pair solves the Pell equation and matches both closed
// forms (pair and matrix).
bool orbit_matches_theorem(std::int64_t n);

}  // namespace neobalco
