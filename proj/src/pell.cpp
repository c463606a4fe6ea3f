#include "neobalco/pell.hpp"

#include "neobalco/sequences.hpp"

#include <stdexcept>
#include <utility>

namespace neobalco {

AutoMatrix automorphism() { return {3, 2, 4, 3}; }

static AutoMatrix mul(const AutoMatrix& a, const AutoMatrix& b) {
  return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
          a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

AutoMatrix matrix_power(std::int64_t n) {
  if (n < 1) throw std::domain_error("matrix_power: exponent must be >= 1");
  AutoMatrix acc = automorphism();
  const AutoMatrix m = automorphism();
  for (std::int64_t i = 1; i < n; ++i) acc = mul(acc, m);
  return acc;
}

AutoMatrix closed_matrix_power(std::int64_t n) {
  if (n < 1) throw std::domain_error("closed_matrix_power: exponent must be >= 1");
  Int bn = balancing(n);
  Int bn1 = balancing(n - 1);
  Int diag = 3 * bn - bn1;
  return {diag, 2 * bn, 4 * bn, std::move(diag)};
}

bool is_solution(const SolutionPair& p) { return p.x * p.x - 2 * p.y * p.y == -9; }

std::vector<SolutionPair> solve_orbit(std::int64_t count) {
  if (count < 1) throw std::domain_error("solve_orbit: count must be >= 1");
  std::vector<SolutionPair> orbit;
  orbit.reserve(static_cast<std::size_t>(count));
  Int x = 3, y = 3;
  for (std::int64_t i = 0; i < count; ++i) {
    orbit.push_back({x, y});
    // [x y] M
    Int nx = 3 * x + 4 * y;
    Int ny = 2 * x + 3 * y;
    x = std::move(nx);
    y = std::move(ny);
  }
  return orbit;
}

SolutionPair orbit_closed(std::int64_t n) {
  if (n < 1) throw std::domain_error("orbit_closed: index must be >= 1");
  Int b1 = balancing(n - 1);
  Int b2 = balancing(n - 2);
  return {21 * b1 - 3 * b2, 15 * b1 - 3 * b2};
}

bool orbit_matches_theorem(std::int64_t n) {
  if (n < 1) throw std::domain_error("orbit_matches_theorem: index must be >= 1");
  SolutionPair iterated = solve_orbit(n).back();
  return is_solution(iterated) && iterated == orbit_closed(n) &&
         matrix_power(n) == closed_matrix_power(n);
}

}  // namespace neobalco
