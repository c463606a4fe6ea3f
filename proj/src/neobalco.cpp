#include "neobalco/neobalco.hpp"

#include <stdexcept>
#include <utility>

namespace neobalco {

namespace {

NeoQuad conventional_zero() { return {0, 0, 3, 1, 3}; }

NeoQuad from_balancing_pair(std::int64_t n, const Int& b1, const Int& b2) {
  // b1 = B_{2n-1}, b2 = B_{2n-2}
  return {n,
          exact_div(21 * b1 - 3 * b2 + 3, 4),
          15 * b1 - 3 * b2,
          exact_div(9 * b1 - 3 * b2 - 5, 4),
          3 * b1};
}

}  // namespace

NeoQuad neo_quad_closed(std::int64_t n) {
  if (n < 0) throw std::domain_error("neo_quad_closed: index must be >= 0");
  if (n == 0) return conventional_zero();
  return from_balancing_pair(n, balancing(2 * n - 1), balancing(2 * n - 2));
}

NeoQuad neo_quad_binet(std::int64_t n) {
  if (n < 1) throw std::domain_error("neo_quad_binet: index must be >= 1");
  const QuadSurd a1 = pow(QuadSurd::alpha(), 4 * n - 1);
  const QuadSurd b1 = pow(QuadSurd::beta(), 4 * n - 1);
  const QuadSurd a2 = pow(QuadSurd::alpha(), 4 * n - 2);
  const QuadSurd b2 = pow(QuadSurd::beta(), 4 * n - 2);
  const Rational eighth{1, 8};
  // 3/(2 sqrt 2) = (3/4) sqrt 2, 3/(4 sqrt 2) = (3/8) sqrt 2
  Int B = to_int((a1 + b1) * QuadSurd{Rational(3, 8), 0} + QuadSurd{Rational(3, 4), 0});
  Int C = to_int((a1 - b1) * QuadSurd{0, Rational(3, 4)});
  Int R = to_int((a2 + b2) * QuadSurd{Rational(3, 8), 0} - QuadSurd{Rational(5, 4), 0});
  Int CR = to_int((a2 - b2) * QuadSurd{0, Rational(3, 8)});
  return {n, std::move(B), std::move(C), std::move(R), std::move(CR)};
}

NeoQuad neo_quad_recurrence(std::int64_t n) {
  if (n < 0) throw std::domain_error("neo_quad_recurrence: index must be >= 0");
  if (n <= 2) return neo_quad_closed(n);
  NeoQuad q0 = neo_quad_closed(0);
  NeoQuad q1 = neo_quad_closed(1);
  NeoQuad q2 = neo_quad_closed(2);
  const Int cr3 = neo_quad_closed(3).CR;
  for (std::int64_t i = 3; i <= n; ++i) {
    NeoQuad next{i,
                 35 * q2.B - 35 * q1.B + q0.B,
                 35 * q2.C - 35 * q1.C + q0.C,
                 35 * q2.R - 35 * q1.R + q0.R,
                 i == 3 ? cr3 : 35 * q2.CR - 35 * q1.CR + q0.CR};
    q0 = std::move(q1);
    q1 = std::move(q2);
    q2 = std::move(next);
  }
  return q2;
}

std::vector<NeoQuad> neo_quad_window(std::int64_t start, std::int64_t count) {
  if (start < 0) throw std::domain_error("neo_quad_window: start must be >= 0");
  if (count < 1) throw std::domain_error("neo_quad_window: count must be >= 1");
  std::vector<NeoQuad> quads;
  quads.reserve(static_cast<std::size_t>(count));
  std::int64_t n = start;
  if (n == 0) {
    quads.push_back(conventional_zero());
    ++n;
  }
  if (n < start + count) {
    // One balancing walk covers every B_{2k-2}, B_{2k-1} the range needs.
    Int prev = balancing(2 * n - 2), cur = balancing(2 * n - 1);
    for (; n < start + count; ++n) {
      quads.push_back(from_balancing_pair(n, cur, prev));
      Int b0 = 6 * cur - prev;
      Int b1 = 6 * b0 - cur;
      prev = std::move(b0);
      cur = std::move(b1);
    }
  }
  return quads;
}

SeqWindow neo_window(SeqFamily f, std::int64_t start, std::int64_t count) {
  std::vector<NeoQuad> quads = neo_quad_window(start, count);
  std::vector<Int> vals;
  vals.reserve(quads.size());
  for (NeoQuad& q : quads) {
    switch (f) {
      case SeqFamily::Bneobc: vals.push_back(std::move(q.B)); break;
      case SeqFamily::Cneobc: vals.push_back(std::move(q.C)); break;
      case SeqFamily::Rneobc: vals.push_back(std::move(q.R)); break;
      case SeqFamily::CRneobc: vals.push_back(std::move(q.CR)); break;
      default: throw std::domain_error("neo_window: classic families are generated by window");
    }
  }
  return {f, start, std::move(vals)};
}

std::optional<Int> balcobalancer_of(const Int& n) {
  if (n < 0) return std::nullopt;
  std::optional<Int> root = as_perfect_square(8 * n * n - 12 * n + 9);
  if (!root) return std::nullopt;
  Int numerator = *root - 2 * n - 1;
  if (numerator < 0 || numerator % 2 != 0) return std::nullopt;
  return numerator / 2;
}

std::optional<Int> n_from_balancer(const Int& r) {
  if (r < 0) return std::nullopt;
  std::optional<Int> root = as_perfect_square(2 * r * r + 5 * r + 2);
  if (!root) return std::nullopt;
  return 2 + r + *root;
}

bool is_neo_balcobalancing(const Int& n) {
  return n >= 0 && as_perfect_square(8 * n * n - 12 * n + 9).has_value();
}

bool is_neo_balcobalancer(const Int& r) {
  return r >= 0 && as_perfect_square(2 * r * r + 5 * r + 2).has_value();
}

bool lemma_2_1_holds(std::int64_t n) {
  if (n < 1) throw std::domain_error("lemma_2_1_holds: index must be >= 1");
  const Rational b1{balancing(2 * n - 1)};
  const Rational b2{balancing(2 * n - 2)};
  const Rational lhs1 =
      Rational(441, 2) * b1 * b1 - 63 * b1 * b2 + Rational(9, 2) * b2 * b2 + Rational(9, 2);
  const Rational rhs1 = (15 * b1 - 3 * b2) * (15 * b1 - 3 * b2);
  const Rational lhs2 = Rational(81, 8) * b1 * b1 - Rational(27, 4) * b1 * b2 +
                        Rational(9, 8) * b2 * b2 - Rational(9, 8);
  const Rational rhs2 = 9 * b1 * b1;
  return lhs1 == rhs1 && lhs2 == rhs2;
}

}  // namespace neobalco
