#include "neobalco/identities.hpp"

#include "neobalco/neobalco.hpp"
#include "neobalco/pell.hpp"
#include "neobalco/sequences.hpp"

#include <stdexcept>
#include <utility>

namespace neobalco {

namespace {

std::optional<Failure> expect_eq(std::int64_t idx, const Int& lhs, const Int& rhs) {
  if (lhs == rhs) return std::nullopt;
  return Failure{idx, lhs.str(), rhs.str()};
}

std::string rational_str(const Rational& r) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

// Theorem 4.1 / 5.3 / 6.3 share one parity shape: a linear form in the quad
// at (n+1)/2 for odd n, or in the quads at (n+2)/2 and n/2 for even n.
struct ParityQuads {
  NeoQuad high;          // (n+1)/2 or (n+2)/2
  std::optional<NeoQuad> half;  // n/2, even n only
};

ParityQuads parity_quads(std::int64_t n) {
  if (n % 2 != 0) return {neo_quad_closed((n + 1) / 2), std::nullopt};
  return {neo_quad_closed((n + 2) / 2), neo_quad_closed(n / 2)};
}

// Theorem 4.1 numerators; divisors differ per target sequence.
Int balancing_numerator(std::int64_t n, const ParityQuads& pq) {
  if (n % 2 != 0) return 4 * pq.high.B - pq.high.C - 3;
  return 20 * pq.high.B - 7 * pq.high.C - 15;
}

Int cobalancing_numerator(std::int64_t n, const ParityQuads& pq) {
  if (n % 2 != 0) return -16 * pq.high.B + 6 * pq.high.C + 6;
  return 20 * pq.high.B - 4 * pq.half->B - 7 * pq.high.C + pq.half->C - 18;
}

Int lucas_balancing_numerator(std::int64_t n, const ParityQuads& pq) {
  if (n % 2 != 0) return -8 * pq.high.B + 4 * pq.high.C + 6;
  return 60 * pq.high.B - 4 * pq.half->B - 21 * pq.high.C + pq.half->C - 42;
}

Int lucas_cobalancing_numerator(std::int64_t n, const ParityQuads& pq) {
  if (n % 2 != 0) return 24 * pq.high.B - 8 * pq.high.C - 18;
  return 20 * pq.high.B + 4 * pq.half->B - 7 * pq.high.C - pq.half->C - 18;
}

// Sum f(k) for k = 1..hi over one recurrence-path window.
Int sum_window(SeqFamily f, std::int64_t hi) {
  Int acc = 0;
  for (const Int& v : window(f, 1, hi).values) acc += v;
  return acc;
}

// Sum of odd-indexed terms X_1, X_3, ..., X_{hi} (hi odd).
Int sum_odd_indexed(SeqFamily f, std::int64_t hi) {
  SeqWindow win = window(f, 1, hi);
  Int acc = 0;
  for (std::int64_t i = 0; i < hi; i += 2) acc += win.values[static_cast<std::size_t>(i)];
  return acc;
}

std::optional<Failure> check_t9_3(TheoremId id, std::int64_t i) {
  const NeoQuad q = neo_quad_closed(id == TheoremId::T9_3_3 ? i : i + 1);
  Int lhs, root;
  switch (id) {
    case TheoremId::T9_3_1:
      lhs = sum_odd_indexed(SeqFamily::B, 4 * i - 1);
      root = exact_div(20 * q.B - 7 * q.C - 15, 6);
      break;
    case TheoremId::T9_3_2:
      lhs = 1 + sum_window(SeqFamily::c, 4 * i + 2);
      root = exact_div(4 * q.R + 5, 3);
      break;
    case TheoremId::T9_3_3:
      lhs = 1 + sum_window(SeqFamily::P, 8 * i - 5);
      root = exact_div(-4 * q.B + 2 * q.C + 3, 3);
      break;
    case TheoremId::T9_3_4:
      lhs = sum_odd_indexed(SeqFamily::Q, 8 * i - 1);
      root = exact_div(40 * q.B - 14 * q.C - 30, 3);
      break;
    case TheoremId::T9_3_5:
      lhs = exact_div(sum_odd_indexed(SeqFamily::Q, 8 * i + 1), 2);
      root = exact_div(12 * q.B - 4 * q.C - 9, 3);
      break;
    default:
      throw std::logic_error("check_t9_3: bad id");
  }
  return expect_eq(i, lhs, root * root);
}

std::optional<Failure> check_one(TheoremId id, std::int64_t i) {
  switch (id) {
    case TheoremId::T4_1_B:
      return expect_eq(i, balancing(i), exact_div(balancing_numerator(i, parity_quads(i)), 6));
    case TheoremId::T4_1_b:
      return expect_eq(i, cobalancing(i), exact_div(cobalancing_numerator(i, parity_quads(i)), 12));
    case TheoremId::T4_1_C:
      return expect_eq(i, lucas_balancing(i),
                       exact_div(lucas_balancing_numerator(i, parity_quads(i)), 6));
    case TheoremId::T4_1_c:
      return expect_eq(i, lucas_cobalancing(i),
                       exact_div(lucas_cobalancing_numerator(i, parity_quads(i)), 6));

    case TheoremId::T5_1: {
      const NeoQuad q = neo_quad_closed(i);
      const Int p2 = pell(4 * i - 2), p4 = pell(4 * i - 4);
      if (auto f = expect_eq(i, q.B, exact_div(21 * p2 - 3 * p4 + 6, 8))) return f;
      if (auto f = expect_eq(i, q.C, exact_div(15 * p2 - 3 * p4, 2))) return f;
      if (auto f = expect_eq(i, q.R, exact_div(9 * p2 - 3 * p4 - 10, 8))) return f;
      return expect_eq(i, q.CR, exact_div(3 * p2, 2));
    }
    case TheoremId::T5_2: {
      const NeoQuad q = neo_quad_closed(i);
      const Int q4 = pell_lucas(4 * i - 4), q5 = pell_lucas(4 * i - 5);
      if (auto f = expect_eq(i, q.B, exact_div(36 * q4 + 15 * q5 + 6, 8))) return f;
      if (auto f = expect_eq(i, q.C, exact_div(51 * q4 + 21 * q5, 4))) return f;
      if (auto f = expect_eq(i, q.R, exact_div(15 * q4 + 6 * q5 - 10, 8))) return f;
      return expect_eq(i, q.CR, exact_div(21 * q4 + 9 * q5, 8));
    }
    case TheoremId::T5_3_P: {
      const ParityQuads pq = parity_quads(i);
      if (auto f = expect_eq(i, pell(2 * i), exact_div(balancing_numerator(i, pq), 3))) return f;
      Int odd_num = i % 2 != 0
                        ? Int(-16 * pq.high.B + 6 * pq.high.C + 12)
                        : Int(20 * pq.high.B - 4 * pq.half->B - 7 * pq.high.C + pq.half->C - 12);
      return expect_eq(i, pell(2 * i - 1), exact_div(odd_num, 6));
    }
    case TheoremId::T5_3_Q: {
      const ParityQuads pq = parity_quads(i);
      if (auto f = expect_eq(i, pell_lucas(2 * i),
                             exact_div(lucas_balancing_numerator(i, pq), 3))) {
        return f;
      }
      return expect_eq(i, pell_lucas(2 * i - 1),
                       exact_div(lucas_cobalancing_numerator(i, pq), 3));
    }

    case TheoremId::T6_1: {
      const NeoQuad q = neo_quad_closed(i);
      return expect_eq(i, triangular(q.B + q.R), exact_div(2 * q.B * q.B - 3 * q.B + 2, 2));
    }
    case TheoremId::T6_2: {
      const SquareTriangular st = square_triangular(2 * i - 1);
      const NeoQuad q = neo_quad_closed(i);
      if (auto f = expect_eq(i, q.B, exact_div(6 * st.square_side + 3 * st.triangle_side + 3, 2)))
        return f;
      if (auto f = expect_eq(i, q.C, 6 * st.square_side + 6 * st.triangle_side + 3)) return f;
      if (auto f = expect_eq(i, q.R, exact_div(3 * st.triangle_side - 1, 2))) return f;
      return expect_eq(i, q.CR, 3 * st.square_side);
    }
    case TheoremId::T6_3: {
      const SquareTriangular st = square_triangular(i);
      const ParityQuads pq = parity_quads(i);
      const Int base = balancing_numerator(i, pq);
      if (auto f = expect_eq(i, st.square, exact_div(base * base, 36))) return f;
      if (auto f = expect_eq(i, st.square_side, exact_div(base, 6))) return f;
      Int tri_num = i % 2 != 0
                        ? Int(-8 * pq.high.B + 4 * pq.high.C)
                        : Int(60 * pq.high.B - 4 * pq.half->B - 21 * pq.high.C + pq.half->C - 48);
      return expect_eq(i, st.triangle_side, exact_div(tri_num, 12));
    }

    case TheoremId::T7_1_even: {
      const PythTriple t = pythagorean_triple(2 * i);
      if (auto f = expect_eq(i, t.a, t.b + 1)) return f;
      return expect_eq(i, t.a * t.a + t.b * t.b, t.c * t.c);
    }
    case TheoremId::T7_1_odd: {
      const PythTriple t = pythagorean_triple(2 * i - 1);
      if (auto f = expect_eq(i, t.a, t.b + 1)) return f;
      return expect_eq(i, t.a * t.a + t.b * t.b, t.c * t.c);
    }

    case TheoremId::T8_1_B: {
      const Int lhs = cassini(i).B;
      const Int b0 = neo_quad_recurrence(i - 1).B, b1 = neo_quad_recurrence(i).B,
                b2 = neo_quad_recurrence(i + 1).B;
      return expect_eq(i, lhs, exact_div(3 * b2 - 6 * b1 + 3 * b0 - 648, 4));
    }
    case TheoremId::T8_1_C:
      return expect_eq(i, cassini(i).C, 1296);
    case TheoremId::T8_1_R: {
      const Int lhs = cassini(i).R;
      const Int r0 = neo_quad_recurrence(i - 1).R, r1 = neo_quad_recurrence(i).R,
                r2 = neo_quad_recurrence(i + 1).R;
      return expect_eq(i, lhs, exact_div(-5 * r2 + 10 * r1 - 5 * r0 + 648, 4));
    }
    case TheoremId::T8_1_CR:
      return expect_eq(i, cassini(i).CR, -324);

    case TheoremId::T9_1_B:
    case TheoremId::T9_1_C:
    case TheoremId::T9_1_R:
    case TheoremId::T9_1_CR: {
      const QuadSums sums = partial_sums(i);
      const Int bn = balancing(i), bn1 = balancing(i + 1), b2n = balancing(2 * i);
      switch (id) {
        case TheoremId::T9_1_B:
          return expect_eq(i, sums.B,
                           exact_div(21 * bn * bn - 3 * bn * bn1 + 3 * b2n + 3 * i, 4));
        case TheoremId::T9_1_C:
          return expect_eq(i, sums.C, 15 * bn * bn - 3 * bn * bn1 + 3 * b2n);
        case TheoremId::T9_1_R:
          return expect_eq(i, sums.R,
                           exact_div(9 * bn * bn - 3 * bn * bn1 + 3 * b2n - 5 * i, 4));
        default:
          return expect_eq(i, sums.CR, 3 * bn * bn);
      }
    }

    case TheoremId::T9_2: {
      const Int lhs = sum_window(SeqFamily::P, 8 * i - 3);
      const NeoQuad q1 = neo_quad_closed(i + 1), q0 = neo_quad_closed(i);
      const Int root = exact_div(20 * q1.B + 2 * q0.B - 7 * q1.C - 2 * q0.R - 19, 6);
      return expect_eq(i, lhs, root * root);
    }
    case TheoremId::T9_3_1:
    case TheoremId::T9_3_2:
    case TheoremId::T9_3_3:
    case TheoremId::T9_3_4:
    case TheoremId::T9_3_5:
      return check_t9_3(id, i);
    case TheoremId::T9_4: {
      SeqWindow win = window(SeqFamily::P, 1, 4 * i - 1);  // P_1..P_{4i-1}
      Int lhs = 0;
      for (std::int64_t k = 1; k <= 2 * i - 1; ++k) {
        lhs += win.values[static_cast<std::size_t>(2 * k - 1)];  // P_{2k}
      }
      lhs += win.values.back();  // P_{4i-1}
      const NeoQuad q = neo_quad_closed(i);
      return expect_eq(i, lhs, q.B + q.R);
    }

    case TheoremId::L2_1: {
      if (lemma_2_1_holds(i)) return std::nullopt;
      // Rebuild the sides for the witness.
      const Rational b1{balancing(2 * i - 1)}, b2{balancing(2 * i - 2)};
      const Rational lhs1 =
          Rational(441, 2) * b1 * b1 - 63 * b1 * b2 + Rational(9, 2) * b2 * b2 + Rational(9, 2);
      const Rational rhs1 = (15 * b1 - 3 * b2) * (15 * b1 - 3 * b2);
      if (lhs1 != rhs1) return Failure{i, rational_str(lhs1), rational_str(rhs1)};
      const Rational lhs2 = Rational(81, 8) * b1 * b1 - Rational(27, 4) * b1 * b2 +
                            Rational(9, 8) * b2 * b2 - Rational(9, 8);
      return Failure{i, rational_str(lhs2), rational_str(9 * b1 * b1)};
    }
    case TheoremId::T2_1: {
      const SolutionPair iterated = solve_orbit(i).back();
      if (!is_solution(iterated)) {
        return Failure{i, Int(iterated.x * iterated.x - 2 * iterated.y * iterated.y).str(), "-9"};
      }
      const SolutionPair closed = orbit_closed(i);
      if (auto f = expect_eq(i, iterated.x, closed.x)) return f;
      if (auto f = expect_eq(i, iterated.y, closed.y)) return f;
      const AutoMatrix lhs = matrix_power(i), rhs = closed_matrix_power(i);
      if (auto f = expect_eq(i, lhs.m11, rhs.m11)) return f;
      if (auto f = expect_eq(i, lhs.m12, rhs.m12)) return f;
      if (auto f = expect_eq(i, lhs.m21, rhs.m21)) return f;
      return expect_eq(i, lhs.m22, rhs.m22);
    }
  }
  throw std::logic_error("check_one: bad enum");
}

}  // namespace

std::optional<TheoremId> parse_theorem(std::string_view tag) {
  for (TheoremId id : all_theorems()) {
    if (tag == theorem_tag(id)) return id;
  }
  return std::nullopt;
}

std::string_view theorem_tag(TheoremId id) {
  switch (id) {
    case TheoremId::T4_1_B: return "T4.1-B";
    case TheoremId::T4_1_b: return "T4.1-b";
    case TheoremId::T4_1_C: return "T4.1-C";
    case TheoremId::T4_1_c: return "T4.1-c";
    case TheoremId::T5_1: return "T5.1";
    case TheoremId::T5_2: return "T5.2";
    case TheoremId::T5_3_P: return "T5.3-P";
    case TheoremId::T5_3_Q: return "T5.3-Q";
    case TheoremId::T6_1: return "T6.1";
    case TheoremId::T6_2: return "T6.2";
    case TheoremId::T6_3: return "T6.3";
    case TheoremId::T7_1_even: return "T7.1-even";
    case TheoremId::T7_1_odd: return "T7.1-odd";
    case TheoremId::T8_1_B: return "T8.1-B";
    case TheoremId::T8_1_C: return "T8.1-C";
    case TheoremId::T8_1_R: return "T8.1-R";
    case TheoremId::T8_1_CR: return "T8.1-CR";
    case TheoremId::T9_1_B: return "T9.1-B";
    case TheoremId::T9_1_C: return "T9.1-C";
    case TheoremId::T9_1_R: return "T9.1-R";
    case TheoremId::T9_1_CR: return "T9.1-CR";
    case TheoremId::T9_2: return "T9.2";
    case TheoremId::T9_3_1: return "T9.3-1";
    case TheoremId::T9_3_2: return "T9.3-2";
    case TheoremId::T9_3_3: return "T9.3-3";
    case TheoremId::T9_3_4: return "T9.3-4";
    case TheoremId::T9_3_5: return "T9.3-5";
    case TheoremId::T9_4: return "T9.4";
    case TheoremId::L2_1: return "L2.1";
    case TheoremId::T2_1: return "T2.1";
  }
  throw std::logic_error("theorem_tag: bad enum");
}

const std::vector<TheoremId>& all_theorems() {
  static const std::vector<TheoremId> ids = {
      TheoremId::T4_1_B, TheoremId::T4_1_b, TheoremId::T4_1_C, TheoremId::T4_1_c,
      TheoremId::T5_1, TheoremId::T5_2, TheoremId::T5_3_P, TheoremId::T5_3_Q,
      TheoremId::T6_1, TheoremId::T6_2, TheoremId::T6_3,
      TheoremId::T7_1_even, TheoremId::T7_1_odd,
      TheoremId::T8_1_B, TheoremId::T8_1_C, TheoremId::T8_1_R, TheoremId::T8_1_CR,
      TheoremId::T9_1_B, TheoremId::T9_1_C, TheoremId::T9_1_R, TheoremId::T9_1_CR,
      TheoremId::T9_2, TheoremId::T9_3_1, TheoremId::T9_3_2, TheoremId::T9_3_3,
      TheoremId::T9_3_4, TheoremId::T9_3_5, TheoremId::T9_4,
      TheoremId::L2_1, TheoremId::T2_1};
  return ids;
}

std::int64_t theorem_min_index(TheoremId id) {
  switch (id) {
    case TheoremId::T6_1: return 0;
    case TheoremId::T5_2:
    case TheoremId::T8_1_CR: return 2;
    default: return 1;
  }
}

VerifyReport run_suite(TheoremId id, IndexRange range) {
  if (range.from > range.to) {
    throw std::domain_error(std::string(theorem_tag(id)) + ": empty range, from > to");
  }
  if (range.from < theorem_min_index(id)) {
    throw std::domain_error(std::string(theorem_tag(id)) + " requires n >= " +
                            std::to_string(theorem_min_index(id)));
  }
  VerifyReport report{id, range, 0, {}};
  for (std::int64_t i = range.from; i <= range.to; ++i) {
    if (auto f = check_one(id, i)) {
      report.failed.push_back(std::move(*f));
    } else {
      ++report.passed;
    }
  }
  return report;
}

PythTriple pythagorean_triple(std::int64_t n) {
  if (n < 1) throw std::domain_error("pythagorean_triple: index must be >= 1");
  if (n % 2 == 0) {
    const NeoQuad q = neo_quad_closed((n + 2) / 2);
    return {exact_div(12 * q.B - 4 * q.C - 6, 6), exact_div(12 * q.B - 4 * q.C - 12, 6),
            exact_div(-16 * q.B + 6 * q.C + 12, 6)};
  }
  const NeoQuad hi = neo_quad_closed((n + 3) / 2);
  const NeoQuad lo = neo_quad_closed((n + 1) / 2);
  const Int num = 20 * hi.B + 4 * lo.B - 7 * hi.C - lo.C;
  return {exact_div(num - 12, 12), exact_div(num - 24, 12),
          exact_div(20 * hi.B - 4 * lo.B - 7 * hi.C + lo.C - 12, 6)};
}

CassiniDeltas cassini(std::int64_t n) {
  if (n < 1) throw std::domain_error("cassini: index must be >= 1");
  const NeoQuad lo = neo_quad_closed(n - 1);
  const NeoQuad mid = neo_quad_closed(n);
  const NeoQuad hi = neo_quad_closed(n + 1);
  return {lo.B * hi.B - mid.B * mid.B, lo.C * hi.C - mid.C * mid.C,
          lo.R * hi.R - mid.R * mid.R, lo.CR * hi.CR - mid.CR * mid.CR};
}

QuadSums partial_sums(std::int64_t n) {
  if (n < 1) throw std::domain_error("partial_sums: index must be >= 1");
  QuadSums sums{0, 0, 0, 0};
  for (std::int64_t i = 1; i <= n; ++i) {
    const NeoQuad q = neo_quad_recurrence(i);
    sums.B += q.B;
    sums.C += q.C;
    sums.R += q.R;
    sums.CR += q.CR;
  }
  return sums;
}

bool check_inverse_maps(std::int64_t n) {
  return !check_one(TheoremId::T4_1_B, n) && !check_one(TheoremId::T4_1_b, n) &&
         !check_one(TheoremId::T4_1_C, n) && !check_one(TheoremId::T4_1_c, n);
}

bool check_pell_maps(std::int64_t n) {
  if (check_one(TheoremId::T5_1, n) || check_one(TheoremId::T5_3_P, n) ||
      check_one(TheoremId::T5_3_Q, n)) {
    return false;
  }
  return n < 2 || !check_one(TheoremId::T5_2, n);
}

bool check_triangular(std::int64_t n) { return !check_one(TheoremId::T6_1, n); }

bool check_sqtri_maps(std::int64_t n) {
  return !check_one(TheoremId::T6_2, n) && !check_one(TheoremId::T6_3, n);
}

bool check_sum_squares(std::int64_t n) {
  return !check_one(TheoremId::T9_2, n) && !check_one(TheoremId::T9_3_1, n) &&
         !check_one(TheoremId::T9_3_2, n) && !check_one(TheoremId::T9_3_3, n) &&
         !check_one(TheoremId::T9_3_4, n) && !check_one(TheoremId::T9_3_5, n) &&
         !check_one(TheoremId::T9_4, n);
}

}  // namespace neobalco
