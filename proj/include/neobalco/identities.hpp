#pragma once

#include "neobalco/exactnum.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace neobalco {

// Every verifiable statement in the paper, one tag per independently
// checkable strand (4.1 and 5.3 split per map, 7.1 per parity, 8.1/9.1 per
// strand, 9.3 per identity).
enum class TheoremId {
  T4_1_B, T4_1_b, T4_1_C, T4_1_c,
  T5_1, T5_2, T5_3_P, T5_3_Q,
  T6_1, T6_2, T6_3,
  T7_1_even, T7_1_odd,
  T8_1_B, T8_1_C, T8_1_R, T8_1_CR,
  T9_1_B, T9_1_C, T9_1_R, T9_1_CR,
  T9_2, T9_3_1, T9_3_2, T9_3_3, T9_3_4, T9_3_5, T9_4,
  L2_1, T2_1,
};

std::optional<TheoremId> parse_theorem(std::string_view tag);  // e.g. "T8.1-CR"
std::string_view theorem_tag(TheoremId id);
const std::vector<TheoremId>& all_theorems();

// Smallest index a theorem holds at: 0 for T6.1, 2 for T5.2 and T8.1-CR,
// otherwise 1.
std::int64_t theorem_min_index(TheoremId id);

struct IndexRange {
  std::int64_t from;
  std::int64_t to;
};

struct Failure {
  std::int64_t index;
  std::string lhs;  // decimal (or p/q for the rational Lemma 2.1 sides)
  std::string rhs;
};

struct VerifyReport {
  TheoremId theorem;
  IndexRange range;
  std::int64_t passed = 0;
  std::vector<Failure> failed;

  bool ok() const { return failed.empty(); }
};

// Checks one theorem at every index of `range`. Throws std::domain_error if
// the range is inverted or starts below the theorem's domain (the message
// names the bound).
VerifyReport run_suite(TheoremId id, IndexRange range);

// Theorem 7.1 triple at paper index n >= 1 (parity picks the formula pair).
struct PythTriple {
  Int a;
  Int b;
  Int c;
};
PythTriple pythagorean_triple(std::int64_t n);

// Cassini deltas X_{n-1} X_{n+1} - X_n^2 of the four strands at n >= 1,
// computed from closed-form terms. The CR delta is only theorem-constant
// (-324) from n >= 2; at n = 1 the actual delta 306 is returned.
struct CassiniDeltas {
  Int B;
  Int C;
  Int R;
  Int CR;
};
CassiniDeltas cassini(std::int64_t n);

// Running sums of strands 1..n, accumulated term by term over the
// recurrence path (never the closed-form sum identities they get checked
// against).
struct QuadSums {
  Int B;
  Int C;
  Int R;
  Int CR;
};
QuadSums partial_sums(std::int64_t n);

bool check_inverse_maps(std::int64_t n);  // Theorem 4.1, all four maps
bool check_pell_maps(std::int64_t n);     // Theorems 5.1-5.3 (5.2 joins at n >= 2)
bool check_triangular(std::int64_t n);    // Theorem 6.1
bool check_sqtri_maps(std::int64_t n);    // Theorems 6.2-6.3
bool check_sum_squares(std::int64_t n);   // Theorems 9.2-9.3

}  // namespace neobalco
