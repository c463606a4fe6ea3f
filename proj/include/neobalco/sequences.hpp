#pragma once

#include "neobalco/exactnum.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace neobalco {

// Tags for every sequence the toolkit generates. Case matters: B is the
// balancing family, b the cobalancing one.
enum class SeqFamily { P, Q, B, b, C, c, T, S, s, t, Bneobc, Cneobc, Rneobc, CRneobc };

std::optional<SeqFamily> parse_family(std::string_view tag);
std::string_view family_tag(SeqFamily f);
const std::vector<SeqFamily>& all_families();

// Smallest index a family is defined at: -1 for B, 1 for c/S/s/t, else 0.
std::int64_t family_min_index(SeqFamily f);

// Recurrence path. Each function walks the defining recurrence from its seeds.
Int pell(std::int64_t n);               // P_0 = 0, P_1 = 1, P_n = 2P_{n-1} + P_{n-2}
Int pell_lucas(std::int64_t n);         // Q_0 = Q_1 = 2, same recurrence
Int balancing(std::int64_t n);          // B_{-1} = -1, B_0 = 0, B_{n+1} = 6B_n - B_{n-1}
Int cobalancing(std::int64_t n);        // b_0 = b_1 = 0 (b_0 conventional), b_{n+1} = 6b_n - b_{n-1} + 2
Int lucas_balancing(std::int64_t n);    // C_0 = 1, C_1 = 3, C_{n+1} = 6C_n - C_{n-1}
Int lucas_cobalancing(std::int64_t n);  // c_1 = 1, c_2 = 7, same recurrence, n >= 1

Int triangular(std::int64_t n);         // n(n+1)/2
Int triangular(const Int& n);

// n-th square triangular number with the sides that witness it:
// square = square_side^2 = T_{triangle_side}. Defined for n >= 1.
struct SquareTriangular {
  Int square;
  Int square_side;
  Int triangle_side;
};
SquareTriangular square_triangular(std::int64_t n);

// Binet path: the same values evaluated exactly in Q(sqrt 2) from powers of
// alpha = 1 + sqrt(2), beta = 1 - sqrt(2), then collapsed with to_int.
Int pell_binet(std::int64_t n);
Int pell_lucas_binet(std::int64_t n);
Int balancing_binet(std::int64_t n);          // n >= -1
Int cobalancing_binet(std::int64_t n);        // n >= 0
Int lucas_balancing_binet(std::int64_t n);
Int lucas_cobalancing_binet(std::int64_t n);  // n >= 1
SquareTriangular square_triangular_binet(std::int64_t n);

// Contiguous run of one family, for generation and rendering.
struct SeqWindow {
  SeqFamily family;
  std::int64_t start;
  std::vector<Int> values;
};

// Terms start..start+count-1 via the recurrence path. Handles the ten classic
// families; the neo families live in neobalco.hpp (see neo_window).
// Requires start >= family_min_index(f) and count >= 1.
SeqWindow window(SeqFamily f, std::int64_t start, std::int64_t count);

}  // namespace neobalco
