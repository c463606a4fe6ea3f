#pragma once

#include "neobalco/exactnum.hpp"
#include "neobalco/sequences.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace neobalco {

// One index of the neo balcobalancing family: the number B, its Lucas
// companion C = sqrt(8B^2 - 12B + 9), the balancer R, and R's Lucas companion
// CR = sqrt(2R^2 + 5R + 2).
struct NeoQuad {
  std::int64_t n;
  Int B;
  Int C;
  Int R;
  Int CR;

  friend bool operator==(const NeoQuad&, const NeoQuad&) = default;
};

// Closed forms in balancing numbers:
// B = (21B_{2n-1} - 3B_{2n-2} + 3)/4, C = 15B_{2n-1} - 3B_{2n-2},
// R = (9B_{2n-1} - 3B_{2n-2} - 5)/4,  CR = 3B_{2n-1}, for n >= 1;
// n = 0 is the paper's conventional quad (0, 3, 1, 3), which the formulas do
// NOT produce (they give CR_0 = -3).
NeoQuad neo_quad_closed(std::int64_t n);

// Exact Binet forms over Q(sqrt 2), defined for n >= 1:
// B = (3(a^{4n-1}+b^{4n-1}) + 6)/8, C = 3(a^{4n-1}-b^{4n-1})/(2 sqrt 2),
// R = (3(a^{4n-2}+b^{4n-2}) - 10)/8, CR = 3(a^{4n-2}-b^{4n-2})/(4 sqrt 2).
NeoQuad neo_quad_binet(std::int64_t n);

// Order-3 recurrence X_n = 35X_{n-1} - 35X_{n-2} + X_{n-3}, seeded from the
// closed forms at n = 0..2. The CR strand only obeys it from n >= 4 (the
// conventional CR_0 breaks the n = 3 step), so CR_3 is seeded too.
NeoQuad neo_quad_recurrence(std::int64_t n);

// Quads start..start+count-1 via the closed-form path.
std::vector<NeoQuad> neo_quad_window(std::int64_t start, std::int64_t count);

// One strand of the quad as a plain sequence window (the four neo tags).
SeqWindow neo_window(SeqFamily f, std::int64_t start, std::int64_t count);

// The balancer r of a neo balcobalancing number n, via Eq.-(10) arithmetic:
// r = (-(2n+1) + sqrt(8n^2 - 12n + 9))/2 when the discriminant is a perfect
// square and the numerator is even and nonnegative; empty otherwise.
std::optional<Int> balcobalancer_of(const Int& n);

// Inverse map: n = 2 + r + sqrt(2r^2 + 5r + 2) when the discriminant is a
// perfect square; empty otherwise. For r = 1 returns 6 (not the conventional 0).
std::optional<Int> n_from_balancer(const Int& r);

bool is_neo_balcobalancing(const Int& n);  // 8n^2 - 12n + 9 a perfect square
bool is_neo_balcobalancer(const Int& r);   // 2r^2 + 5r + 2 a perfect square

// Both Lemma 2.1 identities at index n, evaluated in exact rational arithmetic.
bool lemma_2_1_holds(std::int64_t n);

}  // namespace neobalco
