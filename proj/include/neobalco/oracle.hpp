#pragma once

#include "neobalco/exactnum.hpp"

#include <cstdint>
#include <vector>

namespace neobalco {

struct OracleHit {
  Int n;
  Int r;

  friend bool operator==(const OracleHit&, const OracleHit&) = default;
};

// Literal check of the defining equation
//   sum_{k=1}^{n-1} k + sum_{k=1}^{n} k = 2[(n-1) + n + sum_{k=1}^{r} (n+k)]
// by explicit term-by-term accumulation (empty sums are 0, which makes the
// conventional n = 0, r = 1 hit come out true and n = 1 false for every r).
// Requires n >= 0, r >= 0.
bool check_definition(const Int& n, const Int& r);

// Every (n, r) with 0 <= n <= max_n satisfying the definition, in index
// order. Pure counting scan: both sides are maintained incrementally with
// nothing but addition and comparison — no square roots, no closed forms.
std::vector<OracleHit> scan(const Int& max_n);

// The first `count` closed-form terms (from n = 1, or n = 0 when
// include_zero) all appear in the scan output, in order, with matching
// balancers, and the scan finds nothing else below the last term.
bool cross_check(std::int64_t count, bool include_zero = false);

}  // namespace neobalco
