#include "neobalco/sequences.hpp"

#include <stdexcept>
#include <utility>

namespace neobalco {

namespace {

const Rational kHalf{1, 2};
const Rational kQuarter{1, 4};
const Rational kEighth{1, 8};

// alpha^n +/- beta^n as an exact surd.
QuadSurd alpha_pow_plus(std::int64_t n) {
  return pow(QuadSurd::alpha(), n) + pow(QuadSurd::beta(), n);
}

QuadSurd alpha_pow_minus(std::int64_t n) {
  return pow(QuadSurd::alpha(), n) - pow(QuadSurd::beta(), n);
}

}  // namespace

std::optional<SeqFamily> parse_family(std::string_view tag) {
  for (SeqFamily f : all_families()) {
    if (tag == family_tag(f)) return f;
  }
  return std::nullopt;
}

std::string_view family_tag(SeqFamily f) {
  switch (f) {
    case SeqFamily::P: return "P";
    case SeqFamily::Q: return "Q";
    case SeqFamily::B: return "B";
    case SeqFamily::b: return "b";
    case SeqFamily::C: return "C";
    case SeqFamily::c: return "c";
    case SeqFamily::T: return "T";
    case SeqFamily::S: return "S";
    case SeqFamily::s: return "s";
    case SeqFamily::t: return "t";
    case SeqFamily::Bneobc: return "Bneobc";
    case SeqFamily::Cneobc: return "Cneobc";
    case SeqFamily::Rneobc: return "Rneobc";
    case SeqFamily::CRneobc: return "CRneobc";
  }
  throw std::logic_error("family_tag: bad enum");
}

const std::vector<SeqFamily>& all_families() {
  static const std::vector<SeqFamily> fams = {
      SeqFamily::P, SeqFamily::Q, SeqFamily::B, SeqFamily::b,
      SeqFamily::C, SeqFamily::c, SeqFamily::T, SeqFamily::S,
      SeqFamily::s, SeqFamily::t, SeqFamily::Bneobc, SeqFamily::Cneobc,
      SeqFamily::Rneobc, SeqFamily::CRneobc};
  return fams;
}

std::int64_t family_min_index(SeqFamily f) {
  switch (f) {
    case SeqFamily::B: return -1;
    case SeqFamily::c:
    case SeqFamily::S:
    case SeqFamily::s:
    case SeqFamily::t: return 1;
    default: return 0;
  }
}

Int pell(std::int64_t n) {
  if (n < 0) throw std::domain_error("pell: index must be >= 0");
  Int prev = 0, cur = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    Int next = 2 * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return prev;
}

Int pell_lucas(std::int64_t n) {
  if (n < 0) throw std::domain_error("pell_lucas: index must be >= 0");
  Int prev = 2, cur = 2;
  for (std::int64_t i = 0; i < n; ++i) {
    Int next = 2 * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return prev;
}

Int balancing(std::int64_t n) {
  if (n < -1) throw std::domain_error("balancing: index must be >= -1");
  Int prev = -1, cur = 0;  // B_{-1}, B_0
  for (std::int64_t i = -1; i < n; ++i) {
    Int next = 6 * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return prev;
}

Int cobalancing(std::int64_t n) {
  if (n < 0) throw std::domain_error("cobalancing: index must be >= 0");
  Int prev = 0, cur = 0;  // b_0 (conventional), b_1
  for (std::int64_t i = 0; i < n; ++i) {
    Int next = 6 * cur - prev + 2;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return prev;
}

Int lucas_balancing(std::int64_t n) {
  if (n < 0) throw std::domain_error("lucas_balancing: index must be >= 0");
  Int prev = 1, cur = 3;
  for (std::int64_t i = 0; i < n; ++i) {
    Int next = 6 * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return prev;
}

Int lucas_cobalancing(std::int64_t n) {
  if (n < 1) throw std::domain_error("lucas_cobalancing: index must be >= 1");
  Int prev = 1, cur = 7;  // c_1, c_2
  for (std::int64_t i = 1; i < n; ++i) {
    Int next = 6 * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return prev;
}

Int triangular(std::int64_t n) { return triangular(Int(n)); }

Int triangular(const Int& n) {
  if (n < 0) throw std::domain_error("triangular: index must be >= 0");
  return exact_div(n * (n + 1), 2);
}

SquareTriangular square_triangular(std::int64_t n) {
  if (n < 1) throw std::domain_error("square_triangular: index must be >= 1");
  Int s_prev = 1, s_cur = 6;    // s_1, s_2
  Int t_prev = 1, t_cur = 8;    // t_1, t_2
  for (std::int64_t i = 1; i < n; ++i) {
    Int s_next = 6 * s_cur - s_prev;
    s_prev = std::move(s_cur);
    s_cur = std::move(s_next);
    Int t_next = 6 * t_cur - t_prev + 2;
    t_prev = std::move(t_cur);
    t_cur = std::move(t_next);
  }
  return {s_prev * s_prev, s_prev, t_prev};
}

namespace {

void require_at_least(std::int64_t n, std::int64_t lo, const char* name) {
  if (n < lo) {
    throw std::domain_error(std::string(name) + ": index must be >= " + std::to_string(lo));
  }
}

}  // namespace

Int pell_binet(std::int64_t n) {
  require_at_least(n, 0, "pell_binet");
  return to_int(alpha_pow_minus(n) * QuadSurd{0, kQuarter});
}

Int pell_lucas_binet(std::int64_t n) {
  require_at_least(n, 0, "pell_lucas_binet");
  return to_int(alpha_pow_plus(n));
}

Int balancing_binet(std::int64_t n) {
  require_at_least(n, -1, "balancing_binet");
  return to_int(alpha_pow_minus(2 * n) * QuadSurd{0, kEighth});
}

Int cobalancing_binet(std::int64_t n) {
  require_at_least(n, 0, "cobalancing_binet");
  return to_int(alpha_pow_minus(2 * n - 1) * QuadSurd{0, kEighth} - QuadSurd{kHalf, 0});
}

Int lucas_balancing_binet(std::int64_t n) {
  require_at_least(n, 0, "lucas_balancing_binet");
  return to_int(alpha_pow_plus(2 * n) * QuadSurd{kHalf, 0});
}

Int lucas_cobalancing_binet(std::int64_t n) {
  require_at_least(n, 1, "lucas_cobalancing_binet");
  return to_int(alpha_pow_plus(2 * n - 1) * QuadSurd{kHalf, 0});
}

SquareTriangular square_triangular_binet(std::int64_t n) {
  require_at_least(n, 1, "square_triangular_binet");
  Int sq = to_int((alpha_pow_plus(4 * n) - QuadSurd{2, 0}) * QuadSurd{Rational(1, 32), 0});
  Int side = to_int(alpha_pow_minus(2 * n) * QuadSurd{0, kEighth});
  Int tri = to_int((alpha_pow_plus(2 * n) - QuadSurd{2, 0}) * QuadSurd{kQuarter, 0});
  return {std::move(sq), std::move(side), std::move(tri)};
}

namespace {

// Generic two-term window walker: seeds are the values at the family's two
// lowest indices, step produces the next term.
template <typename Step>
std::vector<Int> walk(std::int64_t min_index, Int seed0, Int seed1, std::int64_t start,
                      std::int64_t count, Step step) {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(count));
  Int prev = std::move(seed0), cur = std::move(seed1);
  for (std::int64_t idx = min_index; idx < start + count; ++idx) {
    if (idx >= start) out.push_back(prev);
    Int next = step(cur, prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return out;
}

}  // namespace

SeqWindow window(SeqFamily f, std::int64_t start, std::int64_t count) {
  if (count < 1) throw std::domain_error("window: count must be >= 1");
  if (start < family_min_index(f)) {
    throw std::domain_error(std::string("window: ") + std::string(family_tag(f)) +
                            " starts at index " + std::to_string(family_min_index(f)));
  }
  auto six = [](const Int& cur, const Int& prev) { return 6 * cur - prev; };
  auto six_plus2 = [](const Int& cur, const Int& prev) { return 6 * cur - prev + 2; };
  auto pell_step = [](const Int& cur, const Int& prev) { return 2 * cur + prev; };
  std::vector<Int> vals;
  switch (f) {
    case SeqFamily::P: vals = walk(0, 0, 1, start, count, pell_step); break;
    case SeqFamily::Q: vals = walk(0, 2, 2, start, count, pell_step); break;
    case SeqFamily::B: vals = walk(-1, -1, 0, start, count, six); break;
    case SeqFamily::b: vals = walk(0, 0, 0, start, count, six_plus2); break;
    case SeqFamily::C: vals = walk(0, 1, 3, start, count, six); break;
    case SeqFamily::c: vals = walk(1, 1, 7, start, count, six); break;
    case SeqFamily::T: {
      vals.reserve(static_cast<std::size_t>(count));
      Int acc = triangular(start);
      for (std::int64_t idx = start; idx < start + count; ++idx) {
        vals.push_back(acc);
        acc += idx + 1;
      }
      break;
    }
    case SeqFamily::S: vals = walk(1, 1, 36, start, count,
                                   [](const Int& cur, const Int& prev) { return 34 * cur - prev + 2; });
      break;
    case SeqFamily::s: vals = walk(1, 1, 6, start, count, six); break;
    case SeqFamily::t: vals = walk(1, 1, 8, start, count, six_plus2); break;
    default:
      throw std::domain_error("window: neo families are generated by neo_window");
  }
  return {f, start, std::move(vals)};
}

}  // namespace neobalco
