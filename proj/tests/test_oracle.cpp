#include "neobalco/oracle.hpp"

#include "neobalco/neobalco.hpp"

#include "doctest.h"

#include <vector>

using neobalco::Int;
using neobalco::OracleHit;

TEST_CASE("definition holds exactly on the known pairs") {
  CHECK(neobalco::check_definition(0, 1));
  CHECK(neobalco::check_definition(6, 1));
  CHECK(neobalco::check_definition(180, 73));
  CHECK(neobalco::check_definition(6090, 2521));
}

TEST_CASE("definition rejects neighbours") {
  for (Int r = 0; r <= 3; ++r) {
    CHECK_FALSE(neobalco::check_definition(1, r));
  }
  CHECK_FALSE(neobalco::check_definition(0, 0));
  CHECK_FALSE(neobalco::check_definition(0, 2));
  CHECK_FALSE(neobalco::check_definition(6, 0));
  CHECK_FALSE(neobalco::check_definition(6, 2));
  CHECK_FALSE(neobalco::check_definition(7, 1));
  CHECK_FALSE(neobalco::check_definition(179, 73));
  CHECK_FALSE(neobalco::check_definition(180, 72));
  CHECK_FALSE(neobalco::check_definition(180, 74));
  CHECK_THROWS_AS(neobalco::check_definition(-1, 1), std::domain_error);
  CHECK_THROWS_AS(neobalco::check_definition(1, -1), std::domain_error);
}

TEST_CASE("definition accepts each quad's own balancer") {
  for (std::int64_t k = 1; k <= 4; ++k) {
    const auto q = neobalco::neo_quad_closed(k);
    CHECK(neobalco::check_definition(q.B, q.R));
  }
}

TEST_CASE("scan finds every hit below the bound, in order") {
  const std::vector<OracleHit> zero_only = {{0, 1}};
  CHECK(neobalco::scan(5) == zero_only);

  const std::vector<OracleHit> two = {{0, 1}, {6, 1}};
  CHECK(neobalco::scan(6) == two);

  const std::vector<OracleHit> three = {{0, 1}, {6, 1}, {180, 73}};
  CHECK(neobalco::scan(1000) == three);

  const std::vector<OracleHit> five = {
      {0, 1}, {6, 1}, {180, 73}, {6090, 2521}, {206856, 85681}};
  CHECK(neobalco::scan(300000) == five);

  CHECK_THROWS_AS(neobalco::scan(-1), std::domain_error);
}

TEST_CASE("scan agrees with the closed forms") {
  CHECK(neobalco::cross_check(1));
  CHECK(neobalco::cross_check(3));
  CHECK(neobalco::cross_check(4));
  CHECK(neobalco::cross_check(4, true));
  CHECK(neobalco::cross_check(1, true));
  CHECK_THROWS_AS(neobalco::cross_check(0), std::domain_error);
}
