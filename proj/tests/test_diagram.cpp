#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "unip/check.hpp"
#include "unip/diagram.hpp"

using namespace unip;

TEST_CASE("transpose basics") {
  CHECK(YoungDiagram().transpose() == YoungDiagram());
  CHECK(YoungDiagram({3, 1, 1}).transpose() == YoungDiagram({3, 1, 1}));
  CHECK(YoungDiagram({4, 2}).transpose() == YoungDiagram({2, 2, 1, 1}));
  for (int n = 0; n <= 9; ++n)
    for (const auto& d : partitions_of(n)) CHECK(d.transpose().transpose() == d);
}

TEST_CASE("accessors return zero beyond range") {
  const YoungDiagram d({5, 3, 3});
  CHECK(d.r(1) == 5);
  CHECK(d.r(4) == 0);
  CHECK(d.c(1) == 3);
  CHECK(d.c(3) == 3);
  CHECK(d.c(4) == 1);
  CHECK(d.c(6) == 0);
  CHECK(d.size() == 11);
}

TEST_CASE("unions merge multisets") {
  CHECK(union_rows(YoungDiagram({2, 1}), YoungDiagram()) == YoungDiagram({2, 1}));
  CHECK(union_rows(YoungDiagram({3, 1}), YoungDiagram({2, 2})) == YoungDiagram({3, 2, 2, 1}));
  CHECK(union_cols(YoungDiagram({1, 1}), YoungDiagram({1})) == YoungDiagram({2, 1}));
}

TEST_CASE("orbit validity rules") {
  CHECK(is_valid_orbit(YoungDiagram({3, 1, 1}), Family::B));
  CHECK_FALSE(is_valid_orbit(YoungDiagram({3, 1}), Family::C));
  CHECK(is_valid_orbit(YoungDiagram(), Family::D));
  CHECK_FALSE(is_valid_orbit(YoungDiagram({2, 2, 2}), Family::D));
  CHECK(is_valid_orbit(YoungDiagram({7, 7, 7, 3}), Family::D));
}

TEST_CASE("collapse golden cases") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> rows{2};
    rows.insert(rows.end(), 2 * n - 1, 1);
    CHECK(collapse(YoungDiagram(rows), Family::B) ==
          YoungDiagram(std::vector<int>(2 * n + 1, 1)));
  }
  CHECK(collapse(YoungDiagram({3, 1}), Family::C) == YoungDiagram({2, 2}));
  CHECK(collapse(YoungDiagram({5}), Family::B) == YoungDiagram({5}));
  CHECK_THROWS_AS(collapse(YoungDiagram({3, 1}), Family::B), IncompatibleSize);
}

TEST_CASE("orbit dimensions") {
  CHECK(orbit_dim(YoungDiagram(std::vector<int>(7, 1)), Family::B) == 0);
  CHECK(orbit_dim(YoungDiagram({2, 2}), Family::C) == 6);
  for (int n = 1; n <= 3; ++n)
    CHECK(orbit_dim(YoungDiagram({2 * n + 1}), Family::B) == 2LL * n * n);
  CHECK_THROWS_AS(orbit_dim(YoungDiagram({3, 1}), Family::C), InvalidOrbit);
}

TEST_CASE("parse and format") {
  CHECK(parse_diagram("5,3,3,3,3,1,1") == YoungDiagram({5, 3, 3, 3, 3, 1, 1}));
  CHECK(parse_diagram("") == YoungDiagram());
  CHECK(parse_diagram("0") == YoungDiagram());
  CHECK(to_string(YoungDiagram({4, 2})) == "4,2");
  CHECK(to_string(YoungDiagram()) == "0");
  CHECK_THROWS_AS(parse_diagram("3,x"), Error);
}

TEST_CASE("property battery on small sizes") {
  const CheckResult algebra = checks::diagram_properties(8);
  CHECK(algebra.failures == 0);
  const CheckResult dominance = checks::collapse_dominance(8);
  CHECK(dominance.failures == 0);
  INFO(dominance.detail);
}
