#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "unip/check.hpp"
#include "unip/duality.hpp"

using namespace unip;

TEST_CASE("infinitesimal character") {
  {
    const HalfIntVector lambda =
        infinitesimal_character(OrbitSpec{Label::C, YoungDiagram({3, 1, 1}), Variant::Unique});
    CHECK(lambda.twice == std::vector<int>{2, 0});
    CHECK(to_string(lambda) == "1,0");
  }
  for (int n = 1; n <= 3; ++n) {
    const HalfIntVector lambda =
        infinitesimal_character(OrbitSpec{Label::B, YoungDiagram({2 * n}), Variant::Unique});
    std::vector<int> expected;
    for (int v = 2 * n - 1; v >= 1; v -= 2) expected.push_back(v);
    CHECK(lambda.twice == expected);
  }
  {
    const HalfIntVector lambda = infinitesimal_character(
        OrbitSpec{Label::C, YoungDiagram(std::vector<int>(5, 1)), Variant::Unique});
    CHECK(lambda.twice == std::vector<int>{0, 0});
  }
  {
    // Very even variants differ by the sign of the last coordinate.
    const HalfIntVector one =
        infinitesimal_character(OrbitSpec{Label::D, YoungDiagram({2, 2}), Variant::I});
    const HalfIntVector two =
        infinitesimal_character(OrbitSpec{Label::D, YoungDiagram({2, 2}), Variant::II});
    CHECK(one.twice == std::vector<int>{1, 1});
    CHECK(two.twice == std::vector<int>{1, -1});
  }
}

TEST_CASE("bad part type") {
  CHECK(bad_part_type(Label::Ct, YoungDiagram({4, 4}), Variant::Unique) == BadPartType::I);
  CHECK(bad_part_type(Label::Ct, YoungDiagram({2, 2}), Variant::Unique) == BadPartType::II);
  CHECK(bad_part_type(Label::Dstar, YoungDiagram({2, 2}), Variant::II) == BadPartType::I);
  CHECK(bad_part_type(Label::Dstar, YoungDiagram({2, 2}), Variant::I) == BadPartType::II);
  CHECK_THROWS_AS(bad_part_type(Label::B, YoungDiagram({2, 2}), Variant::Unique), WrongLabel);
  CHECK_THROWS_AS(bad_part_type(Label::D, YoungDiagram({3, 3}), Variant::Unique),
                  BadParityViolation);
}

TEST_CASE("bv dual golden cases") {
  CHECK(bv_dual(OrbitSpec{Label::AR, YoungDiagram({2, 1}), Variant::Unique}) ==
        YoungDiagram({2, 1}));
  for (int n = 1; n <= 4; ++n)
    CHECK(bv_dual(OrbitSpec{Label::C, YoungDiagram({2 * n + 1}), Variant::Unique}) ==
          YoungDiagram(std::vector<int>(2 * n, 1)));
  CHECK(bv_dual(OrbitSpec{Label::C, YoungDiagram({3, 1, 1}), Variant::Unique}) ==
        YoungDiagram({2, 2}));
}

TEST_CASE("duality oracles on a small sweep") {
  const CheckResult oracles = checks::duality_oracles(10);
  INFO(oracles.detail);
  CHECK(oracles.failures == 0);
  const CheckResult extremes = checks::principal_zero_extremes(5);
  INFO(extremes.detail);
  CHECK(extremes.failures == 0);
}
