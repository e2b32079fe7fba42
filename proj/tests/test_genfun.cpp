#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "unip/check.hpp"
#include "unip/genfun.hpp"

using namespace unip;

TEST_CASE("nu polynomials") {
  CHECK(nu(-1).is_zero());
  CHECK(nu(0) == BivariatePoly::constant(1));
  CHECK(nu(1) == BivariatePoly::monomial(2, 0) + BivariatePoly::monomial(0, 2));
}

TEST_CASE("base generating functions") {
  CHECK(base_gf(BaseKind::BRow, 1, Bucket::S) == BivariatePoly::monomial(0, 3));
  CHECK(base_gf(BaseKind::BRow, 1, Bucket::CR) ==
        BivariatePoly::monomial(3, 0) + BivariatePoly::monomial(1, 2) +
            BivariatePoly::monomial(2, 1));
  CHECK(base_gf(BaseKind::H, 1, Bucket::D).is_zero());
  CHECK(base_gf(BaseKind::DHook, 0, Bucket::D) == BivariatePoly::constant(1));
  CHECK(base_gf(BaseKind::DHook, 0, Bucket::CR).is_zero());
}

TEST_CASE("flagship series") {
  CHECK(to_string(gf(Label::B, YoungDiagram({2}), {})) ==
        "p^3 + 2 p^2 q + 2 p q^2 + q^3");
  CHECK(to_string(gf(Label::Cstar, YoungDiagram({3}), {})) == "p^2 + q^2");
  CHECK(gf(Label::C, YoungDiagram({3, 1, 1}), {}) == BivariatePoly::constant(4));
}

TEST_CASE("count extraction") {
  CHECK(count_via_gf(Label::B, GroupForm::signature(Label::B, 2, 1), YoungDiagram({2}), {}) ==
        2);
  CHECK(count_via_gf(Label::C, GroupForm::rank(Label::C, 2), YoungDiagram({3, 1, 1}),
                     {{1, 2}}) == 4);
  CHECK(count_via_gf(Label::Cstar, GroupForm::signature(Label::Cstar, 2, 2),
                     YoungDiagram({3}), {}) == 0);
  CHECK(count_via_gf(Label::Cstar, GroupForm::signature(Label::Cstar, 2, 0),
                     YoungDiagram({3}), {}) == 1);
}

TEST_CASE("genfun equals enumeration on a small sweep") {
  const CheckResult result = checks::genfun_equivalence(10);
  INFO(result.detail);
  CHECK(result.failures == 0);
}
