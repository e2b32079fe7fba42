#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "unip/check.hpp"
#include "unip/realforms.hpp"

using namespace unip;

TEST_CASE("unitary signed diagram counts") {
  CHECK(count_real_orbits(GroupForm::signature(Label::A, 1, 1), YoungDiagram({1, 1})) == 1);
  CHECK(count_real_orbits(GroupForm::signature(Label::A, 1, 1), YoungDiagram({2})) == 2);
  CHECK(count_real_orbits(GroupForm::signature(Label::A, 2, 0), YoungDiagram({1, 1})) == 1);
  CHECK(count_real_orbits(GroupForm::signature(Label::A, 2, 1), YoungDiagram({2, 1})) == 4);
}

TEST_CASE("quaternionic counts") {
  // Compact forms have no nonzero nilpotents.
  CHECK(count_real_orbits(GroupForm::signature(Label::Cstar, 2, 0), YoungDiagram({2})) == 0);
  CHECK(count_real_orbits(GroupForm::signature(Label::Cstar, 2, 0), YoungDiagram({1, 1})) == 1);
  CHECK(count_real_orbits(GroupForm::signature(Label::Cstar, 2, 2), YoungDiagram({2, 2})) == 1);
  CHECK(count_real_orbits(GroupForm::rank(Label::Dstar, 2), YoungDiagram({3, 1})) == 0);
  CHECK(count_real_orbits(GroupForm::rank(Label::Dstar, 2),
                          YoungDiagram(std::vector<int>(4, 1))) == 1);
  CHECK(count_real_orbits(GroupForm::rank(Label::Dstar, 3), YoungDiagram({2, 2, 1, 1})) == 2);
}

TEST_CASE("realform equalities on small sweeps") {
  const CheckResult unitary = checks::unitary_realform_equality(6);
  INFO(unitary.detail);
  CHECK(unitary.failures == 0);
  const CheckResult quaternionic = checks::quaternionic_realform_equality(4);
  INFO(quaternionic.detail);
  CHECK(quaternionic.failures == 0);
}
