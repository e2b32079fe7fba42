#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "unip/check.hpp"
#include "unip/count.hpp"

using namespace unip;

TEST_CASE("flagship counts") {
  CHECK(unip_count(GroupForm::rank(Label::C, 2),
                   OrbitSpec{Label::C, YoungDiagram({3, 1, 1}), Variant::Unique})
            .count == 8);
  CHECK(unip_count(GroupForm::rank(Label::AR, 3),
                   OrbitSpec{Label::AR, YoungDiagram({2, 1}), Variant::Unique})
            .count == 4);
  CHECK(unip_count(GroupForm::signature(Label::B, 2, 1),
                   OrbitSpec{Label::B, YoungDiagram({2}), Variant::Unique})
            .count == 2);
}

TEST_CASE("vanishing branches") {
  CHECK(unip_count(GroupForm::signature(Label::B, 1, 4),
                   OrbitSpec{Label::B, YoungDiagram({3, 3, 2, 2, 2, 2}), Variant::Unique})
            .count == 0);
  // Exactly one of the two very even D* variants is relevant.
  long long relevant = 0;
  for (Variant variant : {Variant::I, Variant::II})
    relevant += unip_count(GroupForm::rank(Label::Dstar, 2),
                           OrbitSpec{Label::Dstar, YoungDiagram({2, 2}), variant})
                    .count;
  CHECK(relevant == 1);
  // Unitary orbits without the even bad-row pairing have no parameters.
  CHECK(unip_count(GroupForm::signature(Label::A, 2, 1),
                   OrbitSpec{Label::A, YoungDiagram({1, 1, 1}), Variant::Unique})
            .count == 0);
}

TEST_CASE("unitary counts via theorem routes") {
  // U(p,q) at the principal good-parity orbit of size 3.
  long long total = 0;
  for (int p = 0; p <= 3; ++p)
    total += unip_count(GroupForm::signature(Label::A, p, 3 - p),
                        OrbitSpec{Label::A, YoungDiagram({3}), Variant::Unique})
                 .count;
  CHECK(total == 4);  // one painting per signature of [1,1,1] over {*, s, r}
}

TEST_CASE("complex counts") {
  CHECK(unip_count_complex(Label::AC, YoungDiagram({3, 1})) == 1);
  CHECK(unip_count_complex(Label::CC, YoungDiagram({5, 3, 3, 3, 3, 1, 1})) == 4);
  CHECK(unip_count_complex(Label::BC, YoungDiagram(std::vector<int>(4, 1))) == 1);
}

TEST_CASE("verification routes agree") {
  const CountReport report = unip_count(GroupForm::rank(Label::C, 2),
                                        OrbitSpec{Label::C, YoungDiagram({3, 1, 1}),
                                                  Variant::Unique},
                                        /*verify=*/true);
  CHECK(report.cross_checks.at("enumeration") == 8);
  CHECK(report.cross_checks.at("genfun") == 8);
  CHECK(report.cross_checks.at("oracle") == 8);
  const CheckResult agreement = checks::count_triple_agreement(3);
  INFO(agreement.detail);
  CHECK(agreement.failures == 0);
}
