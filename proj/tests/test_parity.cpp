#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "unip/check.hpp"
#include "unip/parity.hpp"

using namespace unip;

TEST_CASE("good parity residues") {
  CHECK(good_parity(3, Label::C, 0));
  CHECK(good_parity(2, Label::B, 0));
  CHECK_FALSE(good_parity(2, Label::A, 3));
  CHECK(good_parity(2, Label::At, 3));
  CHECK(good_parity(1, Label::Dstar, 0));
  CHECK(good_parity(2, Label::CtC, 0));
}

TEST_CASE("split parity examples") {
  {
    const ParitySplit split =
        split_parity(OrbitSpec{Label::C, YoungDiagram({5, 3, 3, 3, 3, 1, 1}), Variant::Unique});
    CHECK(split.good == YoungDiagram({5, 3, 3, 3, 3, 1, 1}));
    CHECK(split.bad.empty());
    CHECK(split.n_b == 0);
  }
  {
    const ParitySplit split =
        split_parity(OrbitSpec{Label::B, YoungDiagram({4, 3, 3, 2}), Variant::Unique});
    CHECK(split.good == YoungDiagram({4, 2}));
    CHECK(split.bad == YoungDiagram({3, 3}));
    REQUIRE(split.bad_half.has_value());
    CHECK(*split.bad_half == YoungDiagram({3}));
    CHECK(split.n_b == 3);
  }
  {
    const ParitySplit split =
        split_parity(OrbitSpec{Label::A, YoungDiagram({1, 1}), Variant::Unique});
    CHECK(split.good.empty());
    CHECK(split.bad == YoungDiagram({1, 1}));
    REQUIRE(split.bad_half.has_value());
    CHECK(split.n_b == 1);
  }
  {
    // Odd bad multiplicity is possible for the GL family only.
    const ParitySplit split =
        split_parity(OrbitSpec{Label::A, YoungDiagram({2, 1}), Variant::Unique});
    CHECK_FALSE(split.bad_half.has_value());
  }
}

TEST_CASE("analytically even") {
  CHECK(analytically_even(OrbitSpec{Label::C, YoungDiagram({5, 3, 3, 3, 3, 1, 1}),
                                    Variant::Unique}));
  CHECK(analytically_even(OrbitSpec{Label::At, YoungDiagram({4, 2}), Variant::Unique}));
  CHECK_FALSE(analytically_even(OrbitSpec{Label::B, YoungDiagram({4, 3, 3, 2}),
                                          Variant::Unique}));
}

TEST_CASE("relevance") {
  CHECK(relevance(GroupForm::signature(Label::B, 3, 2),
                  OrbitSpec{Label::B, YoungDiagram({4}), Variant::Unique}));
  CHECK_FALSE(relevance(GroupForm::signature(Label::B, 1, 4),
                        OrbitSpec{Label::B, YoungDiagram({3, 3, 2, 2, 2, 2}), Variant::Unique}));
  CHECK(relevance(GroupForm::rank(Label::C, 2),
                  OrbitSpec{Label::C, YoungDiagram({3, 1, 1}), Variant::Unique}));
  // Very even D* diagrams: exactly one variant is relevant.
  const YoungDiagram ve({2, 2});
  const bool first = relevance(GroupForm::rank(Label::Dstar, 2),
                               OrbitSpec{Label::Dstar, ve, Variant::I});
  const bool second = relevance(GroupForm::rank(Label::Dstar, 2),
                                OrbitSpec{Label::Dstar, ve, Variant::II});
  CHECK(first != second);
}

TEST_CASE("orbit spec validation") {
  CHECK_THROWS_AS(validate_orbit_spec(OrbitSpec{Label::C, YoungDiagram({4, 2}),
                                                Variant::Unique}),
                  InvalidOrbit);
  CHECK_THROWS_AS(validate_orbit_spec(OrbitSpec{Label::D, YoungDiagram({2, 2}),
                                                Variant::Unique}),
                  VariantRequired);
  CHECK_NOTHROW(validate_orbit_spec(OrbitSpec{Label::D, YoungDiagram({2, 2}), Variant::II}));
}

TEST_CASE("parity property battery") {
  const CheckResult result = checks::parity_properties(10);
  INFO(result.detail);
  CHECK(result.failures == 0);
}
