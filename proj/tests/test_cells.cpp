#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "unip/check.hpp"
#include "unip/cells.hpp"

using namespace unip;

TEST_CASE("star pair classification") {
  const YoungDiagram d({5, 3, 3, 3, 3, 1, 1});
  CHECK(classify_star_pair(Label::C, d, 1) == PairClass::Primitive);
  CHECK(classify_star_pair(Label::C, d, 3) == PairClass::Balanced);
  CHECK(classify_star_pair(Label::C, d, 2) == PairClass::NotStarPair);
  CHECK(classify_star_pair(Label::C, YoungDiagram({3, 1, 1}), 3) == PairClass::Tailed);
  CHECK(classify_star_pair(Label::C, d, 9) == PairClass::Vacant);
}

TEST_CASE("primitive pairs") {
  CHECK(primitive_pairs(Label::C, YoungDiagram({5, 3, 3, 3, 3, 1, 1})) ==
        PPSubset{{1, 2}, {5, 6}});
  CHECK(primitive_pairs(Label::C, YoungDiagram({3, 1, 1})) == PPSubset{{1, 2}});
  CHECK(primitive_pairs(Label::B, YoungDiagram()).empty());
}

TEST_CASE("cell diagrams of the four case blocks") {
  {
    const CellDiagrams cd = cell_diagrams(Label::C, YoungDiagram({5, 3, 3, 3, 3, 1, 1}), {});
    CHECK(cd.iota == YoungDiagram({3, 2}));
    CHECK(cd.jmath == YoungDiagram({3, 1}));
  }
  {
    const CellDiagrams cd = cell_diagrams(Label::C, YoungDiagram({3, 1, 1}), {{1, 2}});
    CHECK(cd.iota == YoungDiagram({1, 1}));
    CHECK(cd.jmath == YoungDiagram());
  }
  {
    const CellDiagrams cd = cell_diagrams(Label::B, YoungDiagram({6, 6, 2, 2, 2}), {});
    CHECK(cd.iota == YoungDiagram({2, 1, 1}));
    CHECK(cd.jmath == YoungDiagram({3, 1, 1}));
  }
  {
    const CellDiagrams cd = cell_diagrams(Label::D, YoungDiagram({7, 7, 7, 3}), {});
    CHECK(cd.iota == YoungDiagram({2, 2, 2, 2}));
    CHECK(cd.jmath == YoungDiagram({2, 1, 1}));
  }
  {
    const CellDiagrams cd = cell_diagrams(Label::Ct, YoungDiagram({8, 6, 6, 6, 4, 4, 2}), {});
    CHECK(cd.iota == YoungDiagram({4, 3, 2, 1}));
    CHECK(cd.jmath == YoungDiagram({3, 3, 2}));
  }
  CHECK_THROWS_AS(cell_diagrams(Label::C, YoungDiagram({3, 1, 1}), {{3, 4}}), BadSubset);
}

TEST_CASE("tau bad") {
  {
    const TauBad tau = tau_bad(Label::B, YoungDiagram({3, 3}), Variant::Unique);
    CHECK(tau.pair.left == YoungDiagram({1, 1}));
    CHECK(tau.pair.right == YoungDiagram({1}));
    CHECK(tau.dec == Decoration::None);
  }
  {
    const TauBad tau = tau_bad(Label::C, YoungDiagram({2, 2}), Variant::Unique);
    CHECK(tau.pair.left == YoungDiagram({1}));
    CHECK(tau.pair.right == YoungDiagram({1}));
    CHECK(tau.dec != Decoration::None);
  }
  {
    const TauBad tau = tau_bad(Label::D, YoungDiagram(), Variant::Unique);
    CHECK(tau.pair.left.empty());
    CHECK(tau.pair.right.empty());
  }
  CHECK_THROWS_AS(tau_bad(Label::B, YoungDiagram({3}), Variant::Unique), BadParityViolation);
}

TEST_CASE("lusztig left cell") {
  {
    const auto cell = lusztig_left_cell(Label::C, YoungDiagram({3, 1, 1}), Variant::Unique);
    REQUIRE(cell.size() == 2);
    CHECK(cell[0].good.iota == YoungDiagram({1}));
    CHECK(cell[0].good.jmath == YoungDiagram({1}));
    CHECK(cell[1].good.iota == YoungDiagram({1, 1}));
    CHECK(cell[1].good.jmath == YoungDiagram());
  }
  CHECK(lusztig_left_cell(Label::C, YoungDiagram({5, 3, 3, 3, 3, 1, 1}), Variant::Unique)
            .size() == 4);
  CHECK(lusztig_left_cell(Label::B, YoungDiagram(), Variant::Unique).size() == 1);
  // C̃ identifies wp with its complement.
  CHECK(lusztig_left_cell(Label::Ct, YoungDiagram({4, 2}), Variant::Unique).size() == 1);
}

TEST_CASE("cells property battery") {
  const CheckResult result = checks::cells_properties(12);
  INFO(result.detail);
  CHECK(result.failures == 0);
}
