#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "unip/check.hpp"
#include "unip/weyl.hpp"

using namespace unip;

TEST_CASE("LR coefficients") {
  CHECK(lr_coeff(YoungDiagram({1}), YoungDiagram({1}), YoungDiagram({2})) == 1);
  CHECK(lr_coeff(YoungDiagram({2, 1}), YoungDiagram({2, 1}), YoungDiagram({3, 2, 1})) == 2);
  CHECK(lr_coeff(YoungDiagram({3}), YoungDiagram(), YoungDiagram({3})) == 1);
  CHECK(lr_coeff(YoungDiagram({2}), YoungDiagram({1}), YoungDiagram({1, 1, 1})) == 0);
  CHECK_THROWS_AS(lr_coeff(YoungDiagram({2}), YoungDiagram({1}), YoungDiagram({2})),
                  SizeMismatch);
}

TEST_CASE("bipartition induction") {
  const Bipartition x{YoungDiagram({1}), YoungDiagram()};
  const VirtualRep prod = induct_bipartitions(x, x);
  CHECK(prod.size() == 2);
  CHECK(prod.at(Bipartition{YoungDiagram({2}), YoungDiagram()}) == 1);
  CHECK(prod.at(Bipartition{YoungDiagram({1, 1}), YoungDiagram()}) == 1);
  const VirtualRep mixed =
      induct_bipartitions(Bipartition{YoungDiagram(), YoungDiagram({1})}, x);
  CHECK(mixed.size() == 1);
  CHECK(mixed.at(Bipartition{YoungDiagram({1}), YoungDiagram({1})}) == 1);
}

TEST_CASE("special inductions") {
  {
    const auto result = special_induction(SpecialInduction::HetaToW, 1);
    REQUIRE(result.bipartitions.size() == 1);
    CHECK(result.bipartitions[0] == Bipartition{YoungDiagram({1}), YoungDiagram({1})});
  }
  {
    const auto result = special_induction(SpecialInduction::WepsToS, 1);
    REQUIRE(result.partitions.size() == 1);
    CHECK(result.partitions[0] == YoungDiagram({1, 1}));
  }
  {
    const auto result = special_induction(SpecialInduction::StrivToW, 2);
    REQUIRE(result.bipartitions.size() == 3);
    CHECK(result.bipartitions[0] == Bipartition{YoungDiagram(), YoungDiagram({2})});
    CHECK(result.bipartitions[2] == Bipartition{YoungDiagram({2}), YoungDiagram()});
  }
}

TEST_CASE("a-invariants") {
  CHECK(a_invariant(YoungDiagram({4})) == 0);
  CHECK(a_invariant(YoungDiagram(std::vector<int>(4, 1))) == 6);
  CHECK(a_invariant(Bipartition{YoungDiagram({3}), YoungDiagram()}) == 0);
  CHECK(a_invariant(Bipartition{YoungDiagram(), YoungDiagram({1})}) == 1);
  CHECK(a_invariant(Bipartition{YoungDiagram({1}), YoungDiagram({1})}) == 1);
  CHECK(a_invariant(WPrimeIrrep::make(YoungDiagram({1}), YoungDiagram({1}), Decoration::I)) ==
        1);
}

TEST_CASE("restriction to the index-two subgroup") {
  const auto split = restrict_to_wprime(Bipartition{YoungDiagram({1}), YoungDiagram({1})});
  CHECK(split.size() == 2);
  const auto single = restrict_to_wprime(Bipartition{YoungDiagram({2}), YoungDiagram({1})});
  CHECK(single.size() == 1);
  CHECK(single[0].dec == Decoration::None);
}

TEST_CASE("coherent multiplicity golden cases") {
  // GL_2(R) at sigma = [1,1]: the coherent continuation space contains it twice.
  CHECK(coh_multiplicity_gl(Label::AR, OrbitSpec{Label::AR, YoungDiagram({2}),
                                                 Variant::Unique}) == 2);
  CHECK(coh_multiplicity_gl(Label::AH, OrbitSpec{Label::AH, YoungDiagram({2}),
                                                 Variant::Unique}) == 1);
  // Sp_4(R) at tau_empty = ([1],[1]): multiplicity 4.
  CHECK(coh_multiplicity_good(Label::C, GroupForm::rank(Label::C, 2),
                              Bipartition{YoungDiagram({1}), YoungDiagram({1})}) == 4);
}

TEST_CASE("weyl property batteries") {
  const CheckResult lr = checks::lr_properties(7);
  INFO(lr.detail);
  CHECK(lr.failures == 0);
  const CheckResult audit = checks::special_induction_audit(5);
  INFO(audit.detail);
  CHECK(audit.failures == 0);
  const CheckResult gl = checks::gl_oracle_equality(5);
  INFO(gl.detail);
  CHECK(gl.failures == 0);
  const CheckResult oracle = checks::oracle_equality(3);
  INFO(oracle.detail);
  CHECK(oracle.failures == 0);
}
