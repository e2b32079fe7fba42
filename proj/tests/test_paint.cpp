#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "unip/check.hpp"
#include "unip/parity.hpp"
#include "unip/pbp.hpp"

using namespace unip;

TEST_CASE("painting validity matches the worked examples") {
  CHECK(is_valid_painting(parse_painting("****r/*rd/sr/dd")));
  CHECK_FALSE(is_valid_painting(parse_painting("dc")));
  CHECK_FALSE(is_valid_painting(parse_painting("cd/c")));
  CHECK_FALSE(is_valid_painting(parse_painting("*ssrd/rc")));
}

TEST_CASE("painting round trip") {
  const Painting p = parse_painting("**c/*c/c");
  CHECK(to_string(p) == "**c/*c/c");
  CHECK(p.shape() == YoungDiagram({3, 2, 1}));
  CHECK(p.at(2, 2) == Symbol::C);
  CHECK(dot_diagram(p) == YoungDiagram({2, 1}));
}

TEST_CASE("PAP enumeration") {
  CHECK(enumerate_pap(Label::AR, YoungDiagram({2, 1})).size() == 4);
  CHECK(enumerate_pap(Label::AH, YoungDiagram({2, 2})).size() == 1);
  {
    const auto paintings = enumerate_pap(Label::A, YoungDiagram({2}));
    REQUIRE(paintings.size() == 3);
    std::set<std::string> texts;
    for (const auto& p : paintings) texts.insert(to_string(p));
    CHECK(texts == std::set<std::string>{"s/s", "s/r", "r/r"});
  }
  CHECK(enumerate_pap(Label::AR, YoungDiagram()).size() == 1);
}

TEST_CASE("PAP signatures") {
  CHECK(pap_signature(parse_painting("****r/**/sr/s/r")) == Signature{6, 5});
  CHECK(pap_signature(parse_painting("**/**")) == Signature{2, 2});
  CHECK(pap_signature(parse_painting("s/r")) == Signature{1, 1});
}

TEST_CASE("painted bipartition validation and attribution") {
  const PaintedBipartition so109 = parse_pbp("**/*/c|**d/*/d|B+");
  CHECK(validate_pbp(so109));
  CHECK(pbp_signature(so109) == Signature{10, 9});
  CHECK(to_string(group_of(so109)) == "SO(10,9)");
  // Same paintings with a mismatched gamma fail the alphabet test.
  PaintedBipartition bad = so109;
  bad.gamma = Gamma::C;
  CHECK_FALSE(validate_pbp(bad));
  CHECK(validate_pbp(PaintedBipartition{Painting(), Painting(), Gamma::Cstar}));
  // The section-11.4 example lands in SO(11,13).
  const PaintedBipartition d_example = parse_pbp("**/*s/*s/rc|**/*/*|D");
  CHECK(validate_pbp(d_example));
  CHECK(pbp_signature(d_example) == Signature{11, 13});
}

TEST_CASE("PBP enumeration golden cases") {
  {
    const auto all = enumerate_pbp(Label::C, YoungDiagram({3, 1, 1}), {});
    REQUIRE(all.size() == 4);
    CHECK(to_string(all[0]) == "*|*|C");
    CHECK(to_string(all[1]) == "r|s|C");
    CHECK(to_string(all[2]) == "c|s|C");
    CHECK(to_string(all[3]) == "d|s|C");
  }
  {
    const auto all = enumerate_pbp(Label::C, YoungDiagram({3, 1, 1}), {{1, 2}});
    REQUIRE(all.size() == 4);
    CHECK(to_string(all[0]) == "r/r||C");
    CHECK(to_string(all[1]) == "r/c||C");
    CHECK(to_string(all[2]) == "r/d||C");
    CHECK(to_string(all[3]) == "c/d||C");
  }
  CHECK(enumerate_pbp(Label::Ct, YoungDiagram({4, 2}), {}).size() == 6);
}

TEST_CASE("bad parity painted bipartitions") {
  CHECK(enumerate_pbp_bad(Label::Cstar, YoungDiagram({2, 2})).size() == 1);
  CHECK(enumerate_pbp_bad(Label::B, YoungDiagram({1, 1})).size() == 2);
  CHECK(enumerate_pbp_bad(Label::D, YoungDiagram()).size() == 1);
  // PBP* cardinality equals the type A painted-partition count.
  for (Label star : {Label::B, Label::C, Label::Ct, Label::D})
    for (int half = 0; half <= 5; ++half)
      for (const YoungDiagram& dbp : partitions_of(half)) {
        bool bad_parity = true;
        for (int row : dbp.rows())
          bad_parity = bad_parity &&
                       !good_parity(row, star, 0);
        if (!bad_parity) continue;
        const YoungDiagram db = union_rows(dbp, dbp);
        CHECK(enumerate_pbp_bad(star, db).size() == enumerate_pap(Label::AR, dbp).size());
      }
}

TEST_CASE("paint property batteries") {
  const CheckResult nesting = checks::nesting_equivalence(6);
  INFO(nesting.detail);
  CHECK(nesting.failures == 0);
  const CheckResult product = checks::pap_product_formula(8);
  INFO(product.detail);
  CHECK(product.failures == 0);
  const CheckResult wp = checks::wp_independence(10);
  INFO(wp.detail);
  CHECK(wp.failures == 0);
  const CheckResult quat = checks::quaternionic_vanishing(10);
  INFO(quat.detail);
  CHECK(quat.failures == 0);
  const CheckResult sums = checks::signature_sums(10);
  INFO(sums.detail);
  CHECK(sums.failures == 0);
}
