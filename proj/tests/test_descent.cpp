#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "unip/check.hpp"
#include "unip/descent.hpp"

using namespace unip;

TEST_CASE("howe duals") {
  CHECK(howe_dual(Label::B) == Label::Ct);
  CHECK(howe_dual(Label::Cstar) == Label::Dstar);
  for (Label star : {Label::B, Label::C, Label::Ct, Label::D, Label::Cstar, Label::Dstar})
    CHECK(howe_dual(howe_dual(star)) == star);
}

TEST_CASE("dual descent") {
  {
    const DualDescent child = dual_descent(Label::D, YoungDiagram({7, 7, 7, 3}), {});
    CHECK(child.star == Label::C);
    CHECK(child.d == YoungDiagram({7, 7, 3}));
    CHECK(child.wp.empty());
  }
  {
    const DualDescent child = dual_descent(Label::D, YoungDiagram(), {});
    CHECK(child.star == Label::C);
    CHECK(child.d == YoungDiagram({1}));
  }
  {
    const DualDescent child = dual_descent(Label::C, YoungDiagram({3, 1, 1}), {{1, 2}});
    CHECK(child.star == Label::D);
    CHECK(child.d == YoungDiagram({1, 1}));
    CHECK(child.wp.empty());
  }
  {
    const DualDescent child =
        dual_descent(Label::C, YoungDiagram({5, 5, 3, 1, 1}), {{3, 4}});
    CHECK(child.wp == PPSubset{{2, 3}});
  }
}

TEST_CASE("naive descent worked examples") {
  {
    // Section 11.3: C̃ over rows 8,6,6,6,4,4,2.
    const PaintedBipartition t = parse_pbp("***c/*sc/sc/c|***/*rd/dd|Ct");
    REQUIRE(validate_pbp(t));
    const PaintedBipartition expected = parse_pbp("**c/*c/c|**s/*rd/dd|B-");
    CHECK(naive_descent(t) == expected);
  }
  {
    // Section 11.4: D over rows 7,7,7,3.
    const PaintedBipartition t = parse_pbp("**/*s/*s/rc|**/*/*|D");
    REQUIRE(validate_pbp(t));
    const PaintedBipartition expected = parse_pbp("*/*/*/c|*s/*/*|C");
    CHECK(naive_descent(t) == expected);
  }
  {
    const PaintedBipartition t = parse_pbp("||Cstar");
    CHECK(naive_descent(t) == parse_pbp("||Dstar"));
  }
}

TEST_CASE("descent worked examples") {
  {
    // Section 11.4: the D-case branch overrides the bottom-left symbol.
    const PaintedBipartition t = parse_pbp("**/*s/*s/rc|**/*/*|D");
    const PaintedBipartition expected = parse_pbp("*/*/*/r|*s/*/*|C");
    CHECK(descend(t, YoungDiagram({7, 7, 7, 3}), {}) == expected);
  }
  {
    // C with (1,2) in wp composes the shape shift with the naive descent.
    const PaintedBipartition t = parse_pbp("r/c||C");
    const PaintedBipartition out = descend(t, YoungDiagram({3, 1, 1}), {{1, 2}});
    const DualDescent child = dual_descent(Label::C, YoungDiagram({3, 1, 1}), {{1, 2}});
    CHECK(child.d == YoungDiagram({1, 1}));
    CHECK(star_of(out.gamma) == Label::D);
    CHECK(validate_pbp(out));
  }
  {
    // C* single row: descend twice down to the unique element over [1].
    const PaintedBipartition t = parse_pbp("|s|Cstar");
    const PaintedBipartition mid = descend(t, YoungDiagram({3}), {});
    CHECK(mid == parse_pbp("||Dstar"));
    const PaintedBipartition last = descend(mid, YoungDiagram(), {});
    CHECK(last == parse_pbp("||Cstar"));
  }
}

TEST_CASE("tails") {
  {
    const Tail t = tail(parse_pbp("|s|B+"), YoungDiagram({2}));
    CHECK(t.tau == parse_pbp("s/c||D"));
    CHECK(t.x == Symbol::C);
    CHECK(t.eps == 1);
  }
  {
    const Tail t = tail(parse_pbp("|d|B-"), YoungDiagram({2}));
    CHECK(t.tau == parse_pbp("s/d||D"));
    CHECK(t.x == Symbol::D);
    CHECK(t.eps == 0);
  }
  {
    const Tail t = tail(parse_pbp("|s|Cstar"), YoungDiagram({3}));
    CHECK(t.tau == parse_pbp("|s|Cstar"));
    CHECK(t.eps == 1);
  }
}

TEST_CASE("double descent on the smallest C* orbit") {
  const auto elements = enumerate_pbp(Label::Cstar, YoungDiagram({3}), {});
  REQUIRE(elements.size() == 2);
  for (const auto& t : elements) {
    const DoubleDescent dd = double_descent(t, YoungDiagram({3}), {});
    const Signature st = pbp_signature(t);
    const Signature sc = pbp_signature(dd.core);
    const Signature stail = pbp_signature(dd.tail.tau);
    CHECK(st.p == sc.p + stail.p);
    CHECK(st.q == sc.q + stail.q);
  }
  CHECK_THROWS_AS(double_descent(parse_pbp("|s|B+"), YoungDiagram({2}), {}),
                  PreconditionViolated);
}

TEST_CASE("descent property batteries") {
  const CheckResult shifts = checks::shape_shift_contracts(10);
  INFO(shifts.detail);
  CHECK(shifts.failures == 0);
  const CheckResult one_step = checks::descent_bijectivity(10);
  INFO(one_step.detail);
  CHECK(one_step.failures == 0);
  const CheckResult dd = checks::double_descent_contracts(10);
  INFO(dd.detail);
  CHECK(dd.failures == 0);
  const CheckResult inj = checks::descent_injectivity(10);
  INFO(inj.detail);
  CHECK(inj.failures == 0);
}
