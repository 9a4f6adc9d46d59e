#include <algorithm>

#include "cocat/catalog.hpp"
#include "cocat/error.hpp"
#include "cocat/instances.hpp"
#include "doctest.h"

using namespace cocat;

namespace {

bool has_failure(const CheckReport& r, const std::string& axiom) {
  return std::any_of(r.failures.begin(), r.failures.end(), [&](const Failure& f) { return f.axiom == axiom; });
}

bool has_failure_containing(const CheckReport& r, const std::string& part) {
  return std::any_of(r.failures.begin(), r.failures.end(),
                     [&](const Failure& f) { return f.axiom.find(part) != std::string::npos; });
}

}  // namespace

TEST_CASE("the arrow cocategory in Cat") {
  auto s = arrow_cocategory();
  CHECK(s.a1->object_count() == 1);
  CHECK(s.a2->object_count() == 2);
  CHECK(s.a3->object_count() == 3);
  auto r = check_cocategory(s);
  CHECK(r.passed());
  CHECK(r.failures.empty());
}

TEST_CASE("the Set cocategory is the cokernel pair of the empty set") {
  auto o = set_cocategory();
  // |A3| = |A2| + |A2| - |A1| for a pushout along the injective d, c.
  CHECK(o.a3 == 2 * o.a2 - o.a1);
  CHECK(o.d(0) != o.c(0));
  CHECK(check_cocategory(o).passed());
}

TEST_CASE("mutations are rejected with witnesses") {
  SUBCASE("exchanging m and p in S") {
    auto r = check_cocategory(swap_m_p(arrow_cocategory()));
    CHECK(r.verdict == Verdict::Fail);
    CHECK(has_failure(r, "m;(i,1) = 1"));
    CHECK(has_failure(r, "p is the first injection"));
    CHECK_FALSE(r.witness.empty());
  }
  SUBCASE("exchanging m and p in O") {
    auto r = check_cocategory(swap_m_p(set_cocategory()));
    CHECK(r.verdict == Verdict::Fail);
    CHECK(has_failure(r, "c;p = d;q"));
  }
  SUBCASE("dropping a relation from the corner of S×S") {
    auto x = arrow_tensor(TensorKind::Cartesian);
    auto r = check_cocategory(drop_relation(x.rows[2], 0));
    CHECK(r.verdict == Verdict::Fail);
    CHECK(has_failure(r, "m is a morphism"));
  }
  SUBCASE("d equal to c over the pushout of distinct ends") {
    auto o = set_cocategory();
    o.c = o.d;
    auto r = check_cocategory(o);
    CHECK(has_failure(r, "A3 is the pushout of (c, d)"));
  }
  SUBCASE("ill-typed data") {
    auto o = set_cocategory();
    o.m = FinMap{2, 4, {0, 3}};
    auto r = check_cocategory(o);
    CHECK(has_failure(r, "m has the stated endpoints"));
  }
  CHECK_THROWS_AS(drop_relation(arrow_cocategory(), 0), Error);
}

TEST_CASE("both placements of the fourth object agree") {
  auto both = [](const auto& x) {
    return coassociative(x, FourLayout::ThreeTwo) == coassociative(x, FourLayout::TwoThree);
  };
  CHECK(coassociative(arrow_cocategory(), FourLayout::TwoThree) == Truth::Yes);
  CHECK(coassociative(set_cocategory(), FourLayout::TwoThree) == Truth::Yes);
  CHECK(both(arrow_cocategory()));
  CHECK(both(set_cocategory()));
  for (const auto& x : arrow_tensor(TensorKind::Funny).rows) CHECK(both(x));
  for (const auto& x : arrow_tensor(TensorKind::Cartesian).columns) CHECK(both(x));
  for (const auto& x : set_product().rows) CHECK(both(x));
  // m exchanges the ends: the two bracketings of the end element 1 differ.
  auto bad = set_cocategory();
  bad.m = FinMap{2, 3, {2, 0}};
  CHECK(coassociative(bad, FourLayout::ThreeTwo) == Truth::No);
  CHECK(coassociative(bad, FourLayout::TwoThree) == Truth::No);
}

TEST_CASE("pointwise tensors are double cocategories") {
  SUBCASE("Set product") {
    auto x = set_product();
    CHECK(x.grid[2][2] == 9);
    CHECK(check_double_cocategory(x).passed());
  }
  SUBCASE("funny") {
    auto x = arrow_tensor(TensorKind::Funny);
    // Objects of 3⋆3 are pairs; morphisms are interleavings of two chains.
    CHECK(x.grid[2][2]->object_count() == 9);
    CHECK(check_double_cocategory(x).passed());
  }
  SUBCASE("cartesian") {
    auto x = arrow_tensor(TensorKind::Cartesian);
    CHECK(x.grid[2][2]->morphism_count() == 36);
    CHECK(check_double_cocategory(x).passed());
  }
  SUBCASE("Gray tensors of 2-categories") {
    CHECK(check_double_cocategory(arrow_gray_tensor(TensorKind::GrayLax)).passed());
    CHECK(check_double_cocategory(arrow_gray_tensor(TensorKind::GrayPseudo)).passed());
  }
  SUBCASE("lax Gray tensor in sesquicategories fails interchange only") {
    auto r = check_double_cocategory(arrow_gray_tensor(TensorKind::GrayLax, Flavor::Sesqui));
    CHECK(r.verdict == Verdict::Fail);
    CHECK(has_failure(r, "interchange"));
    CHECK_FALSE(has_failure_containing(r, "row "));
    CHECK_FALSE(has_failure_containing(r, "column "));
  }
}

TEST_CASE("a swapped row breaks the double cocategory") {
  auto x = set_product();
  x.rows[1] = swap_m_p(x.rows[1]);
  auto r = check_double_cocategory(x);
  CHECK(r.verdict == Verdict::Fail);
  CHECK(has_failure_containing(r, "row 1: "));
}

TEST_CASE("the locally indiscrete pre-double cocategory") {
  auto x = indiscrete_instance();
  CHECK(x.separator.has_value());
  SUBCASE("interchange fails in the separating target") {
    auto r = check_interchange(x);
    CHECK(r.verdict == Verdict::Fail);
    CHECK(r.witness.find("distinct in the separating target") != std::string::npos);
  }
  SUBCASE("rows and columns are cocategories") {
    for (const auto& row : x.data.rows) CHECK(check_cocategory(row).passed());
    for (const auto& column : x.data.columns) CHECK(check_cocategory(column).passed());
  }
  SUBCASE("the full check stops at interchange") {
    auto r = check_double_cocategory(x.data);
    CHECK(r.verdict == Verdict::Fail);
    CHECK(has_failure(r, "interchange"));
  }
  SUBCASE("the underlying categories form S⋆S") {
    auto one = underlying(x.data);
    CHECK(check_double_cocategory(one).passed());
  }
  SUBCASE("the corner entries below 2x2 are locally indiscrete") {
    const auto& a = x.data.grid[1][1];
    CHECK(a->cells.size() == 1);
    CHECK(a->cells[0].invertible);
  }
}

TEST_CASE("interchange holds where the double check passes") {
  auto x = arrow_gray_tensor(TensorKind::GrayPseudo);
  CHECK(check_interchange(PreDoubleCocategoryData<HigherWorld>{x, std::nullopt}).passed());
  CHECK(check_interchange(PreDoubleCocategoryData<CatWorld>{arrow_tensor(TensorKind::Funny), std::nullopt}).passed());
}

TEST_CASE("standard instances by name") {
  for (const auto& name : standard_instance_names()) CHECK_NOTHROW(standard_instance(name));
  CHECK(std::holds_alternative<CocategoryData<SetWorld>>(standard_instance("O")));
  CHECK(std::holds_alternative<DoubleCocategoryData<CatWorld>>(standard_instance("SxS")));
  CHECK(std::holds_alternative<PreDoubleCocategoryData<HigherWorld>>(standard_instance("I")));
  try {
    standard_instance("T");
    FAIL("expected UnknownName");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownName);
  }
}

TEST_CASE("verdict names") {
  CHECK(to_string(Verdict::Pass) == "pass");
  CHECK(to_string(Verdict::Fail) == "fail");
  CHECK(to_string(Verdict::Bounded) == "bounded");
}
