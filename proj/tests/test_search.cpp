#include <algorithm>

#include "cocat/catalog.hpp"
#include "cocat/error.hpp"
#include "cocat/instances.hpp"
#include "cocat/search.hpp"
#include "doctest.h"

using namespace cocat;

namespace {

template <class W>
bool all_pass(const std::vector<DoubleCocategoryData<W>>& xs) {
  return std::all_of(xs.begin(), xs.end(), [](const auto& x) { return check_double_cocategory(x).passed(); });
}

template <class W>
bool contains(const std::vector<DoubleCocategoryData<W>>& xs, const DoubleCocategoryData<W>& y) {
  return std::any_of(xs.begin(), xs.end(), [&](const auto& x) { return isomorphic(x, y); });
}

}  // namespace

TEST_CASE("extra diagonals") {
  auto a = Category::make(extra_diagonals(2));
  const Graph& g = a->graph();
  CHECK(a->hom(*g.find_vertex("(0,0)"), *g.find_vertex("(1,1)")).size() == 4);
  CHECK(extra_diagonals(0) == funny_tensor(ordinal(2), ordinal(2)));
}

TEST_CASE("completions of the arrow cocategory") {
  SUBCASE("the funny square completes to S⋆S alone") {
    auto r = search_double_completions(extra_diagonals(0));
    CHECK(all_pass(r.completions));
    auto classes = up_to_isomorphism(r.completions);
    REQUIRE(classes.size() == 1);
    CHECK(isomorphic(classes[0], arrow_tensor(TensorKind::Funny)));
  }
  SUBCASE("the commutative square completes to S×S alone") {
    auto r = search_double_completions(cartesian_tensor(ordinal(2), ordinal(2)));
    CHECK(all_pass(r.completions));
    auto classes = up_to_isomorphism(r.completions);
    REQUIRE(classes.size() == 1);
    CHECK(isomorphic(classes[0], arrow_tensor(TensorKind::Cartesian)));
    CHECK_FALSE(isomorphic(classes[0], arrow_tensor(TensorKind::Funny)));
  }
  SUBCASE("extra diagonals admit no completion") {
    for (std::size_t k : {1, 2}) {
      auto r = search_double_completions(extra_diagonals(k));
      CHECK(r.boundaries > 0);
      CHECK(r.completions.empty());
    }
  }
  SUBCASE("serial and parallel searches agree") {
    auto a = search_double_completions(extra_diagonals(0), true);
    auto b = search_double_completions(extra_diagonals(0), false);
    CHECK(a.boundaries == b.boundaries);
    CHECK(a.comultiplications == b.comultiplications);
    REQUIRE(a.completions.size() == b.completions.size());
    for (std::size_t k = 0; k < a.completions.size(); ++k) CHECK(isomorphic(a.completions[k], b.completions[k]));
  }
}

TEST_CASE("completion search guards") {
  CHECK_NOTHROW(search_double_completions(extra_diagonals(4)));
  try {
    search_double_completions(extra_diagonals(5));
    FAIL("expected SearchSpaceTooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SearchSpaceTooLarge);
  }
  CHECK_THROWS_AS(search_double_completions(ordinal(2)), Error);
  CHECK_THROWS_AS(set_double_completions(7), Error);
}

TEST_CASE("cocategories in Set") {
  SUBCASE("none without A2") { CHECK(enumerate_set_cocategories(0).empty()); }
  SUBCASE("every result is a co-preorder") {
    for (const auto& x : enumerate_set_cocategories(4)) {
      CHECK(check_cocategory(x).passed());
      std::vector<bool> hit(x.a2, false);
      hit[x.d(0)] = hit[x.c(0)] = true;
      CHECK(std::all_of(hit.begin(), hit.end(), [](bool b) { return b; }));
    }
  }
  SUBCASE("one class per equaliser of d and c") {
    // With A1 = 1 the equaliser of d, c is 1 or empty; the cocategory is its
    // cokernel pair: the trivial cocategory or O.
    auto xs = enumerate_set_cocategories(4);
    REQUIRE(xs.size() == 2);
    auto trivial = std::count_if(xs.begin(), xs.end(), [](const auto& x) { return x.a2 == 1 && x.a3 == 1; });
    auto o = std::count_if(xs.begin(), xs.end(), [](const auto& x) { return isomorphic(x, set_cocategory()); });
    CHECK(trivial == 1);
    CHECK(o == 1);
    CHECK(enumerate_set_cocategories(2).size() == 2);
    CHECK(enumerate_set_cocategories(6).size() == 2);
  }
  CHECK_THROWS_AS(enumerate_set_cocategories(7), Error);
}

TEST_CASE("isomorphism of Set cocategories") {
  auto o = set_cocategory();
  auto flipped = o;
  FinMap swap{2, 2, {1, 0}};
  flipped.d = then(o.d, swap);
  flipped.c = then(o.c, swap);
  flipped.p = FinMap{2, 3, {1, 0}};
  flipped.q = FinMap{2, 3, {2, 1}};
  flipped.first = flipped.p;
  flipped.second = flipped.q;
  flipped.m = FinMap{2, 3, {2, 0}};
  CHECK(check_cocategory(flipped).passed());
  CHECK(isomorphic(o, flipped));
  CHECK_FALSE(isomorphic(o, swap_m_p(o)));
}

TEST_CASE("double completions in Set") {
  auto r = set_double_completions(4);
  CHECK(all_pass(r.completions));
  auto classes = up_to_isomorphism(r.completions);
  REQUIRE(classes.size() == 1);
  CHECK(isomorphic(classes[0], set_product()));
  CHECK(contains(r.completions, set_product()));
  CHECK(classes[0].grid[1][1] == 4);
  auto serial = set_double_completions(4, false);
  CHECK(serial.completions.size() == r.completions.size());
}
