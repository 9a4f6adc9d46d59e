#include "cocat/catalog.hpp"
#include "cocat/colimits.hpp"
#include "cocat/error.hpp"
#include "cocat/io.hpp"
#include "cocat/sesqui.hpp"
#include "cocat/tensor.hpp"
#include "doctest.h"

using namespace cocat;

namespace {

Path path(const HigherPresentation& hp, const std::string& start, const std::vector<std::string>& edges) {
  return make_path(hp.graph(), start, edges);
}

// Number of unordered pairs of distinct parallel morphisms.
std::size_t parallel_pairs(const Category& c) {
  std::size_t n = 0;
  for (VertexId a = 0; a < c.object_count(); ++a) {
    for (VertexId b = 0; b < c.object_count(); ++b) {
      auto k = c.hom(a, b).size();
      n += k * (k - 1) / 2;
    }
  }
  return n;
}

CategoryPtr funny(std::size_t m, std::size_t n) { return Category::make(funny_tensor(ordinal(m), ordinal(n))); }

Functor identity_functor(const CategoryPtr& c) { return Functor::identity(c); }

}  // namespace

TEST_CASE("free grid composites are distinct without interchange and equal with it") {
  for (bool inv : {false, true}) {
    auto sesqui = free_grid(inv, Flavor::Sesqui);
    CHECK(sesqui->cells.size() == 4);
    CHECK(sesqui->relations.empty());
    auto [a, b] = grid_composites(*sesqui);
    REQUIRE(well_formed(*sesqui, a));
    REQUIRE(well_formed(*sesqui, b));
    CHECK(a != b);
    CHECK(twocell_equal(*sesqui, a, b).verdict == CellVerdict::DistinctByNormalForm);

    auto two = free_grid(inv, Flavor::TwoCategory);
    auto [c, d] = grid_composites(*two);
    auto eq = twocell_equal(*two, c, d);
    CHECK(eq.verdict == CellVerdict::Equal);
    CHECK(eq.chain.size() >= 2);
  }
}

TEST_CASE("pasting order of the grid matches the interchanger pasting") {
  auto grid = free_grid(false);
  auto [a, b] = grid_composites(*grid);
  auto from = path(*grid, "(0,0)", {"(f,0)", "(g,0)", "(2,f)", "(2,g)"});
  auto to = path(*grid, "(0,0)", {"(0,f)", "(0,g)", "(f,2)", "(g,2)"});
  CHECK(a.src == from);
  CHECK(a.tgt == to);
  CHECK(b.src == from);
  CHECK(b.tgt == to);
}

TEST_CASE("parallel words that are equal by construction") {
  auto grid = free_grid(true);
  auto [a, b] = grid_composites(*grid);
  CHECK(twocell_equal(*grid, a, a).verdict == CellVerdict::Equal);
  auto round = vertical(*grid, a, inverse(*grid, a));
  CHECK(round == identity_cell(*grid, a.src));
  CHECK_THROWS_AS(twocell_equal(*grid, a, identity_cell(*grid, a.src)), Error);
  try {
    twocell_equal(*grid, a, identity_cell(*grid, a.src));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BoundaryMismatch);
  }
}

TEST_CASE("reduce is idempotent and whiskering is functorial") {
  auto grid = free_grid(true);
  auto [a, b] = grid_composites(*grid);
  auto ab = vertical(*grid, a, inverse(*grid, b));
  CHECK(reduce(*grid, ab) == ab);
  // Whiskering the (1,1)->(2,2) squares.
  auto hp = free_grid(false);
  auto sq = generator_cell(*hp, hp->cell_id("[g,g]"));
  auto left = path(*hp, "(0,0)", {"(f,0)", "(1,f)"});
  auto w1 = whisker(*hp, left, sq, path(*hp, "(2,2)", {}));
  auto composed = whisker(*hp, path(*hp, "(0,0)", {"(f,0)"}), whisker(*hp, path(*hp, "(1,0)", {"(1,f)"}), sq,
                                                                           path(*hp, "(2,2)", {})),
                          path(*hp, "(2,2)", {}));
  CHECK(w1 == composed);
  auto tl = generator_cell(*hp, hp->cell_id("[f,f]"));
  auto post = path(*hp, "(1,1)", {"(g,1)", "(2,g)"});
  auto v = vertical(*hp, tl, identity_cell(*hp, tl.tgt));
  CHECK(whisker(*hp, path(*hp, "(0,0)", {}), v, post) == whisker(*hp, path(*hp, "(0,0)", {}), tl, post));
}

TEST_CASE("locally indiscrete presentations") {
  auto one = locally_indiscrete(Category::make(ordinal(1)));
  CHECK(one->cells.empty());

  auto i22 = locally_indiscrete(funny(2, 2));
  CHECK(i22->cells.size() == 1);
  CHECK(i22->relations.empty());
  CHECK(i22->cells[0].invertible);

  for (auto [m, n] : {std::pair{3, 2}, std::pair{2, 3}, std::pair{3, 3}}) {
    auto base = funny(m, n);
    auto ind = locally_indiscrete(base);
    CHECK(ind->cells.size() == parallel_pairs(*base));
    CHECK(ind->all_invertible());
  }
}

TEST_CASE("parallel 2-cells of a locally indiscrete presentation agree") {
  auto ind = locally_indiscrete(funny(3, 2));
  auto& hp = *ind;
  auto src = path(hp, "(0,0)", {"(f,0)", "(g,0)", "(2,f)"});
  auto tgt = path(hp, "(0,0)", {"(0,f)", "(f,1)", "(g,1)"});
  auto direct = shortest_word(hp, src, tgt);
  REQUIRE(direct);
  auto mid = path(hp, "(0,0)", {"(f,0)", "(1,f)", "(g,1)"});
  auto via = vertical(hp, *shortest_word(hp, src, mid), *shortest_word(hp, mid, tgt));
  CHECK(twocell_equal(hp, *direct, via).equal());
}

TEST_CASE("generation of 2-cells") {
  auto i22 = locally_indiscrete(funny(2, 2));
  CHECK(generates_2cells(SesquiFunctor::identity(i22)).generated);

  auto discrete = locally_discrete(funny(2, 2));
  auto lift = indiscrete_lift(identity_functor(discrete->base), discrete, i22);
  REQUIRE(lift.valid());
  auto gen = generates_2cells(lift);
  CHECK_FALSE(gen.generated);
  CHECK(gen.witness == i22->cells[0].name);

  auto d2 = locally_discrete(Category::make(ordinal(2)));
  auto to_discrete = SesquiFunctor(d2, discrete, Functor(d2->base, discrete->base, {0, 2}, {path(*discrete, "(0,0)", {"(f,0)"})}), {});
  CHECK(to_discrete.valid());
  CHECK(generates_2cells(to_discrete).generated);
}

TEST_CASE("Gray tensor of 3 and 2 as a pushout of two squares") {
  auto two = locally_discrete(Category::make(ordinal(2)), Flavor::TwoCategory);
  auto one = locally_discrete(Category::make(ordinal(1)), Flavor::TwoCategory);
  auto lax22 = tensor_higher(TensorKind::GrayLax, two, two);
  auto lax12 = tensor_higher(TensorKind::GrayLax, one, two);
  auto at = [&](VertexId v) { return SesquiFunctor(one, two, Functor(one->base, two->base, {v}, {}), {}); };
  auto id2 = SesquiFunctor::identity(two);
  auto end = tensor_map(TensorKind::GrayLax, at(1), id2, lax12, lax22);
  auto start = tensor_map(TensorKind::GrayLax, at(0), id2, lax12, lax22);
  REQUIRE(end.valid());
  REQUIRE(start.valid());
  auto po = pushout_sesqui(end, start);
  CHECK(po.apex->cells.size() == 2);
  CHECK(po.apex->relations.empty());

  auto lax32 = gray_tensor(TensorKind::GrayLax, ordinal(3), ordinal(2));
  CHECK(lax32->cells.size() == 2);
  CHECK(po.apex->base->morphism_count() == lax32->base->morphism_count());
  CHECK(po.apex->base->object_count() == lax32->base->object_count());
}

TEST_CASE("pushouts of higher presentations") {
  auto two = locally_discrete(Category::make(ordinal(2)));
  auto two_cat = locally_discrete(Category::make(ordinal(2)), Flavor::TwoCategory);
  auto id = SesquiFunctor::identity(two);
  auto id_cat = SesquiFunctor::identity(two_cat);
  try {
    pushout_sesqui(id, id_cat);
    FAIL("expected FlavorMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FlavorMismatch);
  }

  // The underlying category of a pushout is the pushout of the bases.
  auto one = locally_discrete(Category::make(ordinal(1)));
  auto at = [&](VertexId v) { return SesquiFunctor(one, two, Functor(one->base, two->base, {v}, {}), {}); };
  auto po = pushout_sesqui(at(1), at(0));
  auto base = pushout_cat(at(1).base(), at(0).base());
  CHECK(po.apex->base->morphism_count() == base.category->morphism_count());
  CHECK(po.apex->base->object_count() == base.category->object_count());
  CHECK(is_pushout(at(1), at(0), po.left, po.right) == Truth::Yes);
}

TEST_CASE("flavor names") {
  CHECK(to_string(Flavor::Sesqui) == "sesqui");
  CHECK(to_string(Flavor::TwoCategory) == "2cat");
  CHECK(flavor_from_string("2cat") == Flavor::TwoCategory);
  CHECK_THROWS_AS(flavor_from_string("tricat"), Error);
}

TEST_CASE("2-dimensional presentation files") {
  auto lax = tensor_higher(TensorKind::GrayLax, gray_tensor(TensorKind::GrayLax, ordinal(2), ordinal(2)),
                           locally_discrete(Category::make(ordinal(2)), Flavor::TwoCategory));
  REQUIRE_FALSE(lax->relations.empty());
  auto j = higher_to_json(*lax);
  CHECK(j["flavor"] == "2cat");
  auto back = higher_from_json(j);
  CHECK(back->base->presentation() == lax->base->presentation());
  CHECK(back->cells == lax->cells);
  CHECK(back->relations == lax->relations);
  CHECK(dump(higher_to_json(*back)) == dump(j));
  j["twocells"][0]["src"]["start"] = "nowhere";
  CHECK_THROWS_AS(higher_from_json(j), Error);
}
