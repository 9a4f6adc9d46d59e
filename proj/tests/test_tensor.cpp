#include <functional>

#include "cocat/catalog.hpp"
#include "cocat/colimits.hpp"
#include "cocat/error.hpp"
#include "cocat/tensor.hpp"
#include "doctest.h"

using namespace cocat;

namespace {

using Rename = std::function<std::string(const std::string&)>;

// Functor sending every vertex and generator to the one named by `rename`.
Functor renaming(const CategoryPtr& source, const CategoryPtr& target, const Rename& rename) {
  const Graph& s = source->graph();
  const Graph& t = target->graph();
  std::vector<VertexId> objects;
  for (VertexId v = 0; v < s.vertex_count(); ++v) objects.push_back(t.vertex_id(rename(s.vertex(v))));
  std::vector<Path> edges;
  for (EdgeId e = 0; e < s.edge_count(); ++e) edges.push_back(Path::of_edge(t, t.edge_id(rename(s.edge(e).name))));
  return Functor(source, target, std::move(objects), std::move(edges));
}

SesquiFunctor renaming(const HigherPtr& source, const HigherPtr& target, const Rename& rename) {
  std::vector<TwoCellWord> cells;
  for (const auto& c : source->cells) cells.push_back(generator_cell(*target, target->cell_id(rename(c.name))));
  return SesquiFunctor(source, target, renaming(source->base, target->base, rename), std::move(cells));
}

std::string swap_pair(const std::string& s) {
  auto comma = s.find(',');
  return s.substr(0, 1) + s.substr(comma + 1, s.size() - comma - 2) + "," + s.substr(1, comma - 1) + s.substr(s.size() - 1);
}

bool is_iso(const Functor& f, const Functor& g) {
  return f.valid() && g.valid() && equal(then(f, g), Functor::identity(f.source())) == Truth::Yes &&
         equal(then(g, f), Functor::identity(g.source())) == Truth::Yes;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

VertexId at(const Category& c, const std::string& label) { return c.graph().vertex_id(label); }

}  // namespace

TEST_CASE("funny tensor homs count shuffles") {
  auto c22 = Category::make(funny_tensor(ordinal(2), ordinal(2)));
  CHECK(c22->hom(at(*c22, "(0,0)"), at(*c22, "(1,1)")).size() == 2);
  auto c23 = Category::make(funny_tensor(ordinal(2), ordinal(3)));
  CHECK(c23->hom(at(*c23, "(0,0)"), at(*c23, "(1,2)")).size() == 3);
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t n = 1; n <= 4; ++n) {
      auto c = Category::make(funny_tensor(ordinal(m), ordinal(n)));
      CHECK(c->hom(0, static_cast<VertexId>(m * n - 1)).size() == binomial(m + n - 2, m - 1));
    }
  }
}

TEST_CASE("funny tensor of 2 and 2 is the pushout of its two halves") {
  // Two horizontal and two vertical edges glued along the four objects.
  Presentation rows, cols;
  for (auto p : {&rows, &cols}) {
    for (auto v : {"00", "01", "10", "11"}) p->graph.add_vertex(v);
  }
  rows.graph.add_edge("h0", "00", "10");
  rows.graph.add_edge("h1", "01", "11");
  cols.graph.add_edge("v0", "00", "01");
  cols.graph.add_edge("v1", "10", "11");
  auto points = Category::make(discrete(4));
  auto r = Category::make(rows);
  auto c = Category::make(cols);
  auto po = pushout_cat(Functor(points, r, {0, 1, 2, 3}, {}), Functor(points, c, {0, 1, 2, 3}, {}));
  auto funny = Category::make(funny_tensor(ordinal(2), ordinal(2)));
  CHECK(po.category->morphism_count() == funny->morphism_count());
  CHECK(po.category->morphism_count() == 10);
}

TEST_CASE("cartesian tensor") {
  auto c22 = Category::make(cartesian_tensor(ordinal(2), ordinal(2)));
  CHECK(c22->hom(at(*c22, "(0,0)"), at(*c22, "(1,1)")).size() == 1);
  // A product of posets: morphisms are pairs of morphisms.
  auto c33 = Category::make(cartesian_tensor(ordinal(3), ordinal(3)));
  auto three = Category::make(ordinal(3));
  CHECK(c33->morphism_count() == three->morphism_count() * three->morphism_count());
  CHECK(c33->morphism_count() == 36);
}

TEST_CASE("unit laws") {
  for (const auto& name : {"2", "3", "walking_iso"}) {
    auto a = catalog_category(name);
    auto wrap = [](const std::string& s) { return "(" + s + ",0)"; };
    auto unwrap = [](const std::string& s) { return s.substr(1, s.size() - 4); };
    auto times = Category::make(cartesian_tensor(a->presentation(), ordinal(1)), a->bounded() ? std::optional(a->bound()) : std::nullopt);
    CHECK(is_iso(renaming(a, times, wrap), renaming(times, a, unwrap)));
    auto funny = Category::make(funny_tensor(a->presentation(), ordinal(1)), a->bounded() ? std::optional(a->bound()) : std::nullopt);
    CHECK(is_iso(renaming(a, funny, wrap), renaming(funny, a, unwrap)));
  }
  auto b = Category::make(ordinal(3));
  auto left = Category::make(funny_tensor(ordinal(1), ordinal(3)));
  CHECK(is_iso(renaming(b, left, [](const std::string& s) { return "(0," + s + ")"; }),
               renaming(left, b, [](const std::string& s) { return s.substr(3, s.size() - 4); })));
  for (auto kind : {TensorKind::GrayLax, TensorKind::GrayPseudo, TensorKind::GrayOplax}) {
    auto g = gray_tensor(kind, ordinal(1), ordinal(3));
    CHECK(g->cells.empty());
    CHECK(g->relations.empty());
    CHECK(g->base->morphism_count() == b->morphism_count());
  }
}

TEST_CASE("Gray tensors of two arrows") {
  auto lax = gray_tensor(TensorKind::GrayLax, ordinal(2), ordinal(2));
  REQUIRE(lax->cells.size() == 1);
  CHECK_FALSE(lax->cells[0].invertible);
  CHECK(to_string(lax->graph(), lax->cells[0].src) == "(f,0);(1,f)");
  CHECK(to_string(lax->graph(), lax->cells[0].tgt) == "(0,f);(f,1)");
  auto pseudo = gray_tensor(TensorKind::GrayPseudo, ordinal(2), ordinal(2));
  REQUIRE(pseudo->cells.size() == 1);
  CHECK(pseudo->cells[0].invertible);
  auto oplax = gray_tensor(TensorKind::GrayOplax, ordinal(2), ordinal(2));
  CHECK(oplax->cells[0].src == lax->cells[0].tgt);
  CHECK(tensor2(ordinal(2), ordinal(2))->cells.size() == 2);
  try {
    gray_tensor(TensorKind::GrayLax, cartesian_tensor(ordinal(2), ordinal(2)), ordinal(2));
    FAIL("expected NotFree");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotFree);
  }
}

TEST_CASE("oplax tensor is the transpose of the lax one") {
  for (auto [m, n] : {std::pair{2, 3}, std::pair{3, 3}, std::pair{2, 4}}) {
    auto oplax = gray_tensor(TensorKind::GrayOplax, ordinal(m), ordinal(n));
    auto lax = gray_tensor(TensorKind::GrayLax, ordinal(n), ordinal(m));
    auto there = renaming(lax, oplax, swap_pair);
    auto back = renaming(oplax, lax, swap_pair);
    CHECK(there.valid());
    CHECK(back.valid());
    CHECK(equal(then(there, back), SesquiFunctor::identity(lax)) == Truth::Yes);
    CHECK(equal(then(back, there), SesquiFunctor::identity(oplax)) == Truth::Yes);
  }
}

TEST_CASE("tensor of higher presentations carries naturality relations") {
  auto grid = free_grid(false);
  auto two = locally_discrete(Category::make(ordinal(2)));
  auto lax22 = tensor_higher(TensorKind::GrayLax, two, two);
  auto lax = tensor_higher(TensorKind::GrayLax, lax22, two);
  // One copy of the square per object of the last factor, plus 4 interchangers
  // and one naturality relation per (square, generator) pair.
  CHECK(lax->cells.size() == 2 + 4);
  CHECK(lax->relations.size() == 1);
  for (const auto& r : lax->relations) {
    CHECK(well_formed(*lax, r.lhs));
    CHECK(well_formed(*lax, r.rhs));
  }
  CHECK(grid->relations.empty());
}

TEST_CASE("comparison maps") {
  for (auto to : {TensorKind::GrayLax, TensorKind::GrayPseudo, TensorKind::GrayOplax, TensorKind::Cartesian}) {
    CHECK(comparison_map(TensorKind::Funny, to, ordinal(2), ordinal(3)).valid());
  }
  for (auto from : {TensorKind::GrayLax, TensorKind::GrayPseudo, TensorKind::GrayOplax}) {
    CHECK(comparison_map(from, TensorKind::Cartesian, ordinal(2), ordinal(2)).valid());
  }
  try {
    comparison_map(TensorKind::Cartesian, TensorKind::Funny, ordinal(2), ordinal(2));
    FAIL("expected NoComparison");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoComparison);
  }
  CHECK_THROWS_AS(comparison_map(TensorKind::GrayLax, TensorKind::GrayOplax, ordinal(2), ordinal(2)), Error);
}

TEST_CASE("tensor of morphisms is functorial") {
  auto two = locally_discrete(Category::make(ordinal(2)));
  auto three = locally_discrete(Category::make(ordinal(3)));
  // 2 -> 3 picking out the composite f;g.
  SesquiFunctor long_arrow(two, three, Functor(two->base, three->base, {0, 2}, {make_path(three->graph(), "0", {"f", "g"})}), {});
  REQUIRE(long_arrow.valid());
  auto source = tensor_higher(TensorKind::GrayLax, two, two);
  auto target = tensor_higher(TensorKind::GrayLax, three, three);
  auto map = tensor_map(TensorKind::GrayLax, long_arrow, long_arrow, source, target);
  CHECK(map.valid());
  // The interchanger goes to the pasting of all four squares.
  CHECK(map.cell_map()[0].length() == 4);
  auto id = tensor_map(TensorKind::GrayLax, SesquiFunctor::identity(two), SesquiFunctor::identity(two), source, source);
  CHECK(equal(id, SesquiFunctor::identity(source)) == Truth::Yes);
}

TEST_CASE("associator extension") {
  auto funny = check_associator_extension(TensorKind::Funny);
  CHECK(funny.extensions == 1);
  CHECK(funny.assignments == 1);
  auto lax = check_associator_extension(TensorKind::GrayLax);
  CHECK(lax.extensions >= 1);
  auto t2 = check_associator_extension(TensorKind::Tensor2);
  CHECK(t2.extensions == 0);
  CHECK_FALSE(t2.bounded);
  CHECK(t2.bijections_rejected > 0);
  CHECK(t2.witness.find("not preserved") != std::string::npos);
  auto serial = check_associator_extension(TensorKind::Tensor2, false);
  CHECK(serial.extensions == t2.extensions);
  CHECK(serial.assignments == t2.assignments);
  CHECK(serial.witness == t2.witness);
}

TEST_CASE("tensor kind names") {
  for (auto k : {TensorKind::Funny, TensorKind::Cartesian, TensorKind::GrayLax, TensorKind::GrayPseudo,
                 TensorKind::GrayOplax, TensorKind::Tensor2}) {
    CHECK(tensor_kind_from_string(to_string(k)) == k);
  }
  CHECK_THROWS_AS(tensor_kind_from_string("smash"), Error);
}
