#include <random>

#include "cocat/catalog.hpp"
#include "cocat/colimits.hpp"
#include "cocat/error.hpp"
#include "doctest.h"

using namespace cocat;

namespace {

// The two squares over 2x2 objects, built by hand.
Presentation square(bool commuting) {
  Presentation p;
  for (auto v : {"00", "10", "01", "11"}) p.graph.add_vertex(v);
  p.graph.add_edge("top", "00", "10");
  p.graph.add_edge("left", "00", "01");
  p.graph.add_edge("right", "10", "11");
  p.graph.add_edge("bottom", "01", "11");
  if (commuting) {
    p.relations.push_back(
        {make_path(p.graph, "00", {"top", "right"}), make_path(p.graph, "00", {"left", "bottom"})});
  }
  return p;
}

Functor object_functor(const CategoryPtr& a, const CategoryPtr& b, std::vector<VertexId> objects) {
  return Functor(a, b, std::move(objects), {});
}

Graph random_dag(std::mt19937& rng, std::size_t n, std::size_t m) {
  Graph g;
  for (std::size_t k = 0; k < n; ++k) g.add_vertex("v" + std::to_string(k));
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t k = 0; k < m; ++k) {
    auto a = pick(rng), b = pick(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    g.add_edge("e" + std::to_string(k), static_cast<VertexId>(a), static_cast<VertexId>(b));
  }
  return g;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

}  // namespace

TEST_CASE("free categories have path hom-sets") {
  auto two = Category::make(free_category(ordinal(2).graph));
  CHECK(two->morphism_count() == 3);
  CHECK(two->hom(0, 1).size() == 1);
  CHECK(Category::make(free_category(Graph{}))->morphism_count() == 0);
  auto three = Category::make(ordinal(3));
  CHECK(three->hom(0, 2).size() == 1);
  CHECK(hom_set(ordinal(3), 0, 2).size() == 1);
}

TEST_CASE("square hom-sets") {
  auto funny = Category::make(square(false));
  auto product = Category::make(square(true));
  CHECK(funny->hom(0, 3).size() == 2);
  CHECK(product->hom(0, 3).size() == 1);
  CHECK(product->equal(make_path(product->graph(), "00", {"top", "right"}),
                       make_path(product->graph(), "00", {"left", "bottom"})) == Truth::Yes);
}

TEST_CASE("free hom sizes match a path-counting oracle") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_dag(rng, 5, 8);
    auto c = Category::make(free_category(g));
    for (VertexId a = 0; a < g.vertex_count(); ++a) {
      for (VertexId b = 0; b < g.vertex_count(); ++b) {
        CHECK(c->hom(a, b).size() == count_paths(g, a, b));
      }
    }
  }
}

TEST_CASE("congruence is stable under whiskering") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Presentation p{random_dag(rng, 5, 9), {}};
    auto paths = enumerate_paths(p.graph, p.graph.longest_path());
    // Relate two random parallel paths, if any exist.
    std::uniform_int_distribution<std::size_t> pick(0, paths.size() - 1);
    for (int tries = 0; tries < 50 && p.relations.empty(); ++tries) {
      const Path& u = paths[pick(rng)];
      const Path& v = paths[pick(rng)];
      if (u != v && u.start == v.start && u.finish == v.finish) p.relations.push_back({u, v});
    }
    auto c = Category::make(p);
    for (const auto& u : paths) {
      for (const auto& v : paths) {
        if (c->equal(u, v) != Truth::Yes) continue;
        CHECK(c->equal(v, u) == Truth::Yes);
        for (const auto& w : paths) {
          if (w.finish == u.start) CHECK(c->equal(concat(w, u), concat(w, v)) == Truth::Yes);
          if (u.finish == w.start) CHECK(c->equal(concat(u, w), concat(v, w)) == Truth::Yes);
        }
      }
    }
  }
}

TEST_CASE("path composition is associative and unital") {
  Graph g = ordinal(4).graph;
  auto paths = enumerate_paths(g, 3);
  for (const auto& a : paths) {
    CHECK(concat(Path::identity(a.start), a) == a);
    CHECK(concat(a, Path::identity(a.finish)) == a);
    for (const auto& b : paths) {
      if (a.finish != b.start) continue;
      for (const auto& c : paths) {
        if (b.finish == c.start) CHECK(concat(concat(a, b), c) == concat(a, concat(b, c)));
      }
    }
  }
}

TEST_CASE("cycles need a bound") {
  CHECK_THROWS_AS(Category::make(walking_iso()), Error);
  CHECK_THROWS_AS(hom_set(cyclic_group(2), 0, 0), Error);
  auto iso = Category::make(walking_iso(), 3);
  CHECK(iso->bounded());
  CHECK(iso->hom(0, 1).size() == 1);
  CHECK(iso->hom(0, 0).size() == 1);
}

TEST_CASE("pushout of the two endpoint inclusions is the composable pair") {
  auto one = Category::make(ordinal(1));
  auto two = Category::make(ordinal(2));
  Functor d = object_functor(one, two, {0});
  Functor c = object_functor(one, two, {1});
  CatPushout po = pushout_cat(c, d);
  CHECK(po.category->object_count() == 3);
  CHECK(po.category->hom(0, 2).size() == 1);

  // Agrees with the hand-built ordinal 3.
  auto three = Category::make(ordinal(3));
  Functor p(two, three, {0, 1}, {make_path(three->graph(), "0", {"f"})});
  Functor q(two, three, {1, 2}, {make_path(three->graph(), "1", {"g"})});
  CHECK(is_pushout(c, d, p, q) == Truth::Yes);
  CHECK(is_pushout(d, c, p, q) == Truth::No);
}

TEST_CASE("pushout along an identity") {
  auto sq = Category::make(square(true));
  Functor id = Functor::identity(sq);
  CatPushout po = pushout_cat(id, id);
  CHECK(po.category->morphism_count() == sq->morphism_count());
  CHECK(is_pushout(id, id, id, id) == Truth::Yes);
}

TEST_CASE("the pushout mediator is the unique factorisation") {
  auto one = Category::make(ordinal(1));
  auto two = Category::make(ordinal(2));
  Functor d = object_functor(one, two, {0});
  Functor c = object_functor(one, two, {1});
  CatPushout po = pushout_cat(c, d);
  for (const auto& name : {"2", "3", "1"}) {
    auto x = catalog_category(name);
    for (const auto& hl : enumerate_functors(two, x)) {
      for (const auto& hr : enumerate_functors(two, x)) {
        if (equal(then(c, hl), then(d, hr)) != Truth::Yes) continue;
        std::size_t factorisations = 0;
        for (const auto& h : enumerate_functors(po.category, x)) {
          if (equal(then(po.left, h), hl) == Truth::Yes && equal(then(po.right, h), hr) == Truth::Yes) {
            ++factorisations;
          }
        }
        CHECK(factorisations == 1);
        Functor med = copair(po.left, po.right, hl, hr);
        CHECK(med.valid());
        CHECK(equal(then(po.left, med), hl) == Truth::Yes);
      }
    }
  }
}

TEST_CASE("graph pushouts") {
  Graph empty;
  GraphMorphism none;
  CHECK(pushout_graph(empty, empty, empty, none, none).graph.vertex_count() == 0);

  Graph g = square(false).graph;
  GraphMorphism id{{0, 1, 2, 3}, {0, 1, 2, 3}};
  CHECK(pushout_graph(g, g, g, id, id).graph == g);

  // The endpoint legs 2_G into the underlying graph of the non-commuting square.
  auto sq = Category::make(square(false));
  Graph u = underlying_graph(*sq);
  CHECK(u.edge_count() == 10);
  Graph arrow = ordinal(2).graph;
  EdgeId left = u.edge_id("left");
  EdgeId right = u.edge_id("right");
  GraphMorphism dprime{{0, 2}, {left}};
  GraphMorphism cprime{{1, 3}, {right}};
  GraphPushout po = pushout_graph(arrow, u, u, cprime, dprime);
  CHECK(po.graph.vertex_count() == 6);
  CHECK(po.graph.edge_count() == 19);

  GraphMorphism collapse{{0, 0}, {left}};
  CHECK_THROWS_AS(pushout_graph(arrow, u, u, collapse, dprime), Error);

  // The left injection is full on its first column, whose objects receive
  // nothing new.
  auto fu = Category::make(free_category(u), 3);
  auto fp = Category::make(free_category(po.graph), 3);
  std::vector<Path> images;
  for (EdgeId e : po.left.edges) images.push_back(Path::of_edge(po.graph, e));
  Functor fpl(fu, fp, po.left.vertices, images);
  Fullness full = full_on_objects(fpl, {0, 2});
  CHECK(full.full);
  CHECK(full.bounded);
  for (VertexId v : {po.left.vertices[0], po.left.vertices[2]}) {
    for (EdgeId e : po.graph.in_edges(v)) {
      VertexId s = po.graph.edge(e).src;
      CHECK((s == po.left.vertices[0] || s == po.left.vertices[2]));
    }
  }
}

TEST_CASE("fullness") {
  auto one = Category::make(ordinal(1));
  auto two = Category::make(ordinal(2));
  auto disc = Category::make(discrete(2));
  CHECK(full_on_objects(object_functor(one, two, {0}), {0}).full);
  Fullness f = full_on_objects(object_functor(disc, two, {0, 1}), {0, 1});
  CHECK_FALSE(f.full);
  CHECK(f.witness == "f");
}

TEST_CASE("endofunctor monoids") {
  for (std::size_t n = 0; n <= 4; ++n) {
    // Monotone self-maps of an n-chain.
    auto c = Category::make(ordinal(n));
    std::uint64_t expected = n == 0 ? 1 : binomial(2 * n - 1, n);
    CHECK(endofunctor_monoid(c).size() == expected);
  }
  CHECK(endofunctor_monoid(catalog_category("discrete2")).size() == 4);
  CHECK(endofunctor_monoid(catalog_category("walking_iso")).size() == 4);
  CHECK(endofunctor_monoid(catalog_category("Z2")).size() == 2);

  for (const auto& name : catalog_names()) {
    auto m = endofunctor_monoid(catalog_category(name));
    bool trivial = m.size() == 1;
    CHECK(trivial == (name == "0" || name == "1"));
    for (std::size_t a = 0; a < m.size(); ++a) {
      CHECK(m.table[m.unit][a] == a);
      CHECK(m.table[a][m.unit] == a);
      for (std::size_t b = 0; b < m.size(); ++b) {
        for (std::size_t c = 0; c < m.size(); ++c) {
          CHECK(m.table[m.table[a][b]][c] == m.table[a][m.table[b][c]]);
        }
      }
    }
  }
}
