#include "cocat/tensor.hpp"

#include <algorithm>

#include "cocat/catalog.hpp"
#include "cocat/error.hpp"

namespace cocat {

std::string to_string(TensorKind k) {
  switch (k) {
    case TensorKind::Funny: return "funny";
    case TensorKind::Cartesian: return "cartesian";
    case TensorKind::GrayLax: return "gray_lax";
    case TensorKind::GrayPseudo: return "gray_pseudo";
    case TensorKind::GrayOplax: return "gray_oplax";
    case TensorKind::Tensor2: return "tensor2";
  }
  return "funny";
}

TensorKind tensor_kind_from_string(const std::string& s) {
  for (auto k : {TensorKind::Funny, TensorKind::Cartesian, TensorKind::GrayLax, TensorKind::GrayPseudo,
                 TensorKind::GrayOplax, TensorKind::Tensor2}) {
    if (to_string(k) == s) return k;
  }
  throw Error(ErrorKind::UnknownName, "unknown tensor kind '" + s + "'");
}

namespace {

std::string pair_label(const std::string& x, const std::string& y) { return "(" + x + "," + y + ")"; }

bool is_gray(TensorKind k) {
  return k == TensorKind::GrayLax || k == TensorKind::GrayPseudo || k == TensorKind::GrayOplax;
}

// Index arithmetic for the generators of a funny tensor.
struct Layout {
  std::size_t av, ae, bv, be;

  Layout(const Graph& a, const Graph& b)
      : av(a.vertex_count()), ae(a.edge_count()), bv(b.vertex_count()), be(b.edge_count()) {}

  VertexId vertex(VertexId x, VertexId y) const { return static_cast<VertexId>(x * bv + y); }
  EdgeId horizontal(EdgeId e, VertexId y) const { return static_cast<EdgeId>(e * bv + y); }
  EdgeId vertical(VertexId x, EdgeId e) const { return static_cast<EdgeId>(ae * bv + x * be + e); }

  Path across(const Path& u, VertexId y) const {
    Path p{vertex(u.start, y), vertex(u.finish, y), {}};
    for (EdgeId e : u.edges) p.edges.push_back(horizontal(e, y));
    return p;
  }
  Path down(VertexId x, const Path& v) const {
    Path p{vertex(x, v.start), vertex(x, v.finish), {}};
    for (EdgeId e : v.edges) p.edges.push_back(vertical(x, e));
    return p;
  }
};

}  // namespace

Presentation funny_tensor(const Presentation& a, const Presentation& b) {
  Presentation p;
  Layout lay(a.graph, b.graph);
  for (const auto& x : a.graph.vertices()) {
    for (const auto& y : b.graph.vertices()) p.graph.add_vertex(pair_label(x, y));
  }
  for (EdgeId e = 0; e < lay.ae; ++e) {
    const Edge& edge = a.graph.edge(e);
    for (VertexId y = 0; y < lay.bv; ++y) {
      p.graph.add_edge(pair_label(edge.name, b.graph.vertex(y)), lay.vertex(edge.src, y),
                       lay.vertex(edge.tgt, y));
    }
  }
  for (VertexId x = 0; x < lay.av; ++x) {
    for (EdgeId e = 0; e < lay.be; ++e) {
      const Edge& edge = b.graph.edge(e);
      p.graph.add_edge(pair_label(a.graph.vertex(x), edge.name), lay.vertex(x, edge.src),
                       lay.vertex(x, edge.tgt));
    }
  }
  for (const auto& r : a.relations) {
    for (VertexId y = 0; y < lay.bv; ++y) p.relations.push_back({lay.across(r.lhs, y), lay.across(r.rhs, y)});
  }
  for (VertexId x = 0; x < lay.av; ++x) {
    for (const auto& r : b.relations) p.relations.push_back({lay.down(x, r.lhs), lay.down(x, r.rhs)});
  }
  return p;
}

Presentation cartesian_tensor(const Presentation& a, const Presentation& b) {
  Presentation p = funny_tensor(a, b);
  Layout lay(a.graph, b.graph);
  for (EdgeId e = 0; e < lay.ae; ++e) {
    for (EdgeId f = 0; f < lay.be; ++f) {
      const Edge& h = a.graph.edge(e);
      const Edge& v = b.graph.edge(f);
      Path top_right{lay.vertex(h.src, v.src), lay.vertex(h.tgt, v.tgt),
                     {lay.horizontal(e, v.src), lay.vertical(h.tgt, f)}};
      Path left_bottom{lay.vertex(h.src, v.src), lay.vertex(h.tgt, v.tgt),
                       {lay.vertical(h.src, f), lay.horizontal(e, v.tgt)}};
      p.relations.push_back({top_right, left_bottom});
    }
  }
  return p;
}

namespace {

struct TensorBuild {
  HigherPresentation hp;
  Layout lay;
  CellId factor_x = 0;  // first "(a,y)"
  CellId factor_y = 0;  // first "(x,b)"
  CellId sigma = 0;     // first interchanger
  std::size_t y_cells = 0;
};

// Interchanger word from (u,y);(x',v) to (x,v);(u,y'): each vertical edge
// is moved left across every horizontal edge, rightmost first.  The oplax
// word is the same sequence read backwards with reversed generators.
TwoCellWord paste(const HigherPresentation& hp, const Layout& lay, CellId sigma, bool oplax,
                  const Graph& a, const Graph& b, const Path& u, const Path& v) {
  const std::size_t n = u.length();
  const std::size_t m = v.length();
  std::vector<VertexId> xs{u.start}, ys{v.start};
  for (EdgeId e : u.edges) xs.push_back(a.edge(e).tgt);
  for (EdgeId e : v.edges) ys.push_back(b.edge(e).tgt);
  std::vector<Whiskered> steps;
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = n; i-- > 0;) {
      Path pre = lay.down(u.start, subpath(b, v, 0, j));
      pre = concat(pre, lay.across(subpath(a, u, 0, i), ys[j]));
      Path post = lay.across(subpath(a, u, i + 1, n), ys[j + 1]);
      post = concat(post, lay.down(u.finish, subpath(b, v, j + 1, m)));
      steps.push_back(Whiskered{pre, static_cast<CellId>(sigma + u.edges[i] * lay.be + v.edges[j]), false, post});
    }
  }
  Path lax_src = concat(lay.across(u, v.start), lay.down(u.finish, v));
  Path lax_tgt = concat(lay.down(u.start, v), lay.across(u, v.finish));
  TwoCellWord w{lax_src, lax_tgt, steps};
  if (oplax) {
    std::reverse(w.steps.begin(), w.steps.end());
    std::swap(w.src, w.tgt);
  }
  return reduce(hp, w);
}

TwoCellWord embed_across(const HigherPresentation& hp, const Layout& lay, CellId first, std::size_t bv,
                         const TwoCellWord& w, VertexId y) {
  TwoCellWord out{lay.across(w.src, y), lay.across(w.tgt, y), {}};
  for (const auto& s : w.steps) {
    out.steps.push_back(Whiskered{lay.across(s.pre, y), static_cast<CellId>(first + s.cell * bv + y), s.inverse,
                                  lay.across(s.post, y)});
  }
  return reduce(hp, out);
}

TwoCellWord embed_down(const HigherPresentation& hp, const Layout& lay, CellId first, std::size_t ycells,
                       const TwoCellWord& w, VertexId x) {
  TwoCellWord out{lay.down(x, w.src), lay.down(x, w.tgt), {}};
  for (const auto& s : w.steps) {
    out.steps.push_back(Whiskered{lay.down(x, s.pre), static_cast<CellId>(first + x * ycells + s.cell), s.inverse,
                                  lay.down(x, s.post)});
  }
  return reduce(hp, out);
}

void require_free(const HigherPresentation& p) {
  if (!p.base->presentation().is_free()) {
    throw Error(ErrorKind::NotFree, "Gray tensors are built over relation-free bases only");
  }
}

TensorBuild build(TensorKind kind, const HigherPtr& x, const HigherPtr& y) {
  if (x->flavor != y->flavor) throw Error(ErrorKind::FlavorMismatch, "tensor factors of different flavors");
  const Presentation& a = x->base->presentation();
  const Presentation& b = y->base->presentation();
  if (kind != TensorKind::Funny) {
    require_free(*x);
    require_free(*y);
  }
  auto base = Category::make(funny_tensor(a, b));
  TensorBuild t{HigherPresentation{base, {}, {}, x->flavor}, Layout(a.graph, b.graph)};
  auto& hp = t.hp;
  const auto& lay = t.lay;
  t.factor_x = 0;
  for (const auto& c : x->cells) {
    for (VertexId v = 0; v < lay.bv; ++v) {
      hp.cells.push_back({pair_label(c.name, b.graph.vertex(v)), lay.across(c.src, v), lay.across(c.tgt, v),
                          c.invertible});
    }
  }
  t.factor_y = static_cast<CellId>(hp.cells.size());
  t.y_cells = y->cells.size();
  for (VertexId u = 0; u < lay.av; ++u) {
    for (const auto& c : y->cells) {
      hp.cells.push_back({pair_label(a.graph.vertex(u), c.name), lay.down(u, c.src), lay.down(u, c.tgt),
                          c.invertible});
    }
  }
  t.sigma = static_cast<CellId>(hp.cells.size());
  if (is_gray(kind)) {
    const bool oplax = kind == TensorKind::GrayOplax;
    for (EdgeId e = 0; e < lay.ae; ++e) {
      for (EdgeId f = 0; f < lay.be; ++f) {
        const Edge& h = a.graph.edge(e);
        const Edge& v = b.graph.edge(f);
        Path top_right{lay.vertex(h.src, v.src), lay.vertex(h.tgt, v.tgt),
                       {lay.horizontal(e, v.src), lay.vertical(h.tgt, f)}};
        Path left_bottom{lay.vertex(h.src, v.src), lay.vertex(h.tgt, v.tgt),
                         {lay.vertical(h.src, f), lay.horizontal(e, v.tgt)}};
        hp.cells.push_back({"[" + h.name + "," + v.name + "]", oplax ? left_bottom : top_right,
                            oplax ? top_right : left_bottom, kind == TensorKind::GrayPseudo});
      }
    }
  }

  for (const auto& r : x->relations) {
    for (VertexId v = 0; v < lay.bv; ++v) {
      hp.relations.push_back({embed_across(hp, lay, t.factor_x, lay.bv, r.lhs, v),
                              embed_across(hp, lay, t.factor_x, lay.bv, r.rhs, v)});
    }
  }
  for (VertexId u = 0; u < lay.av; ++u) {
    for (const auto& r : y->relations) {
      hp.relations.push_back({embed_down(hp, lay, t.factor_y, t.y_cells, r.lhs, u),
                              embed_down(hp, lay, t.factor_y, t.y_cells, r.rhs, u)});
    }
  }
  if (!is_gray(kind)) return t;

  // Naturality of the interchangers in factor 2-cells.
  const bool oplax = kind == TensorKind::GrayOplax;
  auto sigma_word = [&](const Path& u, const Path& v) {
    return paste(hp, lay, t.sigma, oplax, a.graph, b.graph, u, v);
  };
  for (CellId k = 0; k < x->cells.size(); ++k) {
    const auto& c = x->cells[k];
    for (EdgeId f = 0; f < lay.be; ++f) {
      const Edge& v = b.graph.edge(f);
      const Path edge = Path::of_edge(b.graph, f);
      TwoCellWord at_top = generator_cell(hp, static_cast<CellId>(t.factor_x + k * lay.bv + v.src));
      TwoCellWord at_bottom = generator_cell(hp, static_cast<CellId>(t.factor_x + k * lay.bv + v.tgt));
      Path right = lay.down(c.src.finish, edge);
      Path left = lay.down(c.src.start, edge);
      TwoCellWord first = whisker(hp, Path::identity(at_top.src.start), at_top, right);
      TwoCellWord last = whisker(hp, left, at_bottom, Path::identity(at_bottom.src.finish));
      TwoCellWord lhs, rhs;
      if (!oplax) {
        lhs = vertical(hp, first, sigma_word(c.tgt, edge));
        rhs = vertical(hp, sigma_word(c.src, edge), last);
      } else {
        lhs = vertical(hp, last, sigma_word(c.tgt, edge));
        rhs = vertical(hp, sigma_word(c.src, edge), first);
      }
      hp.relations.push_back({lhs, rhs});
    }
  }
  for (CellId k = 0; k < y->cells.size(); ++k) {
    const auto& c = y->cells[k];
    for (EdgeId e = 0; e < lay.ae; ++e) {
      const Edge& h = a.graph.edge(e);
      const Path edge = Path::of_edge(a.graph, e);
      TwoCellWord at_left = generator_cell(hp, static_cast<CellId>(t.factor_y + h.src * t.y_cells + k));
      TwoCellWord at_right = generator_cell(hp, static_cast<CellId>(t.factor_y + h.tgt * t.y_cells + k));
      Path above = lay.across(edge, c.src.start);
      Path below = lay.across(edge, c.src.finish);
      TwoCellWord first = whisker(hp, above, at_right, Path::identity(at_right.src.finish));
      TwoCellWord last = whisker(hp, Path::identity(at_left.src.start), at_left, below);
      TwoCellWord lhs, rhs;
      if (!oplax) {
        lhs = vertical(hp, first, sigma_word(edge, c.tgt));
        rhs = vertical(hp, sigma_word(edge, c.src), last);
      } else {
        lhs = vertical(hp, last, sigma_word(edge, c.tgt));
        rhs = vertical(hp, sigma_word(edge, c.src), first);
      }
      hp.relations.push_back({lhs, rhs});
    }
  }
  return t;
}

HigherPtr discrete_factor(const Presentation& p) {
  return locally_discrete(Category::make(p), Flavor::TwoCategory);
}

Functor identity_on_generators(const CategoryPtr& source, const CategoryPtr& target) {
  const Graph& g = source->graph();
  std::vector<VertexId> objects(g.vertex_count());
  for (VertexId v = 0; v < objects.size(); ++v) objects[v] = v;
  std::vector<Path> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) edges.push_back(Path::of_edge(target->graph(), e));
  return Functor(source, target, std::move(objects), std::move(edges));
}

// funny(X, Y) -> lax(X, Y): the inclusion of everything but the interchangers.
SesquiFunctor funny_into_gray(const HigherPtr& funny, const HigherPtr& gray) {
  std::vector<TwoCellWord> cells;
  for (CellId k = 0; k < funny->cells.size(); ++k) cells.push_back(generator_cell(*gray, k));
  return SesquiFunctor(funny, gray, identity_on_generators(funny->base, gray->base), std::move(cells));
}

}  // namespace

HigherPtr tensor_higher(TensorKind kind, const HigherPtr& x, const HigherPtr& y) {
  if (kind == TensorKind::Cartesian) {
    throw Error(ErrorKind::InvalidInput, "the cartesian tensor is built on presentations only");
  }
  if (kind == TensorKind::Tensor2) {
    auto funny = tensor_higher(TensorKind::Funny, x, y);
    auto lax = tensor_higher(TensorKind::GrayLax, x, y);
    SesquiFunctor inc = funny_into_gray(funny, lax);
    return pushout_sesqui(inc, inc).apex;
  }
  return make_higher(build(kind, x, y).hp);
}

HigherPtr gray_tensor(TensorKind kind, const Presentation& a, const Presentation& b) {
  if (!is_gray(kind)) throw Error(ErrorKind::InvalidInput, "not a Gray tensor kind");
  return tensor_higher(kind, discrete_factor(a), discrete_factor(b));
}

HigherPtr tensor2(const Presentation& a, const Presentation& b) {
  return tensor_higher(TensorKind::Tensor2, discrete_factor(a), discrete_factor(b));
}

HigherPtr tensor(TensorKind kind, const Presentation& a, const Presentation& b) {
  switch (kind) {
    case TensorKind::Funny: return locally_discrete(Category::make(funny_tensor(a, b)), Flavor::TwoCategory);
    case TensorKind::Cartesian:
      return locally_discrete(Category::make(cartesian_tensor(a, b)), Flavor::TwoCategory);
    case TensorKind::Tensor2: return tensor2(a, b);
    default: return gray_tensor(kind, a, b);
  }
}

SesquiFunctor tensor_map(TensorKind kind, const SesquiFunctor& f, const SesquiFunctor& g,
                         const HigherPtr& source, const HigherPtr& target) {
  if (kind != TensorKind::Funny && !is_gray(kind)) {
    throw Error(ErrorKind::InvalidInput, "tensor_map covers the funny and Gray kinds");
  }
  const Graph& a = f.source()->graph();
  const Graph& b = g.source()->graph();
  const Graph& a2 = f.target()->graph();
  const Graph& b2 = g.target()->graph();
  Layout from(a, b), to(a2, b2);

  std::vector<VertexId> objects(from.av * from.bv);
  for (VertexId x = 0; x < from.av; ++x) {
    for (VertexId y = 0; y < from.bv; ++y) {
      objects[from.vertex(x, y)] = to.vertex(f.base().on_object(x), g.base().on_object(y));
    }
  }
  std::vector<Path> edges(from.ae * from.bv + from.av * from.be);
  for (EdgeId e = 0; e < from.ae; ++e) {
    for (VertexId y = 0; y < from.bv; ++y) {
      edges[from.horizontal(e, y)] = to.across(f.base().on_edge(e), g.base().on_object(y));
    }
  }
  for (VertexId x = 0; x < from.av; ++x) {
    for (EdgeId e = 0; e < from.be; ++e) {
      edges[from.vertical(x, e)] = to.down(f.base().on_object(x), g.base().on_edge(e));
    }
  }
  Functor base(source->base, target->base, std::move(objects), std::move(edges));

  const auto& t = *target;
  const CellId tx = 0;
  const CellId ty = static_cast<CellId>(f.target()->cells.size() * to.bv);
  const CellId tsigma = static_cast<CellId>(ty + to.av * g.target()->cells.size());
  std::vector<TwoCellWord> cells;
  for (CellId k = 0; k < f.source()->cells.size(); ++k) {
    for (VertexId y = 0; y < from.bv; ++y) {
      cells.push_back(embed_across(t, to, tx, to.bv, f.cell_map()[k], g.base().on_object(y)));
    }
  }
  for (VertexId x = 0; x < from.av; ++x) {
    for (CellId k = 0; k < g.source()->cells.size(); ++k) {
      cells.push_back(embed_down(t, to, ty, g.target()->cells.size(), g.cell_map()[k], f.base().on_object(x)));
    }
  }
  if (is_gray(kind)) {
    for (EdgeId e = 0; e < from.ae; ++e) {
      for (EdgeId e2 = 0; e2 < from.be; ++e2) {
        cells.push_back(paste(t, to, tsigma, kind == TensorKind::GrayOplax, a2, b2, f.base().on_edge(e),
                              g.base().on_edge(e2)));
      }
    }
  }
  return SesquiFunctor(source, target, std::move(base), std::move(cells));
}

Functor tensor_map_cat(TensorKind kind, const Functor& f, const Functor& g, const CategoryPtr& source,
                       const CategoryPtr& target) {
  if (kind != TensorKind::Funny && kind != TensorKind::Cartesian) {
    throw Error(ErrorKind::InvalidInput, "tensor_map_cat covers the funny and cartesian kinds");
  }
  auto fs = locally_discrete(f.source(), Flavor::TwoCategory);
  auto ft = locally_discrete(f.target(), Flavor::TwoCategory);
  auto gs = locally_discrete(g.source(), Flavor::TwoCategory);
  auto gt = locally_discrete(g.target(), Flavor::TwoCategory);
  auto src = locally_discrete(source, Flavor::TwoCategory);
  auto tgt = locally_discrete(target, Flavor::TwoCategory);
  SesquiFunctor fl(fs, ft, f, {});
  SesquiFunctor gl(gs, gt, g, {});
  return tensor_map(TensorKind::Funny, fl, gl, src, tgt).base();
}

SesquiFunctor comparison_map(TensorKind from, TensorKind to, const Presentation& a, const Presentation& b) {
  const bool edge = (from == TensorKind::Funny && (is_gray(to) || to == TensorKind::Cartesian)) ||
                    (is_gray(from) && to == TensorKind::Cartesian);
  if (!edge) {
    throw Error(ErrorKind::NoComparison, "no comparison map " + to_string(from) + " -> " + to_string(to));
  }
  HigherPtr source = tensor(from, a, b);
  HigherPtr target = tensor(to, a, b);
  Functor base = identity_on_generators(source->base, target->base);
  std::vector<TwoCellWord> cells;
  for (const auto& c : source->cells) cells.push_back(identity_cell(*target, base.apply(c.src)));
  return SesquiFunctor(source, target, std::move(base), std::move(cells));
}

HigherPtr free_grid(bool invertible, Flavor flavor) {
  auto three = locally_discrete(Category::make(ordinal(3)), flavor);
  return tensor_higher(invertible ? TensorKind::GrayPseudo : TensorKind::GrayLax, three, three);
}

namespace {

TwoCellWord grid_step(const HigherPresentation& hp, const Path& pre, const std::string& cell, const Path& post) {
  return whisker(hp, pre, generator_cell(hp, hp.cell_id(cell)), post);
}

}  // namespace

std::pair<TwoCellWord, TwoCellWord> grid_composites(const HigherPresentation& hp) {
  auto s1 = grid_step(hp, make_path(hp.graph(), "(0,0)", {"(f,0)"}), "[g,f]", make_path(hp.graph(), "(2,1)", {"(2,g)"}));
  auto tl_a = grid_step(hp, make_path(hp.graph(), "(0,0)", {}), "[f,f]", make_path(hp.graph(), "(1,1)", {"(g,1)", "(2,g)"}));
  auto br_a = grid_step(hp, make_path(hp.graph(), "(0,0)", {"(0,f)", "(f,1)"}), "[g,g]", make_path(hp.graph(), "(2,2)", {}));
  auto br_b = grid_step(hp, make_path(hp.graph(), "(0,0)", {"(f,0)", "(1,f)"}), "[g,g]", make_path(hp.graph(), "(2,2)", {}));
  auto tl_b = grid_step(hp, make_path(hp.graph(), "(0,0)", {}), "[f,f]", make_path(hp.graph(), "(1,1)", {"(1,g)", "(g,2)"}));
  auto last = grid_step(hp, make_path(hp.graph(), "(0,0)", {"(0,f)"}), "[f,g]", make_path(hp.graph(), "(1,2)", {"(g,2)"}));
  auto a = vertical(hp, vertical(hp, vertical(hp, s1, tl_a), br_a), last);
  auto b = vertical(hp, vertical(hp, vertical(hp, s1, br_b), tl_b), last);
  return {a, b};
}

}  // namespace cocat
