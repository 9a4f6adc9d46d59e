#include "cocat/colimits.hpp"

#include <algorithm>
#include <numeric>

#include "cocat/error.hpp"
#include "cocat/glue.hpp"

namespace cocat {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::string fresh_label(const std::string& label,
                        const std::function<bool(const std::string&)>& taken) {
  std::string out = label;
  while (taken(out)) out += "'";
  return out;
}

Glued glue(const Graph& b, const Graph& c,
           const std::vector<std::pair<VertexId, VertexId>>& same_vertices,
           const std::vector<std::pair<EdgeId, EdgeId>>& same_edges) {
  const std::size_t nb = b.vertex_count();
  const std::size_t eb = b.edge_count();
  UnionFind vf(nb + c.vertex_count());
  UnionFind ef(eb + c.edge_count());
  for (auto [x, y] : same_vertices) vf.unite(x, nb + y);
  for (auto [x, y] : same_edges) {
    ef.unite(x, eb + y);
    vf.unite(b.edge(x).src, nb + c.edge(y).src);
    vf.unite(b.edge(x).tgt, nb + c.edge(y).tgt);
  }

  Glued out;
  std::vector<std::optional<VertexId>> vclass(nb + c.vertex_count());
  auto vertex_label = [&](std::size_t k) { return k < nb ? b.vertex(k) : c.vertex(k - nb); };
  std::vector<VertexId> vmap(nb + c.vertex_count());
  for (std::size_t k = 0; k < vmap.size(); ++k) {
    auto root = vf.find(k);
    if (!vclass[root]) {
      auto label = fresh_label(vertex_label(k),
                               [&](const std::string& s) { return out.graph.find_vertex(s).has_value(); });
      vclass[root] = out.graph.add_vertex(label);
    }
    vmap[k] = *vclass[root];
  }
  out.left_vertices.assign(vmap.begin(), vmap.begin() + nb);
  out.right_vertices.assign(vmap.begin() + nb, vmap.end());

  std::vector<std::optional<EdgeId>> eclass(eb + c.edge_count());
  std::vector<EdgeId> emap(eb + c.edge_count());
  for (std::size_t k = 0; k < emap.size(); ++k) {
    auto root = ef.find(k);
    if (!eclass[root]) {
      const Edge& e = k < eb ? b.edge(k) : c.edge(k - eb);
      VertexId src = k < eb ? vmap[e.src] : vmap[nb + e.src];
      VertexId tgt = k < eb ? vmap[e.tgt] : vmap[nb + e.tgt];
      auto label =
          fresh_label(e.name, [&](const std::string& s) { return out.graph.find_edge(s).has_value(); });
      eclass[root] = out.graph.add_edge(label, src, tgt);
    }
    emap[k] = *eclass[root];
  }
  out.left_edges.assign(emap.begin(), emap.begin() + eb);
  out.right_edges.assign(emap.begin() + eb, emap.end());
  return out;
}

Path relabel(const Path& p, const std::vector<VertexId>& vertices, const std::vector<EdgeId>& edges) {
  Path out{vertices.at(p.start), vertices.at(p.finish), {}};
  for (EdgeId e : p.edges) out.edges.push_back(edges.at(e));
  return out;
}

Functor inclusion(const CategoryPtr& source, const CategoryPtr& target,
                  const std::vector<VertexId>& vertices, const std::vector<EdgeId>& edges) {
  std::vector<Path> images;
  for (EdgeId e : edges) images.push_back(Path::of_edge(target->graph(), e));
  return Functor(source, target, vertices, std::move(images));
}

CatPushout pushout_cat(const Functor& f, const Functor& g, std::optional<std::size_t> bound) {
  const CategoryPtr& a = f.source();
  const CategoryPtr& b = f.target();
  const CategoryPtr& c = g.target();
  if (a->presentation() != g.source()->presentation()) {
    throw Error(ErrorKind::InvalidInput, "pushout legs have different sources");
  }
  std::vector<std::pair<VertexId, VertexId>> same_vertices;
  for (VertexId v = 0; v < a->object_count(); ++v) {
    same_vertices.emplace_back(f.on_object(v), g.on_object(v));
  }
  std::vector<std::pair<EdgeId, EdgeId>> same_edges;
  std::vector<EdgeId> related;
  for (EdgeId e = 0; e < a->graph().edge_count(); ++e) {
    if (f.on_edge(e).length() == 1 && g.on_edge(e).length() == 1) {
      same_edges.emplace_back(f.on_edge(e).edges[0], g.on_edge(e).edges[0]);
    } else {
      related.push_back(e);
    }
  }
  Glued glued = glue(b->graph(), c->graph(), same_vertices, same_edges);

  Presentation p{glued.graph, {}};
  auto add = [&](Relation r) {
    if (r.lhs != r.rhs && std::find(p.relations.begin(), p.relations.end(), r) == p.relations.end()) {
      p.relations.push_back(std::move(r));
    }
  };
  for (const auto& r : b->presentation().relations) {
    add({relabel(r.lhs, glued.left_vertices, glued.left_edges),
         relabel(r.rhs, glued.left_vertices, glued.left_edges)});
  }
  for (const auto& r : c->presentation().relations) {
    add({relabel(r.lhs, glued.right_vertices, glued.right_edges),
         relabel(r.rhs, glued.right_vertices, glued.right_edges)});
  }
  for (EdgeId e : related) {
    add({relabel(f.on_edge(e), glued.left_vertices, glued.left_edges),
         relabel(g.on_edge(e), glued.right_vertices, glued.right_edges)});
  }

  if (!bound && (b->bounded() || c->bounded())) bound = std::max(b->bound(), c->bound());
  auto cat = Category::make(std::move(p), bound);
  return CatPushout{cat, inclusion(b, cat, glued.left_vertices, glued.left_edges),
                    inclusion(c, cat, glued.right_vertices, glued.right_edges)};
}

CatPushout coproduct(const CategoryPtr& b, const CategoryPtr& c, std::optional<std::size_t> bound) {
  auto empty = Category::make(Presentation{});
  return pushout_cat(Functor(empty, b, {}, {}), Functor(empty, c, {}, {}), bound);
}

Functor copair(const Functor& left, const Functor& right, const Functor& to_left,
               const Functor& to_right) {
  const CategoryPtr& apex = left.target();
  const Graph& g = apex->graph();
  std::vector<VertexId> objects;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto& lo = left.object_map();
    const auto& ro = right.object_map();
    if (auto it = std::find(lo.begin(), lo.end(), v); it != lo.end()) {
      objects.push_back(to_left.on_object(static_cast<VertexId>(it - lo.begin())));
    } else if (auto jt = std::find(ro.begin(), ro.end(), v); jt != ro.end()) {
      objects.push_back(to_right.on_object(static_cast<VertexId>(jt - ro.begin())));
    } else {
      throw Error(ErrorKind::InvalidInput, "object " + g.vertex(v) + " is not in either image");
    }
  }
  std::vector<Path> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Path target = Path::of_edge(g, e);
    const auto& le = left.edge_map();
    const auto& re = right.edge_map();
    if (auto it = std::find(le.begin(), le.end(), target); it != le.end()) {
      edges.push_back(to_left.on_edge(static_cast<EdgeId>(it - le.begin())));
    } else if (auto jt = std::find(re.begin(), re.end(), target); jt != re.end()) {
      edges.push_back(to_right.on_edge(static_cast<EdgeId>(jt - re.begin())));
    } else {
      throw Error(ErrorKind::InvalidInput,
                  "generator " + g.edge(e).name + " is not the image of a single generator");
    }
  }
  return Functor(apex, to_left.target(), std::move(objects), std::move(edges));
}

Truth is_pushout(const Functor& f, const Functor& g, const Functor& left, const Functor& right,
                 std::string* witness) {
  std::string why;
  Truth square = equal(then(f, left), then(g, right), &why);
  if (square == Truth::No) {
    if (witness) *witness = "square does not commute at " + why;
    return Truth::No;
  }
  CatPushout canon = pushout_cat(f, g);
  Functor to_apex = copair(canon.left, canon.right, left, right);
  Functor from_apex;
  try {
    from_apex = copair(left, right, canon.left, canon.right);
  } catch (const Error& e) {
    if (witness) *witness = e.what();
    return Truth::No;
  }
  if (auto d = to_apex.defect()) {
    if (witness) *witness = "comparison map is not a functor: " + *d;
    return Truth::No;
  }
  if (auto d = from_apex.defect()) {
    if (witness) *witness = "inverse comparison is not a functor: " + *d;
    return Truth::No;
  }
  Truth there = equal(then(to_apex, from_apex), Functor::identity(canon.category), &why);
  if (there == Truth::No) {
    if (witness) *witness = "comparison is not invertible at " + why;
    return Truth::No;
  }
  Truth back = equal(then(from_apex, to_apex), Functor::identity(left.target()), &why);
  if (back == Truth::No) {
    if (witness) *witness = "comparison is not invertible at " + why;
    return Truth::No;
  }
  if (square == Truth::Unknown || there == Truth::Unknown || back == Truth::Unknown) {
    return Truth::Unknown;
  }
  return Truth::Yes;
}

GraphPushout pushout_graph(const Graph& a, const Graph& b, const Graph& c, const GraphMorphism& f,
                           const GraphMorphism& g) {
  auto injective = [](auto v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  for (const GraphMorphism* h : {&f, &g}) {
    if (h->vertices.size() != a.vertex_count() || h->edges.size() != a.edge_count()) {
      throw Error(ErrorKind::InvalidInput, "graph morphism does not cover its source");
    }
    if (!injective(h->vertices) || !injective(h->edges)) {
      throw Error(ErrorKind::NonMono, "pushout leg is not injective");
    }
  }
  std::vector<std::pair<VertexId, VertexId>> same_vertices;
  for (VertexId v = 0; v < a.vertex_count(); ++v) same_vertices.emplace_back(f.vertices[v], g.vertices[v]);
  std::vector<std::pair<EdgeId, EdgeId>> same_edges;
  for (EdgeId e = 0; e < a.edge_count(); ++e) same_edges.emplace_back(f.edges[e], g.edges[e]);
  Glued glued = glue(b, c, same_vertices, same_edges);
  return GraphPushout{std::move(glued.graph), {glued.left_vertices, glued.left_edges},
                      {glued.right_vertices, glued.right_edges}};
}

Graph underlying_graph(const Category& c) {
  Graph out;
  for (const auto& v : c.graph().vertices()) out.add_vertex(v);
  for (ClassId k = 0; k < c.morphism_count(); ++k) {
    const Path& rep = c.representative(k);
    out.add_edge(to_string(c.graph(), rep), rep.start, rep.finish);
  }
  return out;
}

}  // namespace cocat
