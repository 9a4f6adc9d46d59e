#include "cocat/functor.hpp"

#include "cocat/error.hpp"

namespace cocat {

Functor::Functor(CategoryPtr source, CategoryPtr target, std::vector<VertexId> objects,
                 std::vector<Path> edges)
    : source_(std::move(source)),
      target_(std::move(target)),
      objects_(std::move(objects)),
      edges_(std::move(edges)) {
  if (objects_.size() != source_->object_count() ||
      edges_.size() != source_->graph().edge_count()) {
    throw Error(ErrorKind::InvalidInput, "functor data does not cover the source generators");
  }
}

Functor Functor::identity(const CategoryPtr& c) {
  std::vector<VertexId> objects(c->object_count());
  for (VertexId v = 0; v < objects.size(); ++v) objects[v] = v;
  std::vector<Path> edges;
  for (EdgeId e = 0; e < c->graph().edge_count(); ++e) edges.push_back(Path::of_edge(c->graph(), e));
  return Functor(c, c, std::move(objects), std::move(edges));
}

Path Functor::apply(const Path& p) const {
  Path out = Path::identity(objects_.at(p.start));
  for (EdgeId e : p.edges) out = concat(out, edges_.at(e));
  return out;
}

std::optional<std::string> Functor::defect(bool* bounded) const {
  const Graph& sg = source_->graph();
  const Graph& tg = target_->graph();
  for (VertexId v : objects_) {
    if (v >= tg.vertex_count()) return "object image out of range";
  }
  for (EdgeId e = 0; e < sg.edge_count(); ++e) {
    const Path& img = edges_[e];
    if (!well_formed(tg, img)) return "image of " + sg.edge(e).name + " is not a path";
    if (img.start != objects_[sg.edge(e).src] || img.finish != objects_[sg.edge(e).tgt]) {
      return "image of " + sg.edge(e).name + " has the wrong endpoints";
    }
  }
  for (const auto& r : source_->presentation().relations) {
    Path a = apply(r.lhs);
    Path b = apply(r.rhs);
    Truth t = target_->equal(a, b);
    if (t == Truth::No) {
      return "relation " + to_string(sg, r.lhs) + " = " + to_string(sg, r.rhs) +
             " is not preserved: " + to_string(tg, a) + " != " + to_string(tg, b);
    }
    if (t == Truth::Unknown && bounded) *bounded = true;
  }
  if (bounded && target_->bounded()) *bounded = true;
  return std::nullopt;
}

Functor then(const Functor& first, const Functor& second) {
  if (first.target() != second.source() &&
      first.target()->presentation() != second.source()->presentation()) {
    throw Error(ErrorKind::InvalidInput, "functors are not composable");
  }
  std::vector<VertexId> objects;
  for (VertexId v : first.object_map()) objects.push_back(second.on_object(v));
  std::vector<Path> edges;
  for (const Path& p : first.edge_map()) edges.push_back(second.apply(p));
  return Functor(first.source(), second.target(), std::move(objects), std::move(edges));
}

Truth equal(const Functor& a, const Functor& b, std::string* witness) {
  const Graph& sg = a.source()->graph();
  const Graph& tg = a.target()->graph();
  for (VertexId v = 0; v < sg.vertex_count(); ++v) {
    if (a.on_object(v) != b.on_object(v)) {
      if (witness) {
        *witness = "object " + sg.vertex(v) + ": " + tg.vertex(a.on_object(v)) + " vs " +
                   tg.vertex(b.on_object(v));
      }
      return Truth::No;
    }
  }
  bool unknown = false;
  for (EdgeId e = 0; e < sg.edge_count(); ++e) {
    Truth t = a.target()->equal(a.on_edge(e), b.on_edge(e));
    if (t == Truth::No) {
      if (witness) {
        *witness = "generator " + sg.edge(e).name + ": " + to_string(tg, a.on_edge(e)) + " vs " +
                   to_string(tg, b.on_edge(e));
      }
      return Truth::No;
    }
    if (t == Truth::Unknown) unknown = true;
  }
  return unknown ? Truth::Unknown : Truth::Yes;
}

std::vector<Functor> enumerate_functors(const CategoryPtr& source, const CategoryPtr& target) {
  return enumerate_functors(source, target, {}, {});
}

std::vector<Functor> enumerate_functors(const CategoryPtr& source, const CategoryPtr& target,
                                        const std::vector<std::optional<VertexId>>& fixed_objects,
                                        const std::vector<std::optional<Path>>& fixed_edges) {
  const Graph& sg = source->graph();
  const std::size_t n = sg.vertex_count();
  const std::size_t m = target->object_count();
  auto object_fixed = [&](std::size_t v) { return v < fixed_objects.size() && fixed_objects[v]; };
  auto edge_fixed = [&](std::size_t e) { return e < fixed_edges.size() && fixed_edges[e]; };
  std::vector<Functor> out;
  std::vector<VertexId> objects(n, 0);
  std::vector<std::size_t> free_objects;
  for (std::size_t v = 0; v < n; ++v) {
    if (object_fixed(v)) {
      objects[v] = *fixed_objects[v];
    } else {
      free_objects.push_back(v);
    }
  }
  if (!free_objects.empty() && m == 0) return out;

  // Odometer over the free object images, then over edge images drawn from hom classes.
  while (true) {
    std::vector<std::vector<Path>> choices;
    bool possible = true;
    for (EdgeId e = 0; e < sg.edge_count(); ++e) {
      const Edge& edge = sg.edge(e);
      std::vector<Path> options;
      if (edge_fixed(e)) {
        const Path& p = *fixed_edges[e];
        if (p.start == objects[edge.src] && p.finish == objects[edge.tgt]) options.push_back(p);
      } else {
        for (ClassId k : target->hom(objects[edge.src], objects[edge.tgt])) options.push_back(target->representative(k));
      }
      if (options.empty()) possible = false;
      choices.push_back(std::move(options));
    }
    if (possible) {
      std::vector<std::size_t> pick(choices.size(), 0);
      while (true) {
        std::vector<Path> edges;
        for (std::size_t k = 0; k < choices.size(); ++k) edges.push_back(choices[k][pick[k]]);
        Functor f(source, target, objects, std::move(edges));
        if (f.valid()) out.push_back(std::move(f));
        std::size_t k = 0;
        while (k < pick.size() && ++pick[k] == choices[k].size()) pick[k++] = 0;
        if (k == pick.size()) break;
      }
    }
    std::size_t k = 0;
    while (k < free_objects.size() && ++objects[free_objects[k]] == m) objects[free_objects[k++]] = 0;
    if (k == free_objects.size()) break;
  }
  return out;
}

}  // namespace cocat

namespace cocat {

EndofunctorMonoid endofunctor_monoid(const CategoryPtr& c) {
  EndofunctorMonoid out;
  out.elements = enumerate_functors(c, c);
  auto index_of = [&](const Functor& f) {
    for (std::size_t k = 0; k < out.elements.size(); ++k) {
      if (equal(out.elements[k], f) != Truth::No) return k;
    }
    throw Error(ErrorKind::InvalidInput, "endofunctors are not closed under composition");
  };
  out.unit = index_of(Functor::identity(c));
  out.table.assign(out.size(), std::vector<std::size_t>(out.size()));
  for (std::size_t a = 0; a < out.size(); ++a) {
    for (std::size_t b = 0; b < out.size(); ++b) {
      out.table[a][b] = index_of(then(out.elements[a], out.elements[b]));
    }
  }
  return out;
}

Fullness full_on_objects(const Functor& f, const std::vector<VertexId>& objects) {
  const CategoryPtr& src = f.source();
  const CategoryPtr& tgt = f.target();
  Fullness out;
  out.bounded = src->bounded() || tgt->bounded();
  std::vector<bool> hit(tgt->morphism_count(), false);
  for (VertexId a : objects) {
    for (VertexId b : objects) {
      for (ClassId k : src->hom(a, b)) {
        if (auto img = tgt->class_of(f.apply(src->representative(k)))) hit[*img] = true;
      }
    }
  }
  for (VertexId a : objects) {
    for (VertexId b : objects) {
      for (ClassId k : tgt->hom(f.on_object(a), f.on_object(b))) {
        if (!hit[k]) {
          out.full = false;
          out.witness = to_string(tgt->graph(), tgt->representative(k));
          return out;
        }
      }
    }
  }
  return out;
}

}  // namespace cocat
