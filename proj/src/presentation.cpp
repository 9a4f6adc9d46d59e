#include "cocat/presentation.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cocat/error.hpp"

namespace cocat {

void Presentation::validate() const {
  for (const auto& r : relations) {
    if (!well_formed(graph, r.lhs) || !well_formed(graph, r.rhs)) {
      throw Error(ErrorKind::InvalidInput, "relation contains an ill-formed path");
    }
    if (r.lhs.start != r.rhs.start || r.lhs.finish != r.rhs.finish) {
      throw Error(ErrorKind::InvalidInput,
                  "relation " + to_string(graph, r.lhs) + " = " + to_string(graph, r.rhs) +
                      " is not between parallel paths");
    }
  }
}

Presentation free_category(const Graph& g) { return Presentation{g, {}}; }

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

bool shorter(const Path& a, const Path& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.edges < b.edges;
}

}  // namespace

CategoryPtr Category::make(Presentation p, std::optional<std::size_t> bound) {
  p.validate();
  auto cat = std::shared_ptr<Category>(new Category());
  const Graph& g = p.graph;
  if (g.is_acyclic()) {
    cat->bound_ = g.longest_path();
    cat->bounded_ = false;
  } else {
    if (!bound) {
      throw Error(ErrorKind::CycleWithoutBound,
                  "graph has a directed cycle; a path-length bound is required");
    }
    cat->bound_ = *bound;
    cat->bounded_ = true;
  }
  cat->paths_ = enumerate_paths(g, cat->bound_);
  const auto& paths = cat->paths_;

  auto& index = cat->index_;
  for (std::size_t k = 0; k < paths.size(); ++k) index.emplace(paths[k], k);

  auto lookup = [&](const Path& q) -> std::optional<std::size_t> {
    auto it = index.find(q);
    if (it == index.end()) return std::nullopt;
    return it->second;
  };

  // Extensions by one edge on either side, within the bound.
  std::vector<std::vector<std::pair<EdgeId, std::size_t>>> right(paths.size()), left(paths.size());
  for (std::size_t k = 0; k < paths.size(); ++k) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (g.edge(e).src == paths[k].finish) {
        if (auto j = lookup(concat(paths[k], Path::of_edge(g, e)))) right[k].emplace_back(e, *j);
      }
      if (g.edge(e).tgt == paths[k].start) {
        if (auto j = lookup(concat(Path::of_edge(g, e), paths[k]))) left[k].emplace_back(e, *j);
      }
    }
  }

  UnionFind uf(paths.size());
  for (const auto& r : p.relations) {
    auto a = lookup(r.lhs);
    auto b = lookup(r.rhs);
    if (a && b) {
      uf.unite(*a, *b);
    } else {
      cat->bounded_ = true;
    }
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (auto* ext : {&right, &left}) {
      std::map<std::pair<std::size_t, EdgeId>, std::size_t> seen;
      for (std::size_t k = 0; k < paths.size(); ++k) {
        for (auto [e, j] : (*ext)[k]) {
          auto key = std::make_pair(uf.find(k), e);
          auto [it, fresh] = seen.emplace(key, j);
          if (!fresh && uf.unite(it->second, j)) changed = true;
        }
      }
    }
  }

  // Canonical representative per class, then order classes deterministically.
  std::map<std::size_t, std::size_t> best;
  for (std::size_t k = 0; k < paths.size(); ++k) {
    auto r = uf.find(k);
    auto it = best.find(r);
    if (it == best.end() || shorter(paths[k], paths[it->second])) best[r] = k;
  }
  std::vector<std::size_t> roots;
  for (auto [r, k] : best) roots.push_back(r);
  std::sort(roots.begin(), roots.end(), [&](std::size_t a, std::size_t b) {
    const Path& pa = paths[best[a]];
    const Path& pb = paths[best[b]];
    if (pa.start != pb.start) return pa.start < pb.start;
    if (pa.finish != pb.finish) return pa.finish < pb.finish;
    return shorter(pa, pb);
  });
  std::map<std::size_t, ClassId> class_index;
  for (std::size_t k = 0; k < roots.size(); ++k) {
    class_index[roots[k]] = static_cast<ClassId>(k);
    cat->reps_.push_back(paths[best[roots[k]]]);
  }
  cat->class_of_path_.resize(paths.size());
  for (std::size_t k = 0; k < paths.size(); ++k) {
    cat->class_of_path_[k] = class_index[uf.find(k)];
  }
  cat->pres_ = std::move(p);
  return cat;
}

std::optional<ClassId> Category::class_of(const Path& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return class_of_path_[it->second];
}

Truth Category::equal(const Path& a, const Path& b) const {
  if (a == b) return Truth::Yes;
  if (a.start != b.start || a.finish != b.finish) return Truth::No;
  auto ca = class_of(a);
  auto cb = class_of(b);
  if (!ca || !cb) return Truth::Unknown;
  return *ca == *cb ? Truth::Yes : Truth::No;
}

std::vector<ClassId> Category::hom(VertexId a, VertexId b) const {
  std::vector<ClassId> out;
  for (ClassId c = 0; c < reps_.size(); ++c) {
    if (reps_[c].start == a && reps_[c].finish == b) out.push_back(c);
  }
  return out;
}

Path Category::canonical(const Path& p) const {
  auto c = class_of(p);
  return c ? reps_[*c] : p;
}

std::optional<ClassId> Category::compose(ClassId first, ClassId second) const {
  return class_of(concat(reps_.at(first), reps_.at(second)));
}

ClassId Category::identity(VertexId v) const { return *class_of(Path::identity(v)); }

std::vector<MorphismClass> hom_set(const Presentation& p, VertexId a, VertexId b,
                                   std::optional<std::size_t> bound) {
  auto cat = Category::make(p, bound);
  std::vector<MorphismClass> out;
  for (ClassId c : cat->hom(a, b)) out.push_back(MorphismClass{cat, cat->representative(c)});
  return out;
}

}  // namespace cocat
