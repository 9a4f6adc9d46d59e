#include "cocat/instances.hpp"

#include <functional>

#include "cocat/catalog.hpp"
#include "cocat/error.hpp"

namespace cocat {

namespace {

constexpr std::string_view kMaps = "dcipmq";

std::pair<int, int> ends(char which) {
  switch (which) {
    case 'd':
    case 'c': return {0, 1};
    case 'i': return {1, 0};
    default: return {1, 2};
  }
}

// The ordinals 1, 2, 3 and the structure maps between them.
struct ArrowMaps {
  std::array<CategoryPtr, 3> objects;
  Functor d, c, i, p, m, q;

  const Functor& get(char which) const {
    switch (which) {
      case 'd': return d;
      case 'c': return c;
      case 'i': return i;
      case 'p': return p;
      case 'm': return m;
      default: return q;
    }
  }
};

ArrowMaps arrow_maps() {
  ArrowMaps s;
  for (std::size_t k = 0; k < 3; ++k) s.objects[k] = Category::make(ordinal(k + 1));
  const auto& [one, two, three] = s.objects;
  const Graph& g3 = three->graph();
  s.d = Functor(one, two, {0}, {});
  s.c = Functor(one, two, {1}, {});
  s.i = Functor(two, one, {0, 0}, {Path::identity(0)});
  s.p = Functor(two, three, {0, 1}, {make_path(g3, "0", {"f"})});
  s.m = Functor(two, three, {0, 2}, {make_path(g3, "0", {"f", "g"})});
  s.q = Functor(two, three, {1, 2}, {make_path(g3, "1", {"g"})});
  return s;
}

// Assembles a grid whose horizontal maps are built by `horizontal(which, row)`
// and vertical maps by `vertical(which, column)`.
template <class W, class H, class V>
DoubleCocategoryData<W> assemble(H&& horizontal, V&& vertical) {
  std::array<CocategoryData<W>, 3> rows, columns;
  for (int k = 0; k < 3; ++k) {
    std::array<typename W::Map, 6> h, v;
    for (std::size_t j = 0; j < kMaps.size(); ++j) {
      h[j] = horizontal(kMaps[j], k);
      v[j] = vertical(kMaps[j], k);
    }
    rows[k] = CocategoryData<W>::make(h[0], h[1], h[2], h[3], h[4], h[5]);
    columns[k] = CocategoryData<W>::make(v[0], v[1], v[2], v[3], v[4], v[5]);
  }
  return DoubleCocategoryData<W>::make(rows, columns);
}

}  // namespace

CocategoryData<CatWorld> arrow_cocategory() {
  auto s = arrow_maps();
  return CocategoryData<CatWorld>::make(s.d, s.c, s.i, s.p, s.m, s.q);
}

CocategoryData<SetWorld> set_cocategory() {
  return CocategoryData<SetWorld>::make(FinMap{1, 2, {0}}, FinMap{1, 2, {1}}, FinMap{2, 1, {0, 0}},
                                        FinMap{2, 3, {0, 1}}, FinMap{2, 3, {0, 2}}, FinMap{2, 3, {1, 2}});
}

DoubleCocategoryData<CatWorld> arrow_tensor(TensorKind kind) {
  if (kind != TensorKind::Funny && kind != TensorKind::Cartesian) {
    throw Error(ErrorKind::InvalidInput, "arrow_tensor builds the funny and cartesian instances");
  }
  auto s = arrow_maps();
  std::array<std::array<CategoryPtr, 3>, 3> grid;
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      const auto& a = s.objects[x]->presentation();
      const auto& b = s.objects[y]->presentation();
      grid[x][y] = Category::make(kind == TensorKind::Funny ? funny_tensor(a, b) : cartesian_tensor(a, b));
    }
  }
  auto horizontal = [&](char z, int y) {
    auto [sx, tx] = ends(z);
    return tensor_map_cat(kind, s.get(z), Functor::identity(s.objects[y]), grid[sx][y], grid[tx][y]);
  };
  auto vertical = [&](char z, int x) {
    auto [sy, ty] = ends(z);
    return tensor_map_cat(kind, Functor::identity(s.objects[x]), s.get(z), grid[x][sy], grid[x][ty]);
  };
  return assemble<CatWorld>(horizontal, vertical);
}

DoubleCocategoryData<HigherWorld> arrow_gray_tensor(TensorKind kind, Flavor flavor) {
  auto s = arrow_maps();
  std::array<HigherPtr, 3> factors;
  for (int k = 0; k < 3; ++k) factors[k] = locally_discrete(s.objects[k], flavor);
  std::array<std::array<HigherPtr, 3>, 3> grid;
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) grid[x][y] = tensor_higher(kind, factors[x], factors[y]);
  }
  auto lift = [&](char z) {
    auto [from, to] = ends(z);
    return SesquiFunctor(factors[from], factors[to], s.get(z), {});
  };
  auto horizontal = [&](char z, int y) {
    auto [sx, tx] = ends(z);
    return tensor_map(kind, lift(z), SesquiFunctor::identity(factors[y]), grid[sx][y], grid[tx][y]);
  };
  auto vertical = [&](char z, int x) {
    auto [sy, ty] = ends(z);
    return tensor_map(kind, SesquiFunctor::identity(factors[x]), lift(z), grid[x][sy], grid[x][ty]);
  };
  return assemble<HigherWorld>(horizontal, vertical);
}

DoubleCocategoryData<SetWorld> set_product() {
  auto o = set_cocategory();
  const std::array<std::size_t, 3> size{1, 2, 3};
  auto get = [&](char z) -> const FinMap& { return structure_map(o, z); };
  auto horizontal = [&](char z, int y) {
    const FinMap& f = get(z);
    FinMap out{f.source * size[y], f.target * size[y], {}};
    for (std::size_t a = 0; a < f.source; ++a) {
      for (std::size_t b = 0; b < size[y]; ++b) out.values.push_back(f(a) * size[y] + b);
    }
    return out;
  };
  auto vertical = [&](char z, int x) {
    const FinMap& f = get(z);
    FinMap out{size[x] * f.source, size[x] * f.target, {}};
    for (std::size_t a = 0; a < size[x]; ++a) {
      for (std::size_t b = 0; b < f.source; ++b) out.values.push_back(a * f.target + f(b));
    }
    return out;
  };
  return assemble<SetWorld>(horizontal, vertical);
}

PreDoubleCocategoryData<HigherWorld> indiscrete_instance() {
  auto s = arrow_maps();
  std::array<HigherPtr, 3> factors;
  for (int k = 0; k < 3; ++k) factors[k] = locally_discrete(s.objects[k], Flavor::Sesqui);
  std::array<std::array<HigherPtr, 3>, 3> grid;
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      if (x < 2 && y < 2) {
        auto base = funny_tensor(s.objects[x]->presentation(), s.objects[y]->presentation());
        grid[x][y] = locally_indiscrete(Category::make(base), Flavor::Sesqui);
      } else {
        grid[x][y] = tensor_higher(TensorKind::GrayPseudo, factors[x], factors[y]);
      }
    }
  }
  auto lift = [&](const Functor& f, const Functor& g, const HigherPtr& from, const HigherPtr& to) {
    return indiscrete_lift(tensor_map_cat(TensorKind::Funny, f, g, from->base, to->base), from, to);
  };
  std::array<CocategoryData<HigherWorld>, 3> rows, columns;
  for (int k = 0; k < 3; ++k) {
    std::array<SesquiFunctor, 6> h, v;
    for (std::size_t j = 0; j < kMaps.size(); ++j) {
      auto [from, to] = ends(kMaps[j]);
      const Functor& z = s.get(kMaps[j]);
      if (k < 2) h[j] = lift(z, Functor::identity(s.objects[k]), grid[from][k], grid[to][k]);
      v[j] = lift(Functor::identity(s.objects[k]), z, grid[k][from], grid[k][to]);
    }
    if (k < 2) rows[k] = CocategoryData<HigherWorld>::make(h[0], h[1], h[2], h[3], h[4], h[5]);
    columns[k] = CocategoryData<HigherWorld>::make(v[0], v[1], v[2], v[3], v[4], v[5]);
  }
  PreDoubleCocategoryData<HigherWorld> out{derive_last_row(rows, columns), std::nullopt};

  // The corner is the free grid on four invertible squares.
  const auto& corner = grid[2][2];
  auto free = free_grid(true, Flavor::Sesqui);
  std::vector<VertexId> objects;
  for (VertexId v = 0; v < corner->graph().vertex_count(); ++v) objects.push_back(free->graph().vertex_id(corner->graph().vertex(v)));
  std::vector<Path> edges;
  for (const auto& e : corner->graph().edges()) edges.push_back(Path::of_edge(free->graph(), free->graph().edge_id(e.name)));
  std::vector<TwoCellWord> cells;
  for (const auto& c : corner->cells) cells.push_back(generator_cell(*free, free->cell_id(c.name)));
  out.separator = SesquiFunctor(corner, free, Functor(corner->base, free->base, std::move(objects), std::move(edges)),
                                std::move(cells));
  return out;
}

DoubleCocategoryData<CatWorld> underlying(const DoubleCocategoryData<HigherWorld>& x) {
  auto down = [](const CocategoryData<HigherWorld>& c) {
    auto out = CocategoryData<CatWorld>::make(c.d.base(), c.c.base(), c.i.base(), c.p.base(), c.m.base(), c.q.base());
    out.first = c.first.base();
    out.second = c.second.base();
    return out;
  };
  std::array<CocategoryData<CatWorld>, 3> rows, columns;
  for (int k = 0; k < 3; ++k) {
    rows[k] = down(x.rows[k]);
    columns[k] = down(x.columns[k]);
  }
  return DoubleCocategoryData<CatWorld>::make(rows, columns);
}

CocategoryData<CatWorld> drop_relation(const CocategoryData<CatWorld>& x, std::size_t index) {
  Presentation pres = x.a3->presentation();
  if (index >= pres.relations.size()) throw Error(ErrorKind::InvalidInput, "A3 has no relation " + std::to_string(index));
  pres.relations.erase(pres.relations.begin() + static_cast<std::ptrdiff_t>(index));
  auto a3 = Category::make(std::move(pres));
  auto retarget = [&](const Functor& f) { return Functor(f.source(), a3, f.object_map(), f.edge_map()); };
  auto out = CocategoryData<CatWorld>::make(x.d, x.c, x.i, retarget(x.p), retarget(x.m), retarget(x.q));
  out.first = retarget(x.first);
  out.second = retarget(x.second);
  return out;
}

std::vector<std::string> standard_instance_names() { return {"O", "S", "S⋆S", "S×S", "S⊗lS", "S⊗pS", "I"}; }

StandardInstance standard_instance(const std::string& name) {
  if (name == "O") return set_cocategory();
  if (name == "S") return arrow_cocategory();
  if (name == "S⋆S" || name == "SstarS") return arrow_tensor(TensorKind::Funny);
  if (name == "S×S" || name == "SxS") return arrow_tensor(TensorKind::Cartesian);
  if (name == "S⊗lS" || name == "SgraylS") return arrow_gray_tensor(TensorKind::GrayLax);
  if (name == "S⊗pS" || name == "SgraypS") return arrow_gray_tensor(TensorKind::GrayPseudo);
  if (name == "I") return indiscrete_instance();
  throw Error(ErrorKind::UnknownName, "no standard instance named '" + name + "'");
}

}  // namespace cocat
