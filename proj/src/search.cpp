#include "cocat/search.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "cocat/catalog.hpp"
#include "cocat/error.hpp"
#include "cocat/instances.hpp"
#include "cocat/tensor.hpp"

namespace cocat {

namespace {

template <class W>
using MapOf = typename W::Map;

template <class W>
bool agree(const MapOf<W>& a, const MapOf<W>& b) {
  return W::equal(a, b, nullptr) == Truth::Yes;
}

std::pair<int, int> ends(char which) {
  switch (which) {
    case 'd':
    case 'c': return {0, 1};
    case 'i': return {1, 0};
    default: return {1, 2};
  }
}

// Row 1 or column 1 structure d, c, i around the corner.
template <class W>
struct Side {
  MapOf<W> d, c, i;
  const MapOf<W>& get(char k) const { return k == 'd' ? d : k == 'c' ? c : i; }
};

template <class W>
struct Boundary {
  Side<W> row, column;
  typename W::Pushout row_po, column_po;
  // Induced maps between the first row/column and the pushout entries.
  MapOf<W> col2_d, col2_c, col2_i;
  MapOf<W> row2_d, row2_c, row2_i;
};

template <class W>
const MapOf<W>& known_map(const CocategoryData<W>& x, char k) {
  return structure_map(x, k);
}

// The cocategory axioms that involve m alone: d;m = d;p, c;m = c;q and both counits.
template <class W>
bool comultiplication_ok(const Side<W>& s, const typename W::Pushout& po, const MapOf<W>& m) {
  const auto one = W::identity(W::target(s.d));
  const auto left_unit = W::copair(po.left, po.right, W::compose(s.i, s.d), one);
  const auto right_unit = W::copair(po.left, po.right, one, W::compose(s.i, s.c));
  return agree<W>(W::compose(s.d, m), W::compose(s.d, po.left)) &&
         agree<W>(W::compose(s.c, m), W::compose(s.c, po.right)) &&
         agree<W>(W::compose(m, left_unit), one) && agree<W>(W::compose(m, right_unit), one);
}

template <class W>
std::optional<DoubleCocategoryData<W>> assemble(const CocategoryData<W>& top, const CocategoryData<W>& left,
                                                const Boundary<W>& b, const MapOf<W>& hm, const MapOf<W>& vm) {
  try {
    auto corner = W::pushout(b.col2_c, b.col2_d);
    auto row1 = CocategoryData<W>::make(b.row.d, b.row.c, b.row.i, b.row_po.left, hm, b.row_po.right);
    auto col1 = CocategoryData<W>::make(b.column.d, b.column.c, b.column.i, b.column_po.left, vm, b.column_po.right);
    // Row 2 only reads the injections of column 2, whose m is filled in afterwards.
    auto col2 = CocategoryData<W>::make(b.col2_d, b.col2_c, b.col2_i, corner.left, corner.left, corner.right);
    auto x = derive_last_row<W>({top, row1, top}, {left, col1, col2});
    x.columns[2].m = W::copair(row1.first, row1.second, W::compose(vm, x.rows[2].p), W::compose(vm, x.rows[2].q));
    if (check_double_cocategory(x, true).passed()) return x;
  } catch (const Error&) {
  }
  return std::nullopt;
}

template <class W, class Maps, class Comults>
CompletionSearch<W> complete(const CocategoryData<W>& top, const CocategoryData<W>& left,
                             const typename W::Object& corner, Maps&& maps, Comults&& comults, bool parallel) {
  CompletionSearch<W> out;
  const auto h_in = maps(left.a2, corner);
  const auto v_in = maps(top.a2, corner);
  const auto h_out = maps(corner, left.a2);
  const auto v_out = maps(corner, top.a2);

  // Squares between the known first row/column and the unknown second ones.
  auto square = [&](const Side<W>& row, const Side<W>& col, char h, char v) {
    auto [sx, tx] = ends(h);
    auto [sy, ty] = ends(v);
    const auto& row_s = sy == 0 ? known_map(top, h) : row.get(h);
    const auto& row_t = ty == 0 ? known_map(top, h) : row.get(h);
    const auto& col_t = tx == 0 ? known_map(left, v) : col.get(v);
    const auto& col_s = sx == 0 ? known_map(left, v) : col.get(v);
    return agree<W>(W::compose(row_s, col_t), W::compose(col_s, row_t));
  };
  auto sections = [&](const MapOf<W>& d, const MapOf<W>& c, const MapOf<W>& i) {
    const auto one = W::identity(W::source(d));
    return agree<W>(W::compose(d, i), one) && agree<W>(W::compose(c, i), one);
  };

  std::vector<Boundary<W>> boundaries;
  for (const auto& hd : h_in) {
    for (const auto& hc : h_in) {
      for (const auto& hi : h_out) {
        if (!sections(hd, hc, hi)) continue;
        Side<W> row{hd, hc, hi};
        for (const auto& vd : v_in) {
          Side<W> col{vd, vd, vd};
          if (!square(row, col, 'd', 'd') || !square(row, col, 'c', 'd') || !square(row, col, 'i', 'd')) continue;
          for (const auto& vc : v_in) {
            col.c = vc;
            if (!square(row, col, 'd', 'c') || !square(row, col, 'c', 'c') || !square(row, col, 'i', 'c')) continue;
            for (const auto& vi : v_out) {
              col.i = vi;
              if (!sections(vd, vc, vi)) continue;
              if (!square(row, col, 'd', 'i') || !square(row, col, 'c', 'i') || !square(row, col, 'i', 'i')) continue;
              try {
                Boundary<W> b{row, col, W::pushout(hc, hd), W::pushout(vc, vd), {}, {}, {}, {}, {}, {}};
                b.col2_d = W::copair(top.first, top.second, W::compose(vd, b.row_po.left), W::compose(vd, b.row_po.right));
                b.col2_c = W::copair(top.first, top.second, W::compose(vc, b.row_po.left), W::compose(vc, b.row_po.right));
                b.col2_i = W::copair(b.row_po.left, b.row_po.right, W::compose(vi, top.p), W::compose(vi, top.q));
                b.row2_d = W::copair(left.first, left.second, W::compose(hd, b.column_po.left), W::compose(hd, b.column_po.right));
                b.row2_c = W::copair(left.first, left.second, W::compose(hc, b.column_po.left), W::compose(hc, b.column_po.right));
                b.row2_i = W::copair(b.column_po.left, b.column_po.right, W::compose(hi, left.p), W::compose(hi, left.q));
                boundaries.push_back(std::move(b));
              } catch (const Error&) {
              }
            }
          }
        }
      }
    }
  }
  out.boundaries = boundaries.size();

  struct Task {
    std::size_t boundary;
    MapOf<W> hm, vm;
  };
  std::vector<Task> tasks;
  for (std::size_t k = 0; k < boundaries.size(); ++k) {
    const auto& b = boundaries[k];
    std::vector<MapOf<W>> hms, vms;
    for (auto& hm : comults(b.row, b.row_po)) {
      if (agree<W>(W::compose(top.m, b.col2_d), W::compose(b.column.d, hm)) &&
          agree<W>(W::compose(top.m, b.col2_c), W::compose(b.column.c, hm)) &&
          agree<W>(W::compose(hm, b.col2_i), W::compose(b.column.i, top.m))) {
        hms.push_back(std::move(hm));
      }
    }
    for (auto& vm : comults(b.column, b.column_po)) {
      if (agree<W>(W::compose(b.row.d, vm), W::compose(left.m, b.row2_d)) &&
          agree<W>(W::compose(b.row.c, vm), W::compose(left.m, b.row2_c)) &&
          agree<W>(W::compose(b.row.i, left.m), W::compose(vm, b.row2_i))) {
        vms.push_back(std::move(vm));
      }
    }
    for (const auto& hm : hms) {
      for (const auto& vm : vms) tasks.push_back({k, hm, vm});
    }
  }
  out.comultiplications = tasks.size();

  std::vector<std::optional<DoubleCocategoryData<W>>> found(tasks.size());
  const auto n = static_cast<long long>(tasks.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long t = 0; t < n; ++t) {
      found[t] = assemble(top, left, boundaries[tasks[t].boundary], tasks[t].hm, tasks[t].vm);
    }
  } else {
    for (long long t = 0; t < n; ++t) {
      found[t] = assemble(top, left, boundaries[tasks[t].boundary], tasks[t].hm, tasks[t].vm);
    }
  }
  for (auto& f : found) {
    if (f) out.completions.push_back(std::move(*f));
  }
  return out;
}

// Every function from a set of size `source` to one of size `target`.
std::vector<FinMap> all_functions(std::size_t source, std::size_t target) {
  std::vector<FinMap> out;
  if (source > 0 && target == 0) return out;
  FinMap f{source, target, std::vector<std::size_t>(source, 0)};
  while (true) {
    out.push_back(f);
    std::size_t k = 0;
    while (k < source && ++f.values[k] == target) f.values[k++] = 0;
    if (k == source) break;
  }
  return out;
}

// Comultiplications in Set, pruned pointwise by the local axioms.
std::vector<FinMap> set_comultiplications(const Side<SetWorld>& s, const SetWorld::Pushout& po) {
  const std::size_t n = s.d.target;
  const auto one = FinMap::identity(n);
  const auto left_unit = copair(po.left, po.right, then(s.i, s.d), one);
  const auto right_unit = copair(po.left, po.right, one, then(s.i, s.c));
  std::vector<std::vector<std::size_t>> options(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < po.apex; ++y) {
      if (left_unit(y) == x && right_unit(y) == x) options[x].push_back(y);
    }
  }
  for (std::size_t a = 0; a < s.d.source; ++a) {
    auto pin = [&](std::size_t x, std::size_t y) {
      auto& o = options[x];
      o.erase(std::remove_if(o.begin(), o.end(), [&](std::size_t v) { return v != y; }), o.end());
    };
    pin(s.d(a), po.left(s.d(a)));
    pin(s.c(a), po.right(s.c(a)));
  }
  std::vector<FinMap> out;
  for (const auto& o : options) {
    if (o.empty()) return out;
  }
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    FinMap m{n, po.apex, {}};
    for (std::size_t x = 0; x < n; ++x) m.values.push_back(options[x][pick[x]]);
    if (comultiplication_ok<SetWorld>(s, po, m)) out.push_back(std::move(m));
    std::size_t k = 0;
    while (k < n && ++pick[k] == options[k].size()) pick[k++] = 0;
    if (k == n) break;
  }
  return out;
}

std::vector<Functor> cat_comultiplications(const Side<CatWorld>& s, const CatWorld::Pushout& po) {
  const Graph& a1 = s.d.source()->graph();
  const Graph& a2 = s.d.target()->graph();
  std::vector<std::optional<VertexId>> objects(a2.vertex_count());
  std::vector<std::optional<Path>> edges(a2.edge_count());
  auto pin = [&](const Functor& side, const Functor& inj) {
    for (VertexId v = 0; v < a1.vertex_count(); ++v) objects[side.on_object(v)] = inj.on_object(side.on_object(v));
    for (EdgeId e = 0; e < a1.edge_count(); ++e) {
      const Path& img = side.on_edge(e);
      if (img.length() == 1) edges[img.edges[0]] = inj.apply(img);
    }
  };
  pin(s.d, po.left);
  pin(s.c, po.right);
  std::vector<Functor> out;
  for (auto& m : enumerate_functors(s.d.target(), po.apex, objects, edges)) {
    if (comultiplication_ok<CatWorld>(s, po, m)) out.push_back(std::move(m));
  }
  return out;
}

std::vector<std::vector<std::size_t>> permutations(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Transports m along sigma on A2: m;copair(sigma;p', sigma;q') == sigma;m'.
template <class W>
bool transports(const CocategoryData<W>& a, const MapOf<W>& sigma, const CocategoryData<W>& b) {
  try {
    auto induced = W::copair(a.first, a.second, W::compose(sigma, b.p), W::compose(sigma, b.q));
    return agree<W>(W::compose(a.m, induced), W::compose(sigma, b.m));
  } catch (const Error&) {
    return false;
  }
}

// sigma on the corner carries row 1 and column 1 of `a` to those of `b`.
template <class W>
bool carries(const DoubleCocategoryData<W>& a, const MapOf<W>& sigma, const DoubleCocategoryData<W>& b) {
  for (bool row : {true, false}) {
    const auto& x = row ? a.rows[1] : a.columns[1];
    const auto& y = row ? b.rows[1] : b.columns[1];
    if (!agree<W>(W::compose(x.d, sigma), y.d) || !agree<W>(W::compose(x.c, sigma), y.c) ||
        !agree<W>(x.i, W::compose(sigma, y.i)) || !transports(x, sigma, y)) {
      return false;
    }
  }
  return true;
}

std::vector<FinMap> set_automorphisms(std::size_t n) {
  std::vector<FinMap> out;
  for (auto& p : permutations(n)) out.push_back(FinMap{n, n, std::move(p)});
  return out;
}

std::vector<Functor> cat_automorphisms(const CategoryPtr& c) {
  auto ends = enumerate_functors(c, c);
  std::vector<Functor> out;
  const auto one = Functor::identity(c);
  for (const auto& f : ends) {
    bool invertible = std::any_of(ends.begin(), ends.end(), [&](const Functor& g) {
      return agree<CatWorld>(then(f, g), one) && agree<CatWorld>(then(g, f), one);
    });
    if (invertible) out.push_back(f);
  }
  return out;
}

template <class W, class Autos>
std::vector<DoubleCocategoryData<W>> classes(const std::vector<DoubleCocategoryData<W>>& xs, Autos&& autos) {
  std::vector<DoubleCocategoryData<W>> out;
  for (const auto& x : xs) {
    const auto sigmas = autos(x.grid[1][1]);
    bool seen = std::any_of(out.begin(), out.end(), [&](const auto& y) {
      return W::same(x.grid[1][1], y.grid[1][1]) &&
             std::any_of(sigmas.begin(), sigmas.end(), [&](const auto& s) { return carries(x, s, y); });
    });
    if (!seen) out.push_back(x);
  }
  return out;
}

}  // namespace

Presentation extra_diagonals(std::size_t extra) {
  Presentation p = funny_tensor(ordinal(2), ordinal(2));
  for (std::size_t k = 1; k <= extra; ++k) p.graph.add_edge("x" + std::to_string(k), "(0,0)", "(1,1)");
  return p;
}

CompletionSearch<CatWorld> search_double_completions(const Presentation& corner, bool parallel) {
  auto a22 = Category::make(corner);
  auto from = a22->graph().find_vertex("(0,0)");
  auto to = a22->graph().find_vertex("(1,1)");
  if (!from || !to || a22->object_count() != 4) {
    throw Error(ErrorKind::InvalidInput, "the corner must have the four objects (0,0), (0,1), (1,0), (1,1)");
  }
  enforce_guard(a22->hom(*from, *to).size() <= 6, ErrorKind::SearchSpaceTooLarge,
                "hom((0,0),(1,1)) has more than four elements beyond the two composites");
  auto s = arrow_cocategory();
  auto maps = [](const CategoryPtr& a, const CategoryPtr& b) { return enumerate_functors(a, b); };
  return complete<CatWorld>(s, s, a22, maps, cat_comultiplications, parallel);
}

CompletionSearch<SetWorld> set_double_completions(std::size_t max_corner, bool parallel) {
  enforce_guard(max_corner <= 6, ErrorKind::GuardViolation, "set corner search is limited to 6 elements");
  auto o = set_cocategory();
  CompletionSearch<SetWorld> out;
  for (std::size_t n = 1; n <= max_corner; ++n) {
    auto r = complete<SetWorld>(o, o, n, all_functions, set_comultiplications, parallel);
    out.boundaries += r.boundaries;
    out.comultiplications += r.comultiplications;
    for (auto& x : r.completions) out.completions.push_back(std::move(x));
  }
  return out;
}

std::vector<CocategoryData<SetWorld>> enumerate_set_cocategories(std::size_t max_a2) {
  enforce_guard(max_a2 <= 6, ErrorKind::GuardViolation, "set cocategory enumeration is limited to |A2| <= 6");
  std::vector<CocategoryData<SetWorld>> found;
  for (std::size_t n = 1; n <= max_a2; ++n) {
    for (std::size_t d = 0; d < n; ++d) {
      for (std::size_t c = 0; c < n; ++c) {
        Side<SetWorld> side{FinMap{1, n, {d}}, FinMap{1, n, {c}}, FinMap::constant(n, 1, 0)};
        auto po = SetWorld::pushout(side.c, side.d);
        for (const auto& m : set_comultiplications(side, po)) {
          auto x = CocategoryData<SetWorld>::make(side.d, side.c, side.i, po.left, m, po.right);
          if (!check_cocategory(x, true).passed()) continue;
          bool seen = std::any_of(found.begin(), found.end(), [&](const auto& y) { return isomorphic(x, y); });
          if (!seen) found.push_back(std::move(x));
        }
      }
    }
  }
  return found;
}

bool isomorphic(const CocategoryData<SetWorld>& a, const CocategoryData<SetWorld>& b) {
  if (a.a1 != b.a1 || a.a2 != b.a2 || a.a3 != b.a3) return false;
  for (const auto& sigma : set_automorphisms(a.a2)) {
    if (then(a.d, sigma) == b.d && then(a.c, sigma) == b.c && a.i == then(sigma, b.i) && transports(a, sigma, b)) {
      return true;
    }
  }
  return false;
}

bool isomorphic(const DoubleCocategoryData<SetWorld>& a, const DoubleCocategoryData<SetWorld>& b) {
  if (a.grid[1][1] != b.grid[1][1]) return false;
  auto sigmas = set_automorphisms(a.grid[1][1]);
  return std::any_of(sigmas.begin(), sigmas.end(), [&](const FinMap& s) { return carries(a, s, b); });
}

bool isomorphic(const DoubleCocategoryData<CatWorld>& a, const DoubleCocategoryData<CatWorld>& b) {
  if (!CatWorld::same(a.grid[1][1], b.grid[1][1])) return false;
  auto sigmas = cat_automorphisms(a.grid[1][1]);
  return std::any_of(sigmas.begin(), sigmas.end(), [&](const Functor& s) { return carries(a, s, b); });
}

std::vector<DoubleCocategoryData<SetWorld>> up_to_isomorphism(const std::vector<DoubleCocategoryData<SetWorld>>& xs) {
  return classes(xs, set_automorphisms);
}

std::vector<DoubleCocategoryData<CatWorld>> up_to_isomorphism(const std::vector<DoubleCocategoryData<CatWorld>>& xs) {
  return classes(xs, cat_automorphisms);
}

}  // namespace cocat
