#include "cocat/sesqui.hpp"

#include <algorithm>
#include <numeric>

#include "cocat/colimits.hpp"
#include "cocat/error.hpp"
#include "cocat/glue.hpp"

namespace cocat {

SesquiFunctor::SesquiFunctor(HigherPtr source, HigherPtr target, Functor base,
                             std::vector<TwoCellWord> cells)
    : source_(std::move(source)), target_(std::move(target)), base_(std::move(base)), cells_(std::move(cells)) {
  if (cells_.size() != source_->cells.size()) {
    throw Error(ErrorKind::InvalidInput, "2-cell map does not cover the source generators");
  }
  if (base_.source()->presentation() != source_->base->presentation() ||
      base_.target()->presentation() != target_->base->presentation()) {
    throw Error(ErrorKind::InvalidInput, "base functor does not match the presentations");
  }
  for (auto& w : cells_) w = reduce(*target_, w);
}

SesquiFunctor SesquiFunctor::identity(const HigherPtr& p) {
  std::vector<TwoCellWord> cells;
  for (CellId k = 0; k < p->cells.size(); ++k) cells.push_back(generator_cell(*p, k));
  return SesquiFunctor(p, p, Functor::identity(p->base), std::move(cells));
}

TwoCellWord SesquiFunctor::apply(const TwoCellWord& w) const {
  TwoCellWord out{base_.apply(w.src), base_.apply(w.tgt), {}};
  for (const auto& s : w.steps) {
    TwoCellWord img = s.inverse ? inverse(*target_, cells_.at(s.cell)) : cells_.at(s.cell);
    TwoCellWord whiskered = whisker(*target_, base_.apply(s.pre), img, base_.apply(s.post));
    out.steps.insert(out.steps.end(), whiskered.steps.begin(), whiskered.steps.end());
  }
  return reduce(*target_, out);
}

std::optional<std::string> SesquiFunctor::defect(bool* bounded) const {
  if (source_->flavor == Flavor::TwoCategory && target_->flavor != Flavor::TwoCategory) {
    return "a 2-category presentation cannot map into a sesquicategory one";
  }
  if (auto d = base_.defect(bounded)) return d;
  const Category& t = *target_->base;
  for (CellId k = 0; k < source_->cells.size(); ++k) {
    const auto& cell = source_->cells[k];
    const auto& img = cells_[k];
    if (!well_formed(*target_, img)) return "image of " + cell.name + " is not a 2-cell word";
    if (t.equal(img.src, base_.apply(cell.src)) == Truth::No ||
        t.equal(img.tgt, base_.apply(cell.tgt)) == Truth::No) {
      return "image of " + cell.name + " has the wrong boundary";
    }
    if (cell.invertible) {
      for (const auto& s : img.steps) {
        if (!target_->cells[s.cell].invertible) {
          return "invertible " + cell.name + " maps to a non-invertible word";
        }
      }
    }
  }
  for (const auto& r : source_->relations) {
    auto verdict = twocell_equal(*target_, apply(r.lhs), apply(r.rhs));
    if (verdict.distinct()) {
      return "2-cell relation " + to_string(*source_, r.lhs) + " = " + to_string(*source_, r.rhs) +
             " is not preserved";
    }
    if (!verdict.equal() && bounded) *bounded = true;
  }
  return std::nullopt;
}

SesquiFunctor then(const SesquiFunctor& first, const SesquiFunctor& second) {
  std::vector<TwoCellWord> cells;
  for (const auto& w : first.cell_map()) cells.push_back(second.apply(w));
  return SesquiFunctor(first.source(), second.target(), then(first.base(), second.base()),
                       std::move(cells));
}

Truth equal(const SesquiFunctor& a, const SesquiFunctor& b, std::string* witness) {
  Truth base = equal(a.base(), b.base(), witness);
  if (base == Truth::No) return Truth::No;
  bool unknown = base == Truth::Unknown;
  const auto& target = *a.target();
  for (CellId k = 0; k < a.source()->cells.size(); ++k) {
    auto verdict = twocell_equal(target, a.cell_map()[k], b.cell_map()[k]);
    if (verdict.distinct()) {
      if (witness) {
        *witness = "2-cell " + a.source()->cells[k].name + ": " + to_string(target, a.cell_map()[k]) +
                   " vs " + to_string(target, b.cell_map()[k]) + " (" + to_string(verdict.verdict) + ")";
      }
      return Truth::No;
    }
    if (!verdict.equal()) unknown = true;
  }
  return unknown ? Truth::Unknown : Truth::Yes;
}

namespace {

bool is_bare_generator(const TwoCellWord& w) {
  return w.steps.size() == 1 && !w.steps[0].inverse && w.steps[0].pre.empty() && w.steps[0].post.empty();
}

SesquiFunctor include_cells(const HigherPtr& source, const HigherPtr& target, const Functor& base,
                            const std::vector<CellId>& cells) {
  std::vector<TwoCellWord> words;
  for (CellId k : cells) words.push_back(generator_cell(*target, k));
  Functor rebased(source->base, target->base, base.object_map(), base.edge_map());
  return SesquiFunctor(source, target, std::move(rebased), std::move(words));
}

}  // namespace

HigherPushout pushout_sesqui(const SesquiFunctor& f, const SesquiFunctor& g) {
  const auto& a = *f.source();
  const auto& b = *f.target();
  const auto& c = *g.target();
  if (a.flavor != b.flavor || a.flavor != c.flavor || g.source()->flavor != a.flavor) {
    throw Error(ErrorKind::FlavorMismatch, "pushout of presentations with different flavors");
  }
  CatPushout base = pushout_cat(f.base(), g.base());

  // Glue 2-cell generators: bare generator images on both sides are merged.
  const std::size_t nb = b.cells.size();
  std::vector<std::size_t> parent(nb + c.cells.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<CellId> related;
  for (CellId k = 0; k < a.cells.size(); ++k) {
    const auto& fw = f.cell_map()[k];
    const auto& gw = g.cell_map()[k];
    if (is_bare_generator(fw) && is_bare_generator(gw)) {
      auto x = find(fw.steps[0].cell), y = find(nb + gw.steps[0].cell);
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    } else {
      related.push_back(k);
    }
  }
  HigherPresentation apex{base.category, {}, {}, a.flavor};
  std::vector<std::optional<CellId>> merged(parent.size());
  std::vector<CellId> cell_map(parent.size());
  for (std::size_t k = 0; k < parent.size(); ++k) {
    auto r = find(k);
    if (!merged[r]) {
      bool left = k < nb;
      const CellGenerator& cell = left ? b.cells[k] : c.cells[k - nb];
      const Functor& inj = left ? base.left : base.right;
      CellGenerator glued{fresh_label(cell.name, [&](const std::string& s) { return apex.find_cell(s).has_value(); }),
                          inj.apply(cell.src), inj.apply(cell.tgt), cell.invertible};
      merged[r] = static_cast<CellId>(apex.cells.size());
      apex.cells.push_back(std::move(glued));
    } else {
      const CellGenerator& cell = k < nb ? b.cells[k] : c.cells[k - nb];
      apex.cells[*merged[r]].invertible = apex.cells[*merged[r]].invertible || cell.invertible;
    }
    cell_map[k] = *merged[r];
  }
  std::vector<CellId> left_cells(cell_map.begin(), cell_map.begin() + nb);
  std::vector<CellId> right_cells(cell_map.begin() + nb, cell_map.end());

  auto bare = make_higher(apex);
  SesquiFunctor left = include_cells(f.target(), bare, base.left, left_cells);
  SesquiFunctor right = include_cells(g.target(), bare, base.right, right_cells);
  auto add = [&](TwoCellWord l, TwoCellWord r) {
    l = reduce(apex, l);
    r = reduce(apex, r);
    TwoCellRelation rel{l, r};
    if (l != r && std::find(apex.relations.begin(), apex.relations.end(), rel) == apex.relations.end()) {
      apex.relations.push_back(std::move(rel));
    }
  };
  for (const auto& r : b.relations) add(left.apply(r.lhs), left.apply(r.rhs));
  for (const auto& r : c.relations) add(right.apply(r.lhs), right.apply(r.rhs));
  for (CellId k : related) add(left.apply(f.cell_map()[k]), right.apply(g.cell_map()[k]));

  auto full = make_higher(std::move(apex));
  return HigherPushout{full, include_cells(f.target(), full, base.left, left_cells),
                       include_cells(g.target(), full, base.right, right_cells)};
}

SesquiFunctor copair(const SesquiFunctor& left, const SesquiFunctor& right,
                     const SesquiFunctor& to_left, const SesquiFunctor& to_right) {
  const HigherPtr& apex = left.target();
  Functor base = copair(left.base(), right.base(), to_left.base(), to_right.base());
  std::vector<TwoCellWord> cells;
  for (CellId k = 0; k < apex->cells.size(); ++k) {
    TwoCellWord target = generator_cell(*apex, k);
    const auto& lc = left.cell_map();
    const auto& rc = right.cell_map();
    if (auto it = std::find(lc.begin(), lc.end(), target); it != lc.end()) {
      cells.push_back(to_left.cell_map()[it - lc.begin()]);
    } else if (auto jt = std::find(rc.begin(), rc.end(), target); jt != rc.end()) {
      cells.push_back(to_right.cell_map()[jt - rc.begin()]);
    } else {
      throw Error(ErrorKind::InvalidInput,
                  "2-cell " + apex->cells[k].name + " is not the image of a single generator");
    }
  }
  return SesquiFunctor(apex, to_left.target(), std::move(base), std::move(cells));
}

Truth is_pushout(const SesquiFunctor& f, const SesquiFunctor& g, const SesquiFunctor& left,
                 const SesquiFunctor& right, std::string* witness) {
  std::string why;
  Truth square = equal(then(f, left), then(g, right), &why);
  if (square == Truth::No) {
    if (witness) *witness = "square does not commute at " + why;
    return Truth::No;
  }
  HigherPushout canon = pushout_sesqui(f, g);
  SesquiFunctor to_apex = copair(canon.left, canon.right, left, right);
  SesquiFunctor from_apex;
  try {
    from_apex = copair(left, right, canon.left, canon.right);
  } catch (const Error& e) {
    if (witness) *witness = e.what();
    return Truth::No;
  }
  bool bounded = false;
  for (const SesquiFunctor* h : {&to_apex, &from_apex}) {
    if (auto d = h->defect(&bounded)) {
      if (witness) *witness = "comparison is not a morphism: " + *d;
      return Truth::No;
    }
  }
  Truth there = equal(then(to_apex, from_apex), SesquiFunctor::identity(canon.apex), &why);
  if (there == Truth::No) {
    if (witness) *witness = "comparison is not invertible at " + why;
    return Truth::No;
  }
  Truth back = equal(then(from_apex, to_apex), SesquiFunctor::identity(left.target()), &why);
  if (back == Truth::No) {
    if (witness) *witness = "comparison is not invertible at " + why;
    return Truth::No;
  }
  if (bounded || square != Truth::Yes || there != Truth::Yes || back != Truth::Yes) return Truth::Unknown;
  return Truth::Yes;
}

SesquiFunctor indiscrete_lift(const Functor& f, const HigherPtr& source, const HigherPtr& target) {
  Functor base(source->base, target->base, f.object_map(), f.edge_map());
  std::vector<TwoCellWord> cells;
  for (const auto& cell : source->cells) {
    auto w = shortest_word(*target, base.apply(cell.src), base.apply(cell.tgt));
    if (!w) {
      throw Error(ErrorKind::InvalidInput, "no target 2-cell between the images of " + cell.name);
    }
    cells.push_back(std::move(*w));
  }
  return SesquiFunctor(source, target, std::move(base), std::move(cells));
}

Generation generates_2cells(const SesquiFunctor& f, std::size_t bound) {
  const HigherPresentation& t = *f.target();
  const Category& c = *t.base;
  Generation out;
  out.bounded = c.bounded();
  for (CellId k = 0; k < t.cells.size(); ++k) {
    const TwoCellWord goal = generator_cell(t, k);
    const VertexId a = goal.src.start;
    const VertexId b = goal.src.finish;

    // Whiskered images landing in hom(a, b), with inverses where available.
    std::vector<TwoCellWord> letters;
    for (CellId s = 0; s < f.source()->cells.size(); ++s) {
      const TwoCellWord& img = f.cell_map()[s];
      std::vector<TwoCellWord> forms{img};
      if (f.source()->cells[s].invertible) forms.push_back(inverse(t, img));
      for (const auto& w : forms) {
        for (ClassId l : c.hom(a, w.src.start)) {
          for (ClassId r : c.hom(w.src.finish, b)) {
            letters.push_back(whisker(t, c.representative(l), w, c.representative(r)));
          }
        }
      }
    }
    bool found = false;
    std::vector<TwoCellWord> layer{identity_cell(t, goal.src)};
    for (std::size_t len = 0; len <= bound && !found; ++len) {
      std::vector<TwoCellWord> next;
      for (const auto& w : layer) {
        if (c.equal(w.tgt, goal.tgt) == Truth::Yes) {
          auto verdict = twocell_equal(t, w, goal);
          if (verdict.equal()) {
            found = true;
            break;
          }
        }
        if (len == bound) continue;
        for (const auto& l : letters) {
          if (c.equal(w.tgt, l.src) == Truth::Yes) next.push_back(vertical(t, w, l));
        }
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      layer = std::move(next);
    }
    if (!found) {
      out.generated = false;
      out.bounded = out.bounded || !letters.empty();
      out.witness = t.cells[k].name;
      return out;
    }
  }
  return out;
}

}  // namespace cocat
