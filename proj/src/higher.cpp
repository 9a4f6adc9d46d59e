#include "cocat/higher.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "cocat/error.hpp"

namespace cocat {

std::string to_string(Flavor f) { return f == Flavor::Sesqui ? "sesqui" : "2cat"; }

Flavor flavor_from_string(const std::string& s) {
  if (s == "sesqui") return Flavor::Sesqui;
  if (s == "2cat") return Flavor::TwoCategory;
  throw Error(ErrorKind::InvalidInput, "unknown flavor '" + s + "'");
}

std::string to_string(CellVerdict v) {
  switch (v) {
    case CellVerdict::Equal: return "equal";
    case CellVerdict::DistinctByNormalForm: return "distinct-by-normal-form";
    case CellVerdict::DistinctByExhaustion: return "distinct-by-exhaustion";
    case CellVerdict::Unknown: return "unknown";
  }
  return "unknown";
}

std::optional<CellId> HigherPresentation::find_cell(const std::string& name) const {
  for (CellId k = 0; k < cells.size(); ++k) {
    if (cells[k].name == name) return k;
  }
  return std::nullopt;
}

CellId HigherPresentation::cell_id(const std::string& name) const {
  auto k = find_cell(name);
  if (!k) throw Error(ErrorKind::InvalidInput, "unknown 2-cell '" + name + "'");
  return *k;
}

bool HigherPresentation::all_invertible() const {
  return std::all_of(cells.begin(), cells.end(), [](const CellGenerator& c) { return c.invertible; });
}

bool HigherPresentation::none_invertible() const {
  return std::none_of(cells.begin(), cells.end(), [](const CellGenerator& c) { return c.invertible; });
}

void HigherPresentation::validate() const {
  std::set<std::string> names;
  for (const auto& c : cells) {
    if (!names.insert(c.name).second) {
      throw Error(ErrorKind::InvalidInput, "duplicate 2-cell label '" + c.name + "'");
    }
    if (!cocat::well_formed(graph(), c.src) || !cocat::well_formed(graph(), c.tgt) ||
        c.src.start != c.tgt.start || c.src.finish != c.tgt.finish) {
      throw Error(ErrorKind::InvalidInput, "2-cell '" + c.name + "' has non-parallel boundary");
    }
  }
  for (const auto& r : relations) {
    if (!cocat::well_formed(*this, r.lhs) || !cocat::well_formed(*this, r.rhs)) {
      throw Error(ErrorKind::InvalidInput, "ill-formed 2-cell relation");
    }
    if (base->equal(r.lhs.src, r.rhs.src) == Truth::No || base->equal(r.lhs.tgt, r.rhs.tgt) == Truth::No) {
      throw Error(ErrorKind::InvalidInput, "2-cell relation between non-parallel words");
    }
  }
}

HigherPtr make_higher(HigherPresentation p) {
  p.validate();
  return std::make_shared<const HigherPresentation>(std::move(p));
}

HigherPtr locally_discrete(const CategoryPtr& base, Flavor flavor) {
  return make_higher(HigherPresentation{base, {}, {}, flavor});
}

Path step_source(const HigherPresentation& hp, const Whiskered& s) {
  const auto& c = hp.cells.at(s.cell);
  return concat(concat(s.pre, s.inverse ? c.tgt : c.src), s.post);
}

Path step_target(const HigherPresentation& hp, const Whiskered& s) {
  const auto& c = hp.cells.at(s.cell);
  return concat(concat(s.pre, s.inverse ? c.src : c.tgt), s.post);
}

TwoCellWord reduce(const HigherPresentation& hp, const TwoCellWord& w) {
  const Category& c = *hp.base;
  TwoCellWord out{c.canonical(w.src), c.canonical(w.tgt), {}};
  for (Whiskered s : w.steps) {
    s.pre = c.canonical(s.pre);
    s.post = c.canonical(s.post);
    if (!out.steps.empty()) {
      const auto& b = out.steps.back();
      if (b.cell == s.cell && b.inverse != s.inverse && b.pre == s.pre && b.post == s.post) {
        out.steps.pop_back();
        continue;
      }
    }
    out.steps.push_back(std::move(s));
  }
  return out;
}

TwoCellWord identity_cell(const HigherPresentation& hp, const Path& f) {
  return reduce(hp, TwoCellWord{f, f, {}});
}

TwoCellWord generator_cell(const HigherPresentation& hp, CellId cell, bool inverse) {
  const auto& g = hp.cells.at(cell);
  if (inverse && !g.invertible) {
    throw Error(ErrorKind::InvalidInput, "2-cell '" + g.name + "' is not invertible");
  }
  Whiskered s{Path::identity(g.src.start), cell, inverse, Path::identity(g.src.finish)};
  return reduce(hp, TwoCellWord{inverse ? g.tgt : g.src, inverse ? g.src : g.tgt, {s}});
}

TwoCellWord vertical(const HigherPresentation& hp, const TwoCellWord& first, const TwoCellWord& second) {
  if (hp.base->equal(first.tgt, second.src) == Truth::No) {
    throw Error(ErrorKind::BoundaryMismatch, "2-cells are not vertically composable");
  }
  TwoCellWord out{first.src, second.tgt, first.steps};
  out.steps.insert(out.steps.end(), second.steps.begin(), second.steps.end());
  return reduce(hp, out);
}

TwoCellWord whisker(const HigherPresentation& hp, const Path& left, const TwoCellWord& w,
                    const Path& right) {
  TwoCellWord out{concat(concat(left, w.src), right), concat(concat(left, w.tgt), right), {}};
  for (const auto& s : w.steps) {
    out.steps.push_back(Whiskered{concat(left, s.pre), s.cell, s.inverse, concat(s.post, right)});
  }
  return reduce(hp, out);
}

TwoCellWord inverse(const HigherPresentation& hp, const TwoCellWord& w) {
  TwoCellWord out{w.tgt, w.src, {}};
  for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it) {
    if (!hp.cells.at(it->cell).invertible) {
      throw Error(ErrorKind::InvalidInput, "2-cell '" + hp.cells[it->cell].name + "' is not invertible");
    }
    Whiskered s = *it;
    s.inverse = !s.inverse;
    out.steps.push_back(std::move(s));
  }
  return reduce(hp, out);
}

bool well_formed(const HigherPresentation& hp, const TwoCellWord& w) {
  const Graph& g = hp.graph();
  if (!well_formed(g, w.src) || !well_formed(g, w.tgt)) return false;
  Path at = w.src;
  for (const auto& s : w.steps) {
    if (s.cell >= hp.cells.size()) return false;
    const auto& c = hp.cells[s.cell];
    if (s.inverse && !c.invertible) return false;
    if (!well_formed(g, s.pre) || !well_formed(g, s.post)) return false;
    if (s.pre.finish != c.src.start || s.post.start != c.src.finish) return false;
    if (hp.base->equal(at, step_source(hp, s)) == Truth::No) return false;
    at = step_target(hp, s);
  }
  return hp.base->equal(at, w.tgt) != Truth::No;
}

std::string to_string(const HigherPresentation& hp, const TwoCellWord& w) {
  if (w.steps.empty()) return "1[" + to_string(hp.graph(), w.src) + "]";
  std::string out;
  for (std::size_t k = 0; k < w.steps.size(); ++k) {
    const auto& s = w.steps[k];
    if (k) out += " | ";
    if (!s.pre.empty()) out += to_string(hp.graph(), s.pre) + " * ";
    out += hp.cells[s.cell].name;
    if (s.inverse) out += "^-1";
    if (!s.post.empty()) out += " * " + to_string(hp.graph(), s.post);
  }
  return out;
}

namespace {

TwoCellWord from_steps(const HigherPresentation& hp, std::vector<Whiskered> steps) {
  TwoCellWord w{step_source(hp, steps.front()), step_target(hp, steps.back()), std::move(steps)};
  return w;
}

struct Rule {
  TwoCellWord lhs;
  TwoCellWord rhs;
  std::string name;
};

// Directed rewriting rules derived from the relations.  Relations among
// invertible generators also contribute every rotation and split of their
// relator, which stands in for inserting generator/inverse pairs.
std::vector<Rule> rules_of(const HigherPresentation& hp) {
  std::vector<Rule> out;
  std::set<std::pair<TwoCellWord, TwoCellWord>> seen;
  auto add = [&](const TwoCellWord& l, const TwoCellWord& r, const std::string& name) {
    if (l.steps.empty() || l == r) return;
    if (seen.emplace(l, r).second) out.push_back({l, r, name});
  };
  for (std::size_t k = 0; k < hp.relations.size(); ++k) {
    const auto& rel = hp.relations[k];
    const std::string name = "relation " + std::to_string(k);
    add(rel.lhs, rel.rhs, name);
    add(rel.rhs, rel.lhs, name + " reversed");
    auto invertible = [&](const TwoCellWord& w) {
      return std::all_of(w.steps.begin(), w.steps.end(),
                         [&](const Whiskered& s) { return hp.cells[s.cell].invertible; });
    };
    if (!invertible(rel.lhs) || !invertible(rel.rhs)) continue;
    TwoCellWord relator{rel.lhs.src, rel.lhs.src, rel.lhs.steps};
    for (const auto& s : inverse(hp, rel.rhs).steps) relator.steps.push_back(s);
    for (const TwoCellWord& loop : {relator, inverse(hp, relator)}) {
      const std::size_t n = loop.steps.size();
      for (std::size_t t = 0; t < n; ++t) {
        std::vector<Whiskered> rot(loop.steps.begin() + t, loop.steps.end());
        rot.insert(rot.end(), loop.steps.begin(), loop.steps.begin() + t);
        for (std::size_t cut = 1; cut <= n; ++cut) {
          TwoCellWord a = from_steps(hp, {rot.begin(), rot.begin() + cut});
          TwoCellWord b = cut < n ? inverse(hp, from_steps(hp, {rot.begin() + cut, rot.end()}))
                                  : TwoCellWord{a.src, a.src, {}};
          add(a, b, name + " rotated");
        }
      }
    }
  }
  return out;
}

bool has_prefix(const Path& p, const Path& prefix) {
  return p.start == prefix.start && p.edges.size() >= prefix.edges.size() &&
         std::equal(prefix.edges.begin(), prefix.edges.end(), p.edges.begin());
}

bool has_suffix(const Path& p, const Path& suffix) {
  return p.finish == suffix.finish && p.edges.size() >= suffix.edges.size() &&
         std::equal(suffix.edges.rbegin(), suffix.edges.rend(), p.edges.rbegin());
}

struct Move {
  TwoCellWord word;
  std::string name;
};

void rule_moves(const HigherPresentation& hp, const std::vector<Rule>& rules, const TwoCellWord& w,
                std::vector<Move>& out) {
  const Category& c = *hp.base;
  const VertexId a = w.src.start;
  const VertexId b = w.src.finish;
  for (const auto& rule : rules) {
    const auto& lhs = rule.lhs.steps;
    if (lhs.size() > w.steps.size()) continue;
    const std::vector<ClassId> lefts = c.hom(a, rule.lhs.src.start);
    const std::vector<ClassId> rights = c.hom(rule.lhs.src.finish, b);
    for (std::size_t i = 0; i + lhs.size() <= w.steps.size(); ++i) {
      if (w.steps[i].cell != lhs[0].cell || w.steps[i].inverse != lhs[0].inverse) continue;
      for (ClassId lk : lefts) {
        const Path& l = c.representative(lk);
        if (c.canonical(concat(l, lhs[0].pre)) != w.steps[i].pre) continue;
        for (ClassId rk : rights) {
          const Path& r = c.representative(rk);
          bool match = true;
          for (std::size_t j = 0; j < lhs.size() && match; ++j) {
            const auto& s = w.steps[i + j];
            match = s.cell == lhs[j].cell && s.inverse == lhs[j].inverse &&
                    c.canonical(concat(l, lhs[j].pre)) == s.pre &&
                    c.canonical(concat(lhs[j].post, r)) == s.post;
          }
          if (!match) continue;
          TwoCellWord replaced = whisker(hp, l, rule.rhs, r);
          TwoCellWord next{w.src, w.tgt, {w.steps.begin(), w.steps.begin() + i}};
          next.steps.insert(next.steps.end(), replaced.steps.begin(), replaced.steps.end());
          next.steps.insert(next.steps.end(), w.steps.begin() + i + lhs.size(), w.steps.end());
          out.push_back({reduce(hp, next), rule.name + " at step " + std::to_string(i)});
        }
      }
    }
  }
}

// Swaps of adjacent steps acting on disjoint parts of a literal path.  Only
// meaningful over a free base, where whiskers are literal paths.
void interchange_moves(const HigherPresentation& hp, const TwoCellWord& w, std::vector<Move>& out) {
  for (std::size_t i = 0; i + 1 < w.steps.size(); ++i) {
    const Whiskered& s1 = w.steps[i];
    const Whiskered& s2 = w.steps[i + 1];
    const auto& c1 = hp.cells[s1.cell];
    const auto& c2 = hp.cells[s2.cell];
    const Path& a_src = s1.inverse ? c1.tgt : c1.src;
    const Path& a_tgt = s1.inverse ? c1.src : c1.tgt;
    const Path& b_src = s2.inverse ? c2.tgt : c2.src;
    const Path& b_tgt = s2.inverse ? c2.src : c2.tgt;
    auto emit = [&](Whiskered first, Whiskered second) {
      TwoCellWord next = w;
      next.steps[i] = std::move(first);
      next.steps[i + 1] = std::move(second);
      out.push_back({reduce(hp, next), "interchange at step " + std::to_string(i)});
    };
    // s1 acts left of s2.
    if (has_prefix(s1.post, b_src)) {
      Path r = subpath(hp.graph(), s1.post, b_src.length(), s1.post.length());
      if (s2.pre == concat(s1.pre, a_tgt) && s2.post == r) {
        emit(Whiskered{concat(s1.pre, a_src), s2.cell, s2.inverse, r},
             Whiskered{s1.pre, s1.cell, s1.inverse, concat(b_tgt, r)});
      }
    }
    // s1 acts right of s2.
    if (has_suffix(s1.pre, b_src)) {
      Path l = subpath(hp.graph(), s1.pre, 0, s1.pre.length() - b_src.length());
      if (s2.pre == l && s2.post == concat(a_tgt, s1.post)) {
        emit(Whiskered{l, s2.cell, s2.inverse, concat(a_src, s1.post)},
             Whiskered{concat(l, b_tgt), s1.cell, s1.inverse, s1.post});
      }
    }
  }
}

}  // namespace

CellEquality twocell_equal(const HigherPresentation& hp, const TwoCellWord& u, const TwoCellWord& v,
                           std::size_t max_states) {
  TwoCellWord from = reduce(hp, u);
  TwoCellWord to = reduce(hp, v);
  if (hp.base->equal(from.src, to.src) == Truth::No || hp.base->equal(from.tgt, to.tgt) == Truth::No) {
    throw Error(ErrorKind::BoundaryMismatch, "2-cell words are not parallel");
  }
  CellEquality out;
  if (from == to) {
    out.verdict = CellVerdict::Equal;
    out.chain = {from};
    return out;
  }
  const bool interchange = hp.flavor == Flavor::TwoCategory;
  const bool exact_base = !hp.base->bounded();
  if (hp.relations.empty() && !interchange && exact_base) {
    out.verdict = CellVerdict::DistinctByNormalForm;
    return out;
  }

  const auto rules = rules_of(hp);
  const bool free_base = hp.base->presentation().is_free();
  std::map<TwoCellWord, std::pair<TwoCellWord, std::string>> parent;
  std::deque<TwoCellWord> queue{from};
  parent.emplace(from, std::make_pair(from, std::string()));
  bool truncated = false;
  std::vector<Move> moves;
  while (!queue.empty()) {
    TwoCellWord w = std::move(queue.front());
    queue.pop_front();
    moves.clear();
    rule_moves(hp, rules, w, moves);
    if (interchange && free_base) interchange_moves(hp, w, moves);
    for (auto& m : moves) {
      if (parent.contains(m.word)) continue;
      if (parent.size() >= max_states) {
        truncated = true;
        break;
      }
      parent.emplace(m.word, std::make_pair(w, m.name));
      if (m.word == to) {
        for (TwoCellWord at = to; at != from; at = parent.at(at).first) {
          out.chain.push_back(at);
          out.moves.push_back(parent.at(at).second);
        }
        out.chain.push_back(from);
        std::reverse(out.chain.begin(), out.chain.end());
        std::reverse(out.moves.begin(), out.moves.end());
        out.verdict = CellVerdict::Equal;
        return out;
      }
      queue.push_back(std::move(m.word));
    }
    if (truncated) break;
  }
  const bool complete_moves =
      hp.none_invertible() && exact_base && (!interchange || free_base) &&
      std::none_of(hp.relations.begin(), hp.relations.end(), [](const TwoCellRelation& r) {
        return r.lhs.steps.empty() || r.rhs.steps.empty();
      });
  out.verdict = !truncated && complete_moves ? CellVerdict::DistinctByExhaustion : CellVerdict::Unknown;
  return out;
}

HigherPtr free_sesquicategory(const DerivationScheme& d, Flavor flavor) {
  return make_higher(HigherPresentation{d.base, d.cells, {}, flavor});
}

std::vector<Instance> whiskered_instances(const HigherPresentation& hp, VertexId a, VertexId b) {
  const Category& c = *hp.base;
  std::vector<Instance> out;
  for (CellId g = 0; g < hp.cells.size(); ++g) {
    const auto& cell = hp.cells[g];
    for (ClassId lk : c.hom(a, cell.src.start)) {
      for (ClassId rk : c.hom(cell.src.finish, b)) {
        const Path& l = c.representative(lk);
        const Path& r = c.representative(rk);
        auto s = c.class_of(concat(concat(l, cell.src), r));
        auto t = c.class_of(concat(concat(l, cell.tgt), r));
        if (s && t) out.push_back({Whiskered{l, g, false, r}, *s, *t});
      }
    }
  }
  return out;
}

namespace {

// Breadth-first search over the classes of one hom along whiskered
// instances; returns, for each reached class, the word from `root`.
std::map<ClassId, TwoCellWord> instance_tree(const HigherPresentation& hp, ClassId root,
                                             const std::vector<Instance>& instances,
                                             std::vector<bool>* used = nullptr) {
  const Category& c = *hp.base;
  std::map<ClassId, TwoCellWord> word;
  const Path& start = c.representative(root);
  word.emplace(root, TwoCellWord{start, start, {}});
  std::deque<ClassId> queue{root};
  while (!queue.empty()) {
    ClassId x = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < instances.size(); ++k) {
      const auto& in = instances[k];
      for (bool backwards : {false, true}) {
        if (backwards && !hp.cells[in.step.cell].invertible) continue;
        ClassId from = backwards ? in.tgt : in.src;
        ClassId to = backwards ? in.src : in.tgt;
        if (from != x || word.contains(to)) continue;
        Whiskered s = in.step;
        s.inverse = backwards;
        TwoCellWord w = word.at(x);
        w.steps.push_back(s);
        w.tgt = c.representative(to);
        word.emplace(to, std::move(w));
        if (used) (*used)[k] = true;
        queue.push_back(to);
      }
    }
  }
  return word;
}

}  // namespace

HigherPtr locally_indiscrete(const CategoryPtr& base, Flavor flavor) {
  HigherPresentation hp{base, {}, {}, flavor};
  const Graph& g = base->graph();
  const std::size_t n = base->object_count();
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = 0; b < n; ++b) {
      auto hom = base->hom(a, b);
      for (std::size_t i = 0; i < hom.size(); ++i) {
        for (std::size_t j = i + 1; j < hom.size(); ++j) {
          const Path& s = base->representative(hom[i]);
          const Path& t = base->representative(hom[j]);
          hp.cells.push_back({to_string(g, s) + "=>" + to_string(g, t), s, t, true});
        }
      }
    }
  }
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = 0; b < n; ++b) {
      auto hom = base->hom(a, b);
      if (hom.empty()) continue;
      auto instances = whiskered_instances(hp, a, b);
      std::vector<bool> tree(instances.size(), false);
      auto word = instance_tree(hp, hom.front(), instances, &tree);
      for (std::size_t k = 0; k < instances.size(); ++k) {
        if (tree[k]) continue;
        const auto& in = instances[k];
        TwoCellWord edge = reduce(hp, TwoCellWord{base->representative(in.src),
                                                  base->representative(in.tgt), {in.step}});
        TwoCellWord path = vertical(hp, inverse(hp, word.at(in.src)), word.at(in.tgt));
        if (edge != path) hp.relations.push_back({edge, path});
      }
    }
  }
  return make_higher(std::move(hp));
}

std::optional<TwoCellWord> shortest_word(const HigherPresentation& hp, const Path& src,
                                         const Path& tgt) {
  auto s = hp.base->class_of(src);
  auto t = hp.base->class_of(tgt);
  if (!s || !t || src.start != tgt.start || src.finish != tgt.finish) return std::nullopt;
  auto word = instance_tree(hp, *s, whiskered_instances(hp, src.start, src.finish));
  auto it = word.find(*t);
  if (it == word.end()) return std::nullopt;
  return reduce(hp, it->second);
}

}  // namespace cocat
