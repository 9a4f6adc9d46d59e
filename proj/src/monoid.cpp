#include "cocat/monoid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "cocat/error.hpp"

namespace cocat {

void FinMonoid::validate() const {
  const std::size_t n = size();
  if (n == 0 || unit >= n) throw Error(ErrorKind::InvalidInput, "a monoid needs a unit among its elements");
  if (table.size() != n) throw Error(ErrorKind::InvalidInput, "multiplication table has the wrong number of rows");
  for (const auto& row : table) {
    if (row.size() != n) throw Error(ErrorKind::InvalidInput, "multiplication table has a short row");
    for (auto v : row) {
      if (v >= n) throw Error(ErrorKind::InvalidInput, "multiplication table leaves the carrier");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (mul(unit, a) != a || mul(a, unit) != a) throw Error(ErrorKind::InvalidInput, "unit law fails at " + elements[a]);
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
          throw Error(ErrorKind::InvalidInput,
                      "associativity fails at (" + elements[a] + ", " + elements[b] + ", " + elements[c] + ")");
        }
      }
    }
  }
}

namespace {

FinMonoid from_rule(std::vector<std::string> names, std::size_t unit,
                    const std::function<std::size_t(std::size_t, std::size_t)>& rule) {
  FinMonoid m{std::move(names), unit, {}};
  for (std::size_t a = 0; a < m.size(); ++a) {
    m.table.emplace_back();
    for (std::size_t b = 0; b < m.size(); ++b) m.table.back().push_back(rule(a, b));
  }
  return m;
}

}  // namespace

FinMonoid trivial_monoid() { return from_rule({"e"}, 0, [](std::size_t, std::size_t) { return 0; }); }

FinMonoid cyclic_monoid(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidInput, "cyclic monoid of order 0");
  std::vector<std::string> names{"e"};
  for (std::size_t k = 1; k < n; ++k) names.push_back(k == 1 ? "g" : "g" + std::to_string(k));
  return from_rule(std::move(names), 0, [n](std::size_t a, std::size_t b) { return (a + b) % n; });
}

FinMonoid klein_monoid() {
  return from_rule({"e", "a", "b", "ab"}, 0, [](std::size_t a, std::size_t b) { return a ^ b; });
}

FinMonoid idempotent_monoid() {
  return from_rule({"e", "x"}, 0, [](std::size_t a, std::size_t b) { return a | b; });
}

FinMonoid truncated_free_monoid(std::size_t n) {
  std::vector<std::string> names{"e"};
  for (std::size_t k = 1; k <= n; ++k) names.push_back(k == 1 ? "x" : "x" + std::to_string(k));
  return from_rule(std::move(names), 0, [n](std::size_t a, std::size_t b) { return std::min(a + b, n); });
}

std::vector<std::pair<std::string, FinMonoid>> monoid_catalog() {
  return {{"trivial", trivial_monoid()},   {"Z2", cyclic_monoid(2)},         {"Z3", cyclic_monoid(3)},
          {"Z4", cyclic_monoid(4)},        {"Z2xZ2", klein_monoid()},         {"idempotent", idempotent_monoid()},
          {"truncated3", truncated_free_monoid(3)}};
}

Word normal_form(const FinMonoid& a, const Word& w) {
  Word out;
  for (const auto& l : w) {
    if (l.element == a.unit) continue;
    if (!out.empty() && out.back().branch == l.branch) {
      auto merged = a.mul(out.back().element, l.element);
      if (merged == a.unit) {
        out.pop_back();
      } else {
        out.back().element = merged;
      }
    } else {
      out.push_back(l);
    }
  }
  return out;
}

bool is_normal(const FinMonoid& a, const Word& w) {
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k].element == a.unit || (k > 0 && w[k - 1].branch == w[k].branch)) return false;
  }
  return true;
}

CoproductWord normal_form(const CoproductWord& w) {
  CoproductWord out{w.bases, {}};
  for (const auto& l : w.letters) {
    if (l.branch >= w.bases.size()) throw Error(ErrorKind::InvalidInput, "letter in a branch without a monoid");
    const FinMonoid& m = *w.bases[l.branch];
    if (l.element == m.unit) continue;
    auto& word = out.letters;
    if (!word.empty() && word.back().branch == l.branch) {
      auto merged = m.mul(word.back().element, l.element);
      if (merged == m.unit) {
        word.pop_back();
      } else {
        word.back().element = merged;
      }
    } else {
      word.push_back(l);
    }
  }
  return out;
}

std::size_t eval_retraction(const FinMonoid& a, const Word& w, std::size_t keep) {
  std::size_t acc = a.unit;
  for (const auto& l : w) {
    if (l.branch == keep) acc = a.mul(acc, l.element);
  }
  return acc;
}

std::size_t eval_retraction(const CoproductWord& w, std::size_t keep) {
  if (w.bases.empty()) throw Error(ErrorKind::InvalidInput, "a coproduct word needs at least one branch");
  for (const auto& b : w.bases) {
    if (!(b == w.bases.front() || *b == *w.bases.front())) {
      throw Error(ErrorKind::MixedMonoids, "retraction needs every branch to carry the same monoid");
    }
  }
  return eval_retraction(*w.bases.front(), w.letters, keep);
}

std::string to_string(const FinMonoid& a, const Word& w) {
  if (w.empty()) return "()";
  std::string out;
  for (const auto& l : w) out += "(" + std::to_string(l.branch) + "," + a.elements[l.element] + ")";
  return out;
}

std::string to_string(ComultiplicationVerdict v) {
  switch (v) {
    case ComultiplicationVerdict::UniqueTrivial: return "unique-trivial";
    case ComultiplicationVerdict::None: return "none";
    case ComultiplicationVerdict::Found: return "found";
  }
  return "none";
}

std::string to_string(EndoVerdict v) { return v == EndoVerdict::OnlyTrivial ? "only-trivial" : "found"; }

namespace {

// Every normal word over `branches` copies of `a` with at most max_len letters.
std::vector<Word> normal_words(const FinMonoid& a, std::size_t branches, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::size_t from = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t to = out.size();
    for (std::size_t k = from; k < to; ++k) {
      for (std::size_t b = 0; b < branches; ++b) {
        if (!out[k].empty() && out[k].back().branch == b) continue;
        for (std::size_t x = 0; x < a.size(); ++x) {
          if (x == a.unit) continue;
          Word w = out[k];
          w.push_back({b, x});
          out.push_back(std::move(w));
        }
      }
    }
    from = to;
  }
  return out;
}

void guard_length(std::size_t max_len) {
  enforce_guard(max_len <= 8, ErrorKind::SearchSpaceTooLarge, "word length bound above 8");
}

// Both counits send the word to x.
bool counits_hold(const FinMonoid& a, const Word& w, std::size_t x) {
  return eval_retraction(a, w, 0) == x && eval_retraction(a, w, 1) == x;
}

}  // namespace

std::vector<Word> counit_candidates(const FinMonoid& a, std::size_t element, std::size_t max_len) {
  guard_length(max_len);
  std::vector<Word> out;
  for (auto& w : normal_words(a, 2, max_len)) {
    if (counits_hold(a, w, element)) out.push_back(std::move(w));
  }
  return out;
}

Word interchange_side(const FinMonoid& a, const Word& outer, bool outer_is_horizontal,
                      const std::vector<Word>& inner_images) {
  Word out;
  for (const auto& l : outer) {
    for (const auto& inner : inner_images.at(l.element)) {
      std::size_t column = outer_is_horizontal ? l.branch : inner.branch;
      std::size_t row = outer_is_horizontal ? inner.branch : l.branch;
      out.push_back({2 * column + row, inner.element});
    }
  }
  return normal_form(a, out);
}

namespace {

// One side of the interchange equation at an element, as far as it is known:
// the outer word's blocks are juxtaposed until one whose inner image is not
// yet fixed; the alternatives for that block come from its domain.
struct SideOptions {
  std::vector<Word> words;
  bool complete = false;  // no unknown block: `words` holds the single value
  bool exact = true;      // prefixes are stable under later blocks
};

class Obstruction {
 public:
  Obstruction(const FinMonoid& a, std::size_t max_len) : a_(a) {
    const auto all = normal_words(a, 2, max_len);
    stats_.words = all.size();
    domain_.resize(a.size());
    for (const auto& w : all) {
      for (std::size_t x = 0; x < a.size(); ++x) {
        if (x == a.unit || !counits_hold(a, w, x)) continue;
        domain_[x].push_back(w);
        ++stats_.candidates;
        if (w.size() < 2) ++stats_.short_candidates;
        if (w.empty()) nonempty_images_ = false;
      }
    }
  }

  ComultiplicationResult run(bool parallel) {
    ComultiplicationResult r;
    std::vector<std::size_t> nonunit;
    for (std::size_t x = 0; x < a_.size(); ++x) {
      if (x != a_.unit) nonunit.push_back(x);
    }
    if (nonunit.empty()) {
      r.verdict = ComultiplicationVerdict::UniqueTrivial;
      r.witness = "the unit is sent to the empty word";
      r.stats = stats_;
      return r;
    }
    for (auto x : nonunit) {
      if (domain_[x].empty()) {
        r.verdict = ComultiplicationVerdict::None;
        r.witness = "no word passes both counits at " + a_.elements[x];
        r.stats = stats_;
        return r;
      }
    }
    // Pairs (horizontal, vertical) at each element that can still satisfy interchange.
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pairs(a_.size());
    for (auto x : nonunit) {
      const std::size_t n = domain_[x].size();
      const auto total = static_cast<long long>(n * n);
      std::vector<char> keep(n * n, 0);
      if (parallel) {
#pragma omp parallel for schedule(dynamic, 64)
        for (long long k = 0; k < total; ++k) keep[k] = local_consistent(x, k / n, k % n);
      } else {
        for (long long k = 0; k < total; ++k) keep[k] = local_consistent(x, k / n, k % n);
      }
      stats_.pairs += n * n;
      for (std::size_t k = 0; k < n * n; ++k) {
        if (keep[k]) pairs[x].push_back({k / n, k % n});
      }
      stats_.consistent_pairs += pairs[x].size();
      if (pairs[x].empty()) {
        r.verdict = ComultiplicationVerdict::None;
        r.witness = obstruction_witness(x);
        r.stats = stats_;
        return r;
      }
    }
    horizontal_.assign(a_.size(), std::nullopt);
    vertical_.assign(a_.size(), std::nullopt);
    if (backtrack(nonunit, pairs, 0)) {
      r.verdict = ComultiplicationVerdict::Found;
      for (auto x : nonunit) {
        r.witness += a_.elements[x] + " -> h " + to_string(a_, domain_[x][*horizontal_[x]]) + ", v " +
                     to_string(a_, domain_[x][*vertical_[x]]) + "; ";
      }
    } else {
      r.verdict = ComultiplicationVerdict::None;
      r.witness = "no assignment satisfies interchange at every element";
    }
    r.stats = stats_;
    return r;
  }

 private:
  // Image of y under the horizontal or vertical map, given a tentative pair at x.
  const Word* fixed_image(std::size_t y, bool horizontal, std::size_t x, std::size_t h, std::size_t v) const {
    if (y == x) return &domain_[x][horizontal ? h : v];
    const auto& slot = horizontal ? horizontal_ : vertical_;
    if (y < slot.size() && slot[y]) return &domain_[y][*slot[y]];
    return nullptr;
  }

  // The composite through the outer comultiplication then the inner one.
  SideOptions side(const Word& outer, bool outer_is_horizontal, std::size_t x, std::size_t h, std::size_t v) const {
    SideOptions s;
    Word prefix;
    auto place = [&](const Letter& l, const Word& inner, Word& into) {
      for (const auto& i : inner) {
        std::size_t column = outer_is_horizontal ? l.branch : i.branch;
        std::size_t row = outer_is_horizontal ? i.branch : l.branch;
        into.push_back({2 * column + row, i.element});
      }
    };
    for (const auto& l : outer) {
      const Word* inner = fixed_image(l.element, !outer_is_horizontal, x, h, v);
      if (!inner) {
        // Blocks alternate in the outer branch, so a normal prefix followed by
        // a nonempty normal block of another branch stays as it is.
        s.exact = nonempty_images_ && is_normal(a_, outer) && is_normal(a_, prefix);
        for (const auto& alt : domain_[l.element]) {
          Word w = prefix;
          place(l, alt, w);
          s.exact = s.exact && !alt.empty() && is_normal(a_, w);
          s.words.push_back(std::move(w));
        }
        return s;
      }
      place(l, *inner, prefix);
    }
    s.complete = true;
    s.words.push_back(normal_form(a_, prefix));
    return s;
  }

  static bool agree_on_common_prefix(const Word& u, const Word& w) {
    const std::size_t k = std::min(u.size(), w.size());
    return std::equal(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(k), w.begin());
  }

  // Whether some pair of alternatives can still be equal: equal when both
  // sides are complete, otherwise agreeing on their common prefix.
  static bool compatible(const SideOptions& left, const SideOptions& right) {
    if (!left.exact || !right.exact) return true;
    const bool both = left.complete && right.complete;
    std::map<std::optional<Letter>, std::vector<const Word*>> by_head;
    for (const auto& w : right.words) by_head[w.empty() ? std::nullopt : std::optional<Letter>(w.front())].push_back(&w);
    const bool right_has_empty = by_head.count(std::nullopt) > 0;
    for (const auto& u : left.words) {
      if (u.empty()) {
        if (!both || right_has_empty) return true;
        continue;
      }
      if (!both && right_has_empty) return true;
      auto it = by_head.find(u.front());
      if (it == by_head.end()) continue;
      for (const Word* w : it->second) {
        if (both ? u == *w : agree_on_common_prefix(u, *w)) return true;
      }
    }
    return false;
  }

  bool local_consistent(std::size_t x, std::size_t h, std::size_t v) const {
    auto left = side(domain_[x][h], true, x, h, v);
    auto right = side(domain_[x][v], false, x, h, v);
    return compatible(left, right);
  }

  std::string obstruction_witness(std::size_t x) const {
    const Word& h = domain_[x].front();
    const Word& v = domain_[x].front();
    std::vector<Word> vert(a_.size()), horiz(a_.size());
    for (std::size_t y = 0; y < a_.size(); ++y) {
      if (y == a_.unit) continue;
      vert[y] = domain_[y].front();
      horiz[y] = domain_[y].front();
    }
    vert[x] = v;
    horiz[x] = h;
    return "at " + a_.elements[x] + ": every counit-preserving pair fails interchange, e.g. m_h = " + to_string(a_, h) +
           " gives " + to_string(a_, interchange_side(a_, h, true, vert)) + " against " +
           to_string(a_, interchange_side(a_, v, false, horiz));
  }

  bool all_interchange_holds(const std::vector<std::size_t>& nonunit) const {
    for (auto x : nonunit) {
      auto left = side(domain_[x][*horizontal_[x]], true, x, *horizontal_[x], *vertical_[x]);
      auto right = side(domain_[x][*vertical_[x]], false, x, *horizontal_[x], *vertical_[x]);
      if (left.words.front() != right.words.front()) return false;
    }
    return true;
  }

  bool backtrack(const std::vector<std::size_t>& nonunit,
                 const std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& pairs, std::size_t depth) {
    if (depth == nonunit.size()) return all_interchange_holds(nonunit);
    const auto x = nonunit[depth];
    for (const auto& [h, v] : pairs[x]) {
      horizontal_[x] = h;
      vertical_[x] = v;
      bool ok = true;
      for (std::size_t k = 0; k <= depth && ok; ++k) {
        const auto y = nonunit[k];
        ok = compatible(side(domain_[y][*horizontal_[y]], true, y, *horizontal_[y], *vertical_[y]),
                        side(domain_[y][*vertical_[y]], false, y, *horizontal_[y], *vertical_[y]));
      }
      if (ok && backtrack(nonunit, pairs, depth + 1)) return true;
    }
    horizontal_[x].reset();
    vertical_[x].reset();
    return false;
  }

  const FinMonoid& a_;
  std::vector<std::vector<Word>> domain_;
  std::vector<std::optional<std::size_t>> horizontal_, vertical_;
  ObstructionStats stats_;
  bool nonempty_images_ = true;
};

}  // namespace

ComultiplicationResult search_comultiplication(const FinMonoid& a, std::size_t max_len, bool parallel) {
  guard_length(max_len);
  a.validate();
  return Obstruction(a, max_len).run(parallel);
}

EndoResult search_endo_2cell(const FinMonoid& m, std::size_t max_len) {
  guard_length(max_len);
  m.validate();
  EndoResult r;
  // Endo 2-cells of the path through (1,0) land on the right square of 3x2
  // (branch 1), those of the path through (0,1) on the left one (branch 0).
  const auto words = normal_words(m, 2, max_len);
  r.stats.words = words.size();
  for (std::size_t diagonal = 0; diagonal < 2; ++diagonal) {
    const std::size_t branch = diagonal == 0 ? 1 : 0;
    for (const auto& w : words) {
      bool endo = std::all_of(w.begin(), w.end(), [&](const Letter& l) { return l.branch == branch; });
      if (!endo) continue;
      for (std::size_t theta = 0; theta < m.size(); ++theta) {
        if (theta == m.unit || !counits_hold(m, w, theta)) continue;
        ++r.stats.candidates;
        if (r.verdict == EndoVerdict::OnlyTrivial) {
          r.verdict = EndoVerdict::Found;
          r.witness = m.elements[theta] + " -> " + to_string(m, w);
        }
      }
    }
  }
  return r;
}

}  // namespace cocat
