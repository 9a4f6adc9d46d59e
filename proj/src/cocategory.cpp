#include "cocat/cocategory.hpp"

#include "cocat/error.hpp"

namespace cocat {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Bounded: return "bounded";
  }
  return "fail";
}

void CheckReport::record(const std::string& axiom, Truth t, const std::string& why) {
  if (t == Truth::No) {
    failures.push_back({axiom, why});
    if (verdict != Verdict::Fail) witness = axiom + ": " + why;
    verdict = Verdict::Fail;
  } else if (t == Truth::Unknown) {
    undecided.push_back(axiom);
    if (verdict == Verdict::Pass) {
      verdict = Verdict::Bounded;
      witness = "undecided within bounds: " + axiom;
    }
  }
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
  for (const auto& f : other.failures) record(prefix + f.axiom, Truth::No, f.witness);
  for (const auto& u : other.undecided) record(prefix + u, Truth::Unknown);
}

template <class W>
const typename W::Map& structure_map(const CocategoryData<W>& x, char which) {
  switch (which) {
    case 'd': return x.d;
    case 'c': return x.c;
    case 'i': return x.i;
    case 'p': return x.p;
    case 'm': return x.m;
    case 'q': return x.q;
  }
  throw Error(ErrorKind::InvalidInput, std::string("no structure map named ") + which);
}

namespace {

constexpr std::string_view kMaps = "dcipmq";

// Index of the source and target object (0 = A1, 1 = A2, 2 = A3) of a structure map.
std::pair<int, int> ends(char which) {
  switch (which) {
    case 'd':
    case 'c': return {0, 1};
    case 'i': return {1, 0};
    default: return {1, 2};
  }
}

template <class W>
const typename W::Object& object(const CocategoryData<W>& x, int k) {
  return k == 0 ? x.a1 : k == 1 ? x.a2 : x.a3;
}

template <class W>
void compare(CheckReport& r, const std::string& axiom, const typename W::Map& lhs, const typename W::Map& rhs) {
  std::string why;
  Truth t = W::equal(lhs, rhs, &why);
  r.record(axiom, t, why);
}

template <class W>
bool well_typed(CheckReport& r, const CocategoryData<W>& x) {
  auto typed = [&](const std::string& name, const typename W::Map& f, int from, int to) {
    if (!W::same(W::source(f), object(x, from)) || !W::same(W::target(f), object(x, to))) {
      r.fail(name + " has the stated endpoints", "endpoints do not match");
      return false;
    }
    return true;
  };
  bool ok = true;
  for (char k : kMaps) {
    auto [from, to] = ends(k);
    ok = typed(std::string(1, k), structure_map(x, k), from, to) && ok;
  }
  ok = typed("first injection", x.first, 1, 2) && ok;
  ok = typed("second injection", x.second, 1, 2) && ok;
  if (!ok) return false;
  for (char k : kMaps) {
    bool bounded = false;
    if (auto d = W::defect(structure_map(x, k), &bounded)) {
      r.fail(std::string(1, k) + " is a morphism", *d);
      ok = false;
    } else if (bounded) {
      r.record(std::string(1, k) + " is a morphism", Truth::Unknown);
    }
  }
  return ok;
}

}  // namespace

template <class W>
CheckReport check_cocategory(const CocategoryData<W>& x, bool with_coassoc) {
  CheckReport r;
  try {
    if (!well_typed(r, x)) return r;
    const auto one1 = W::identity(x.a1);
    const auto one2 = W::identity(x.a2);
    compare<W>(r, "d;i = 1", W::compose(x.d, x.i), one1);
    compare<W>(r, "c;i = 1", W::compose(x.c, x.i), one1);
    compare<W>(r, "c;p = d;q", W::compose(x.c, x.p), W::compose(x.d, x.q));
    compare<W>(r, "d;m = d;p", W::compose(x.d, x.m), W::compose(x.d, x.p));
    compare<W>(r, "c;m = c;q", W::compose(x.c, x.m), W::compose(x.c, x.q));
    std::string why;
    r.record("A3 is the pushout of (c, d)", W::is_pushout(x.c, x.d, x.first, x.second, &why), why);
    compare<W>(r, "p is the first injection", x.p, x.first);
    compare<W>(r, "q is the second injection", x.q, x.second);

    const auto left_unit = W::copair(x.first, x.second, W::compose(x.i, x.d), one2);
    const auto right_unit = W::copair(x.first, x.second, one2, W::compose(x.i, x.c));
    compare<W>(r, "m;(i,1) = 1", W::compose(x.m, left_unit), one2);
    compare<W>(r, "m;(1,i) = 1", W::compose(x.m, right_unit), one2);

    if (with_coassoc) {
      std::string why;
      r.record("coassociativity", coassociative(x, FourLayout::ThreeTwo, &why), why);
    }
  } catch (const Error& e) {
    r.fail("structure maps compose", e.what());
  }
  return r;
}

template <class W>
Truth coassociative(const CocategoryData<W>& x, FourLayout layout, std::string* witness) {
  // A4 holds three copies of A2; m+1 and 1+m land in copies (1,2 | 3) and (1 | 2,3).
  typename W::Map m_then_1, one_then_m;
  if (layout == FourLayout::ThreeTwo) {
    auto four = W::pushout(W::compose(x.c, x.q), x.d);
    const auto& u = four.left;
    const auto& v = four.right;
    const auto shift = W::copair(x.first, x.second, W::compose(x.q, u), v);
    m_then_1 = W::copair(x.first, x.second, W::compose(x.m, u), v);
    one_then_m = W::copair(x.first, x.second, W::compose(x.p, u), W::compose(x.m, shift));
  } else {
    auto four = W::pushout(x.c, W::compose(x.d, x.p));
    const auto& v = four.left;
    const auto& u = four.right;
    const auto shift = W::copair(x.first, x.second, v, W::compose(x.p, u));
    m_then_1 = W::copair(x.first, x.second, W::compose(x.m, shift), W::compose(x.q, u));
    one_then_m = W::copair(x.first, x.second, v, W::compose(x.m, u));
  }
  return W::equal(W::compose(x.m, m_then_1), W::compose(x.m, one_then_m), witness);
}

template <class W>
CheckReport check_double_cocategory(const DoubleCocategoryData<W>& x, bool with_coassoc) {
  CheckReport r;
  for (int y = 0; y < 3; ++y) r.merge(check_cocategory(x.rows[y], with_coassoc), "row " + std::to_string(y) + ": ");
  for (int c = 0; c < 3; ++c) {
    r.merge(check_cocategory(x.columns[c], with_coassoc), "column " + std::to_string(c) + ": ");
  }
  for (int c = 0; c < 3; ++c) {
    for (int y = 0; y < 3; ++y) {
      if (!W::same(object(x.columns[c], y), x.grid[c][y]) || !W::same(object(x.rows[y], c), x.grid[c][y])) {
        r.fail("grid", "rows and columns disagree at (" + std::to_string(c) + "," + std::to_string(y) + ")");
      }
    }
  }
  if (r.verdict == Verdict::Fail) return r;

  // Each trio of vertical maps is a morphism of the horizontal cocategories.
  try {
    for (char h : kMaps) {
      auto [sx, tx] = ends(h);
      for (char v : kMaps) {
        auto [sy, ty] = ends(v);
        const auto lhs = W::compose(structure_map(x.rows[sy], h), structure_map(x.columns[tx], v));
        const auto rhs = W::compose(structure_map(x.columns[sx], v), structure_map(x.rows[ty], h));
        std::string name = h == 'm' && v == 'm' ? "interchange" : std::string("square ") + h + "/" + v;
        compare<W>(r, name, lhs, rhs);
      }
    }
  } catch (const Error& e) {
    r.fail("structure maps compose", e.what());
  }
  return r;
}

template <class W>
CheckReport check_interchange(const PreDoubleCocategoryData<W>& x) {
  CheckReport r;
  const auto& g = x.data;
  const auto lhs = W::compose(g.rows[1].m, g.columns[2].m);
  const auto rhs = W::compose(g.columns[1].m, g.rows[2].m);
  std::string why;
  Truth t = W::equal(lhs, rhs, &why);
  if (t != Truth::Yes && x.separator) {
    std::string separated;
    if (W::equal(W::compose(lhs, *x.separator), W::compose(rhs, *x.separator), &separated) == Truth::No) {
      r.fail("interchange", separated + " (distinct in the separating target)");
      return r;
    }
  }
  r.record("interchange", t, why);
  return r;
}

template <class W>
DoubleCocategoryData<W> derive_last_row(const std::array<CocategoryData<W>, 3>& rows,
                                        const std::array<CocategoryData<W>, 3>& columns) {
  std::array<typename W::Map, 6> maps;
  for (std::size_t k = 0; k < kMaps.size(); ++k) {
    auto [sx, tx] = ends(kMaps[k]);
    const auto& middle = structure_map(rows[1], kMaps[k]);
    maps[k] = W::copair(columns[sx].first, columns[sx].second, W::compose(middle, columns[tx].p),
                        W::compose(middle, columns[tx].q));
  }
  auto last = CocategoryData<W>::make(maps[0], maps[1], maps[2], maps[3], maps[4], maps[5]);
  return DoubleCocategoryData<W>::make({rows[0], rows[1], std::move(last)}, columns);
}

#define COCAT_INSTANTIATE(W)                                                                               \
  template const W::Map& structure_map(const CocategoryData<W>&, char);                                    \
  template CheckReport check_cocategory(const CocategoryData<W>&, bool);                                   \
  template CheckReport check_double_cocategory(const DoubleCocategoryData<W>&, bool);                      \
  template CheckReport check_interchange(const PreDoubleCocategoryData<W>&);                               \
  template Truth coassociative(const CocategoryData<W>&, FourLayout, std::string*);                        \
  template DoubleCocategoryData<W> derive_last_row(const std::array<CocategoryData<W>, 3>&,                \
                                                   const std::array<CocategoryData<W>, 3>&);

COCAT_INSTANTIATE(SetWorld)
COCAT_INSTANTIATE(CatWorld)
COCAT_INSTANTIATE(HigherWorld)

}  // namespace cocat
