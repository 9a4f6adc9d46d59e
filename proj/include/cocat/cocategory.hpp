#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cocat/world.hpp"

namespace cocat {

enum class Verdict { Pass, Fail, Bounded };

std::string to_string(Verdict v);

struct Failure {
  std::string axiom;
  std::string witness;
};

struct CheckReport {
  std::string id;
  std::string citation;
  Verdict verdict = Verdict::Pass;
  std::string witness;  // first failure, or the undecided axioms when bounded
  std::vector<Failure> failures;
  std::vector<std::string> undecided;

  /// Records one axiom outcome and updates the verdict.
  void record(const std::string& axiom, Truth t, const std::string& why = {});
  void fail(const std::string& axiom, const std::string& why) { record(axiom, Truth::No, why); }
  /// Folds another report in, prefixing its axiom names.
  void merge(const CheckReport& other, const std::string& prefix);
  bool passed() const { return verdict == Verdict::Pass; }
};

/// A1 =d,c=> A2 =p,m,q=> A3 with i: A2 -> A1.  A3 is the pushout of (c, d)
/// with p the first copy; `first`, `second` are the pushout injections the
/// copairings are taken against (normally p and q themselves).
template <class W>
struct CocategoryData {
  using Object = typename W::Object;
  using Map = typename W::Map;

  Object a1{}, a2{}, a3{};
  Map d, c, i, p, m, q;
  Map first, second;

  static CocategoryData make(Map d, Map c, Map i, Map p, Map m, Map q) {
    CocategoryData x;
    x.a1 = W::source(d);
    x.a2 = W::target(d);
    x.a3 = W::target(p);
    x.first = p;
    x.second = q;
    x.d = std::move(d);
    x.c = std::move(c);
    x.i = std::move(i);
    x.p = std::move(p);
    x.m = std::move(m);
    x.q = std::move(q);
    return x;
  }
};

/// Cocategory data completed from d, c, i and m by taking A3 to be the
/// computed pushout of (c, d).  `m` is produced from the pushout apex.
template <class W, class MakeM>
CocategoryData<W> complete_cocategory(typename W::Map d, typename W::Map c, typename W::Map i, MakeM&& make_m) {
  auto po = W::pushout(c, d);
  auto m = make_m(po);
  return CocategoryData<W>::make(std::move(d), std::move(c), std::move(i), po.left, std::move(m), po.right);
}

/// A 3x3 grid of objects.  `grid[x][y]` is the object at column x, row y;
/// rows[y] runs along x through grid[0][y], grid[1][y], grid[2][y] and
/// columns[x] runs along y.  Each row and column is cocategory data.
template <class W>
struct DoubleCocategoryData {
  using Object = typename W::Object;
  using Map = typename W::Map;

  std::array<std::array<Object, 3>, 3> grid{};
  std::array<CocategoryData<W>, 3> rows;
  std::array<CocategoryData<W>, 3> columns;

  static DoubleCocategoryData make(std::array<CocategoryData<W>, 3> rows,
                                   std::array<CocategoryData<W>, 3> columns) {
    DoubleCocategoryData x;
    for (int y = 0; y < 3; ++y) {
      x.grid[0][y] = rows[y].a1;
      x.grid[1][y] = rows[y].a2;
      x.grid[2][y] = rows[y].a3;
    }
    x.rows = std::move(rows);
    x.columns = std::move(columns);
    return x;
  }
};

/// Double cocategory data in which the corner and its structure maps are
/// induced by pushouts and interchange is not assumed.  `separator`, when
/// set, maps the corner into a presentation whose 2-cell equality is decided
/// by normal forms.
template <class W>
struct PreDoubleCocategoryData {
  DoubleCocategoryData<W> data;
  std::optional<typename W::Map> separator;
};

/// Given the first two rows (row 2 ignored) and the columns of a grid in
/// which columns[x].a3 is the pushout of column x, derives row 2 by copairing
/// against the column injections.
template <class W>
DoubleCocategoryData<W> derive_last_row(const std::array<CocategoryData<W>, 3>& rows,
                                        const std::array<CocategoryData<W>, 3>& columns);

template <class W>
CheckReport check_cocategory(const CocategoryData<W>& x, bool with_coassoc = true);

template <class W>
CheckReport check_double_cocategory(const DoubleCocategoryData<W>& x, bool with_coassoc = true);

/// Where the fourth object of the coassociativity square is glued:
/// A3 +_{A1} A2 (pushout of c;q and d) or A2 +_{A1} A3 (pushout of c and d;p).
enum class FourLayout { ThreeTwo, TwoThree };

/// Whether m;(m+1) equals m;(1+m) in the chosen layout.
template <class W>
Truth coassociative(const CocategoryData<W>& x, FourLayout layout, std::string* witness = nullptr);

/// Compares the two composites rows[1].m ; columns[2].m and columns[1].m ; rows[2].m.
template <class W>
CheckReport check_interchange(const PreDoubleCocategoryData<W>& x);

/// The structure map named `which` (one of d, c, i, p, m, q) of `x`.
template <class W>
const typename W::Map& structure_map(const CocategoryData<W>& x, char which);

extern template CheckReport check_cocategory(const CocategoryData<SetWorld>&, bool);
extern template CheckReport check_cocategory(const CocategoryData<CatWorld>&, bool);
extern template CheckReport check_cocategory(const CocategoryData<HigherWorld>&, bool);
extern template CheckReport check_double_cocategory(const DoubleCocategoryData<SetWorld>&, bool);
extern template CheckReport check_double_cocategory(const DoubleCocategoryData<CatWorld>&, bool);
extern template CheckReport check_double_cocategory(const DoubleCocategoryData<HigherWorld>&, bool);
extern template Truth coassociative(const CocategoryData<SetWorld>&, FourLayout, std::string*);
extern template Truth coassociative(const CocategoryData<CatWorld>&, FourLayout, std::string*);
extern template Truth coassociative(const CocategoryData<HigherWorld>&, FourLayout, std::string*);
extern template CheckReport check_interchange(const PreDoubleCocategoryData<SetWorld>&);
extern template CheckReport check_interchange(const PreDoubleCocategoryData<CatWorld>&);
extern template CheckReport check_interchange(const PreDoubleCocategoryData<HigherWorld>&);
extern template DoubleCocategoryData<SetWorld> derive_last_row(const std::array<CocategoryData<SetWorld>, 3>&,
                                                               const std::array<CocategoryData<SetWorld>, 3>&);
extern template DoubleCocategoryData<CatWorld> derive_last_row(const std::array<CocategoryData<CatWorld>, 3>&,
                                                               const std::array<CocategoryData<CatWorld>, 3>&);
extern template DoubleCocategoryData<HigherWorld> derive_last_row(
    const std::array<CocategoryData<HigherWorld>, 3>&, const std::array<CocategoryData<HigherWorld>, 3>&);

}  // namespace cocat
