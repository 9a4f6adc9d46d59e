#pragma once

#include <optional>
#include <string>

#include "cocat/colimits.hpp"
#include "cocat/finset.hpp"
#include "cocat/sesqui.hpp"

namespace cocat {

// A world bundles the objects and morphisms that cocategory data lives in,
// with composition, generator-wise equality, pushouts and copairing.

struct SetWorld {
  using Object = std::size_t;
  using Map = FinMap;
  struct Pushout {
    Object apex;
    Map left;
    Map right;
  };
  static constexpr const char* name = "Set";

  static Object source(const Map& f) { return f.source; }
  static Object target(const Map& f) { return f.target; }
  static bool same(Object a, Object b) { return a == b; }
  static std::string describe(Object a) { return "set of size " + std::to_string(a); }
  static Map identity(Object a) { return FinMap::identity(a); }
  static Map compose(const Map& f, const Map& g) { return then(f, g); }
  static Truth equal(const Map& f, const Map& g, std::string* witness);
  static std::optional<std::string> defect(const Map& f, bool*) {
    if (!f.total()) return "not a total function";
    return std::nullopt;
  }
  static Pushout pushout(const Map& f, const Map& g) {
    auto p = pushout_set(f, g);
    return {p.apex, p.left, p.right};
  }
  static Map copair(const Map& l, const Map& r, const Map& tl, const Map& tr) { return cocat::copair(l, r, tl, tr); }
  static Truth is_pushout(const Map& f, const Map& g, const Map& l, const Map& r, std::string* witness) {
    return cocat::is_pushout(f, g, l, r, witness) ? Truth::Yes : Truth::No;
  }
};

struct CatWorld {
  using Object = CategoryPtr;
  using Map = Functor;
  struct Pushout {
    Object apex;
    Map left;
    Map right;
  };
  static constexpr const char* name = "Cat";

  static const Object& source(const Map& f) { return f.source(); }
  static const Object& target(const Map& f) { return f.target(); }
  static bool same(const Object& a, const Object& b) { return a == b || a->presentation() == b->presentation(); }
  static std::string describe(const Object& a);
  static Map identity(const Object& a) { return Functor::identity(a); }
  static Map compose(const Map& f, const Map& g) { return then(f, g); }
  static Truth equal(const Map& f, const Map& g, std::string* witness) { return cocat::equal(f, g, witness); }
  static std::optional<std::string> defect(const Map& f, bool* bounded) { return f.defect(bounded); }
  static Pushout pushout(const Map& f, const Map& g) {
    auto p = pushout_cat(f, g);
    return {p.category, p.left, p.right};
  }
  static Map copair(const Map& l, const Map& r, const Map& tl, const Map& tr) { return cocat::copair(l, r, tl, tr); }
  static Truth is_pushout(const Map& f, const Map& g, const Map& l, const Map& r, std::string* witness) {
    return cocat::is_pushout(f, g, l, r, witness);
  }
};

/// Sesquicategories or 2-categories, according to the flavor of the objects.
struct HigherWorld {
  using Object = HigherPtr;
  using Map = SesquiFunctor;
  struct Pushout {
    Object apex;
    Map left;
    Map right;
  };
  static constexpr const char* name = "Sesquicat";

  static const Object& source(const Map& f) { return f.source(); }
  static const Object& target(const Map& f) { return f.target(); }
  static bool same(const Object& a, const Object& b);
  static std::string describe(const Object& a);
  static Map identity(const Object& a) { return SesquiFunctor::identity(a); }
  static Map compose(const Map& f, const Map& g) { return then(f, g); }
  static Truth equal(const Map& f, const Map& g, std::string* witness) { return cocat::equal(f, g, witness); }
  static std::optional<std::string> defect(const Map& f, bool* bounded) { return f.defect(bounded); }
  static Pushout pushout(const Map& f, const Map& g) {
    auto p = pushout_sesqui(f, g);
    return {p.apex, p.left, p.right};
  }
  static Map copair(const Map& l, const Map& r, const Map& tl, const Map& tr) { return cocat::copair(l, r, tl, tr); }
  static Truth is_pushout(const Map& f, const Map& g, const Map& l, const Map& r, std::string* witness) {
    return cocat::is_pushout(f, g, l, r, witness);
  }
};

}  // namespace cocat
