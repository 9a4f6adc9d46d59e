#include "cocat/world.hpp"

namespace cocat {

Truth SetWorld::equal(const Map& f, const Map& g, std::string* witness) {
  if (f.source != g.source || f.target != g.target) {
    if (witness) *witness = "maps have different endpoints";
    return Truth::No;
  }
  for (std::size_t x = 0; x < f.source; ++x) {
    if (f(x) != g(x)) {
      if (witness) *witness = "element " + std::to_string(x) + ": " + std::to_string(f(x)) + " vs " + std::to_string(g(x));
      return Truth::No;
    }
  }
  return Truth::Yes;
}

std::string CatWorld::describe(const Object& a) {
  return "category with " + std::to_string(a->object_count()) + " objects and " +
         std::to_string(a->graph().edge_count()) + " generators";
}

bool HigherWorld::same(const Object& a, const Object& b) {
  return a == b || (a->flavor == b->flavor && a->base->presentation() == b->base->presentation() &&
                    a->cells == b->cells && a->relations == b->relations);
}

std::string HigherWorld::describe(const Object& a) {
  return to_string(a->flavor) + " presentation with " + std::to_string(a->cells.size()) + " 2-cell generators";
}

}  // namespace cocat
