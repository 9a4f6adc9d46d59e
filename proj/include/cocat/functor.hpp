#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cocat/presentation.hpp"

namespace cocat {

/// A functor between presented categories, given on generators.
class Functor {
 public:
  Functor() = default;
  Functor(CategoryPtr source, CategoryPtr target, std::vector<VertexId> objects,
          std::vector<Path> edges);

  static Functor identity(const CategoryPtr& c);

  const CategoryPtr& source() const { return source_; }
  const CategoryPtr& target() const { return target_; }
  const std::vector<VertexId>& object_map() const { return objects_; }
  const std::vector<Path>& edge_map() const { return edges_; }

  VertexId on_object(VertexId v) const { return objects_.at(v); }
  const Path& on_edge(EdgeId e) const { return edges_.at(e); }
  Path apply(const Path& p) const;

  /// Empty when the data is a functor; otherwise a description of the first
  /// defect (bad endpoint, broken relation).  `bounded` is set when some
  /// relation image could only be compared under the target's bound.
  std::optional<std::string> defect(bool* bounded = nullptr) const;
  bool valid() const { return !defect(); }

 private:
  CategoryPtr source_;
  CategoryPtr target_;
  std::vector<VertexId> objects_;
  std::vector<Path> edges_;
};

/// Diagrammatic composite: `first` then `second`.
Functor then(const Functor& first, const Functor& second);

/// Generator-wise comparison.  On Truth::No, `witness` names a generator on
/// which the functors differ.
Truth equal(const Functor& a, const Functor& b, std::string* witness = nullptr);

/// Enumerates every functor source -> target.
std::vector<Functor> enumerate_functors(const CategoryPtr& source, const CategoryPtr& target);

/// Functors agreeing with the given object and generator images where those are set.
std::vector<Functor> enumerate_functors(const CategoryPtr& source, const CategoryPtr& target,
                                        const std::vector<std::optional<VertexId>>& fixed_objects,
                                        const std::vector<std::optional<Path>>& fixed_edges);

/// All endofunctors of a category under composition.  `table[a][b]` is the
/// index of "a then b".
struct EndofunctorMonoid {
  std::vector<Functor> elements;
  std::vector<std::vector<std::size_t>> table;
  std::size_t unit = 0;
  std::size_t size() const { return elements.size(); }
};

EndofunctorMonoid endofunctor_monoid(const CategoryPtr& c);

struct Fullness {
  bool full = true;
  bool bounded = false;
  std::string witness;  // an unhit target morphism when not full
};

/// Whether every morphism between images of `objects` is the image of a
/// morphism between members of `objects`.
Fullness full_on_objects(const Functor& f, const std::vector<VertexId>& objects);

}  // namespace cocat
