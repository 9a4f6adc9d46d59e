#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cocat/graph.hpp"

namespace cocat {

enum class Truth { Yes, No, Unknown };

struct Relation {
  Path lhs;
  Path rhs;
  bool operator==(const Relation&) const = default;
};

/// A finitely presented category: generators plus parallel-path relations.
struct Presentation {
  Graph graph;
  std::vector<Relation> relations;

  /// Throws InvalidInput if a relation is ill-formed or not parallel.
  void validate() const;

  bool is_free() const { return relations.empty(); }
  bool operator==(const Presentation&) const = default;
};

Presentation free_category(const Graph& g);

using ClassId = std::uint32_t;

/// The finite category presented by a Presentation, computed by congruence
/// closure over every path of length <= bound.
///
/// Acyclic graphs need no bound (all paths are enumerated).  Cyclic graphs
/// need one, and the result is flagged `bounded()`: equalities that are only
/// derivable through longer paths are missed.
class Category {
 public:
  static std::shared_ptr<const Category> make(Presentation p,
                                              std::optional<std::size_t> bound = std::nullopt);

  const Presentation& presentation() const { return pres_; }
  const Graph& graph() const { return pres_.graph; }
  bool bounded() const { return bounded_; }
  std::size_t bound() const { return bound_; }

  std::size_t object_count() const { return pres_.graph.vertex_count(); }
  std::size_t morphism_count() const { return reps_.size(); }

  std::optional<ClassId> class_of(const Path& p) const;
  Truth equal(const Path& a, const Path& b) const;

  std::vector<ClassId> hom(VertexId a, VertexId b) const;
  const Path& representative(ClassId c) const { return reps_.at(c); }
  /// Class representative of `p`, or `p` itself if it lies beyond the bound.
  Path canonical(const Path& p) const;

  std::optional<ClassId> compose(ClassId first, ClassId second) const;
  ClassId identity(VertexId v) const;

 private:
  Category() = default;
  Presentation pres_;
  bool bounded_ = false;
  std::size_t bound_ = 0;
  std::vector<Path> paths_;
  std::map<Path, std::size_t> index_;
  std::vector<ClassId> class_of_path_;
  std::vector<Path> reps_;
};

using CategoryPtr = std::shared_ptr<const Category>;

struct MorphismClass {
  CategoryPtr category;
  Path representative;
};

/// All morphism classes a -> b.  Throws CycleWithoutBound for cyclic graphs
/// without a bound.
std::vector<MorphismClass> hom_set(const Presentation& p, VertexId a, VertexId b,
                                   std::optional<std::size_t> bound = std::nullopt);

}  // namespace cocat
