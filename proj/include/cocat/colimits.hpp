#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cocat/functor.hpp"

namespace cocat {

struct CatPushout {
  CategoryPtr category;
  Functor left;   // B -> P
  Functor right;  // C -> P
};

/// Pushout of the span B <-f- A -g-> C, computed on presentations.
///
/// Generators of P are those of B followed by those of C, with images of A's
/// objects identified.  An A-edge whose images are single edges on both
/// sides identifies those edges; otherwise the two image paths become a
/// relation.  Colliding labels from C get a "'" suffix.
CatPushout pushout_cat(const Functor& f, const Functor& g,
                       std::optional<std::size_t> bound = std::nullopt);

/// Coproduct, the pushout over the empty category.
CatPushout coproduct(const CategoryPtr& b, const CategoryPtr& c,
                     std::optional<std::size_t> bound = std::nullopt);

/// The map out of a cocone apex P, given injections `left`: B -> P and
/// `right`: C -> P that are jointly surjective on generators, into the apex of
/// the cocone (`to_left`, `to_right`).  Throws InvalidInput when some
/// generator of P is not the image of a single generator.
Functor copair(const Functor& left, const Functor& right, const Functor& to_left,
               const Functor& to_right);

/// Whether (left, right) exhibits its common target as a pushout of (f, g):
/// the square commutes and copairings to and from the canonical pushout are
/// mutually inverse.
Truth is_pushout(const Functor& f, const Functor& g, const Functor& left, const Functor& right,
                 std::string* witness = nullptr);

/// Vertex and edge assignments of a graph morphism; the graphs travel separately.
struct GraphMorphism {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};

struct GraphPushout {
  Graph graph;
  GraphMorphism left;
  GraphMorphism right;
};

/// Pushout of graph monos f: A -> B and g: A -> C.  Throws NonMono if either
/// leg is not injective.
GraphPushout pushout_graph(const Graph& a, const Graph& b, const Graph& c, const GraphMorphism& f,
                           const GraphMorphism& g);

/// Underlying graph of a finite category: one edge per morphism class,
/// identities included, named by the class representative.
Graph underlying_graph(const Category& c);

}  // namespace cocat
