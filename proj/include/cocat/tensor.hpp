#pragma once

#include <string>

#include "cocat/higher.hpp"
#include "cocat/sesqui.hpp"

namespace cocat {

enum class TensorKind { Funny, Cartesian, GrayLax, GrayPseudo, GrayOplax, Tensor2 };

std::string to_string(TensorKind k);
/// Accepts "funny", "cartesian", "gray_lax", "gray_pseudo", "gray_oplax", "tensor2".
TensorKind tensor_kind_from_string(const std::string& s);

// Objects of every tensor are pairs "(x,y)" with x-major order.  Generators
// are "(e,y)" for e in the first factor and "(x,e)" for e in the second.

Presentation funny_tensor(const Presentation& a, const Presentation& b);

/// The funny tensor plus a commuting square for every pair of generators.
Presentation cartesian_tensor(const Presentation& a, const Presentation& b);

/// Gray tensors of free presentations: one 2-cell "[e,e']" per pair of
/// generators, from (e,y);(x',e') to (x,e');(e,y') in the lax case,
/// invertible in the pseudo case and reversed in the oplax case.
/// Throws NotFree when a factor has relations.
HigherPtr gray_tensor(TensorKind kind, const Presentation& a, const Presentation& b);

/// The cokernel pair of the funny-to-lax comparison.
HigherPtr tensor2(const Presentation& a, const Presentation& b);

/// Tensors of higher presentations over free bases.  Factor 2-cells appear
/// as "(a,y)" and "(x,b)"; the Gray kinds add interchangers and their
/// naturality relations against factor 2-cells.  The result takes the
/// factors' flavor.
HigherPtr tensor_higher(TensorKind kind, const HigherPtr& x, const HigherPtr& y);

/// Any kind, with funny and cartesian results viewed as locally discrete
/// 2-category presentations.
HigherPtr tensor(TensorKind kind, const Presentation& a, const Presentation& b);

/// The morphism K(f, g): K(X, Y) -> K(X', Y') for K among funny and the
/// Gray kinds.  Interchangers map to pasted composites; an interchanger at
/// an identity maps to an identity 2-cell.
SesquiFunctor tensor_map(TensorKind kind, const SesquiFunctor& f, const SesquiFunctor& g,
                         const HigherPtr& source, const HigherPtr& target);

/// Functor between cartesian (or funny) tensors induced by f and g.
Functor tensor_map_cat(TensorKind kind, const Functor& f, const Functor& g, const CategoryPtr& source,
                       const CategoryPtr& target);

/// Identity-on-objects comparison between two kinds along an edge of the
/// comparison diagram (funny to a Gray kind, a Gray kind to cartesian, or
/// funny to cartesian).  Throws NoComparison otherwise.
SesquiFunctor comparison_map(TensorKind from, TensorKind to, const Presentation& a,
                             const Presentation& b);

struct AssociatorExtension {
  std::size_t extensions = 0;   // cell assignments that give an isomorphism
  std::size_t assignments = 0;  // assignments examined
  std::size_t bijections_rejected = 0;
  bool bounded = false;         // some relation check was inconclusive
  std::string witness;          // why the first rejected assignment failed
};

/// Counts the ways the evident base isomorphism K(K(2,2),2) -> K(2,K(2,2)),
/// matching generators by their name tokens, extends to an isomorphism of
/// higher presentations sending each generating 2-cell to a generating
/// 2-cell.  `parallel` selects the OpenMP kernel; the serial loop is the
/// reference.
AssociatorExtension check_associator_extension(TensorKind kind, bool parallel = true);

/// The 3x3 ordinal grid with its four generating squares and no relations.
HigherPtr free_grid(bool invertible, Flavor flavor = Flavor::Sesqui);

/// The two ways of pasting the four squares of a free grid: they differ by
/// commuting the top-left and bottom-right squares.
std::pair<TwoCellWord, TwoCellWord> grid_composites(const HigherPresentation& grid);

}  // namespace cocat
