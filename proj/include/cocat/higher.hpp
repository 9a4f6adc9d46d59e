#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cocat/presentation.hpp"

namespace cocat {

enum class Flavor { Sesqui, TwoCategory };

std::string to_string(Flavor f);
Flavor flavor_from_string(const std::string& s);

using CellId = std::uint32_t;

/// A generating 2-cell between parallel 1-cells of the base.
struct CellGenerator {
  std::string name;
  Path src;
  Path tgt;
  bool invertible = false;
  bool operator==(const CellGenerator&) const = default;
};

/// One whiskered generator instance pre . cell^(+-1) . post.
struct Whiskered {
  Path pre;
  CellId cell = 0;
  bool inverse = false;
  Path post;
  auto operator<=>(const Whiskered&) const = default;
  bool operator==(const Whiskered&) const = default;
};

/// A vertical composite of whiskered generators, first step first.  The
/// empty word is the identity 2-cell on `src` (and then src == tgt).
struct TwoCellWord {
  Path src;
  Path tgt;
  std::vector<Whiskered> steps;
  auto operator<=>(const TwoCellWord&) const = default;
  bool operator==(const TwoCellWord&) const = default;
  std::size_t length() const { return steps.size(); }
};

struct TwoCellRelation {
  TwoCellWord lhs;
  TwoCellWord rhs;
  bool operator==(const TwoCellRelation&) const = default;
};

/// A category with a bare set of 2-cell generators between parallel pairs.
struct DerivationScheme {
  CategoryPtr base;
  std::vector<CellGenerator> cells;
};

/// A sesquicategory or 2-category presented by 2-cell generators and
/// relations over a presented base category.  Interchange is implicit in
/// the 2-category flavor.
struct HigherPresentation {
  CategoryPtr base;
  std::vector<CellGenerator> cells;
  std::vector<TwoCellRelation> relations;
  Flavor flavor = Flavor::Sesqui;

  const Graph& graph() const { return base->graph(); }
  std::optional<CellId> find_cell(const std::string& name) const;
  CellId cell_id(const std::string& name) const;
  bool is_free() const { return relations.empty(); }
  bool all_invertible() const;
  bool none_invertible() const;

  /// Throws InvalidInput when a generator or relation is ill-formed.
  void validate() const;
};

using HigherPtr = std::shared_ptr<const HigherPresentation>;

HigherPtr make_higher(HigherPresentation p);

/// The base category viewed as locally discrete.
HigherPtr locally_discrete(const CategoryPtr& base, Flavor flavor = Flavor::Sesqui);

// Word construction.  All results are reduced.
Path step_source(const HigherPresentation& hp, const Whiskered& s);
Path step_target(const HigherPresentation& hp, const Whiskered& s);
TwoCellWord identity_cell(const HigherPresentation& hp, const Path& f);
TwoCellWord generator_cell(const HigherPresentation& hp, CellId cell, bool inverse = false);
TwoCellWord vertical(const HigherPresentation& hp, const TwoCellWord& first, const TwoCellWord& second);
TwoCellWord whisker(const HigherPresentation& hp, const Path& left, const TwoCellWord& w,
                    const Path& right);
/// Throws InvalidInput if the word uses a non-invertible generator.
TwoCellWord inverse(const HigherPresentation& hp, const TwoCellWord& w);

/// Canonical whiskers and boundaries, adjacent generator/inverse pairs cancelled.
TwoCellWord reduce(const HigherPresentation& hp, const TwoCellWord& w);

/// Consecutive steps compose and the boundaries match, modulo the base.
bool well_formed(const HigherPresentation& hp, const TwoCellWord& w);

std::string to_string(const HigherPresentation& hp, const TwoCellWord& w);

enum class CellVerdict { Equal, DistinctByNormalForm, DistinctByExhaustion, Unknown };

std::string to_string(CellVerdict v);

struct CellEquality {
  CellVerdict verdict = CellVerdict::Unknown;
  /// For Equal: the words visited from u to v, and the move that produced each.
  std::vector<TwoCellWord> chain;
  std::vector<std::string> moves;

  bool equal() const { return verdict == CellVerdict::Equal; }
  bool distinct() const {
    return verdict == CellVerdict::DistinctByNormalForm || verdict == CellVerdict::DistinctByExhaustion;
  }
};

/// Decides equality of parallel 2-cell words where it can.  Distinctness is
/// claimed from normal forms when the presentation has no relations (and no
/// implicit interchange), or after exhausting the finite set of words
/// reachable by relation moves when no generator is invertible.
/// Throws BoundaryMismatch for non-parallel words.
CellEquality twocell_equal(const HigherPresentation& hp, const TwoCellWord& u, const TwoCellWord& v,
                           std::size_t max_states = 200000);

/// The free sesquicategory (or 2-category) on a derivation scheme.
HigherPtr free_sesquicategory(const DerivationScheme& d, Flavor flavor = Flavor::Sesqui);

/// A whiskered generator instance with its boundary classes.
struct Instance {
  Whiskered step;
  ClassId src;
  ClassId tgt;
};

/// Every whiskered generator instance l.g.r with l, r ranging over classes,
/// landing in hom(a, b).
std::vector<Instance> whiskered_instances(const HigherPresentation& hp, VertexId a, VertexId b);

/// One invertible generator per unordered pair of distinct parallel classes
/// (oriented from the earlier class to the later one), plus relations making
/// every pair of parallel 2-cells equal.  The relations equate each non-tree
/// edge of a spanning tree of the whiskered-instance graph, per hom, with
/// the tree path.
HigherPtr locally_indiscrete(const CategoryPtr& base, Flavor flavor = Flavor::Sesqui);

/// A shortest word from src to tgt using whiskered generators and inverses
/// of invertible ones; empty optional when none exists.
std::optional<TwoCellWord> shortest_word(const HigherPresentation& hp, const Path& src,
                                         const Path& tgt);

}  // namespace cocat
