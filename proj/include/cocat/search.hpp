#pragma once

#include <cstddef>
#include <vector>

#include "cocat/cocategory.hpp"

namespace cocat {

template <class W>
struct CompletionSearch {
  std::vector<DoubleCocategoryData<W>> completions;
  std::size_t boundaries = 0;      // admissible d, c, i data around the corner
  std::size_t comultiplications = 0;  // (horizontal m, vertical m) pairs fully checked
};

/// 2x2 funny square with `extra` further generators from (0,0) to (1,1).
Presentation extra_diagonals(std::size_t extra);

/// All double cocategories in Cat with top row and left column the arrow
/// cocategory and the given presentation at the 2x2 position: every choice
/// of d, c, i and m in row 2 and column 2 satisfying the axioms, with the
/// remaining entries taken as pushouts.  Throws SearchSpaceTooLarge when
/// hom((0,0),(1,1)) has more than six elements.  Completions that differ by
/// an automorphism of the corner are all listed; see up_to_isomorphism.
CompletionSearch<CatWorld> search_double_completions(const Presentation& corner, bool parallel = true);

/// The same search in Set with top row and left column the cocategory
/// 1 => 2 => 3, over every corner set with at most `max_corner` elements.
CompletionSearch<SetWorld> set_double_completions(std::size_t max_corner, bool parallel = true);

/// Cocategories in Set with A1 = 1 and |A2| <= max_a2, one per isomorphism
/// class.  Throws GuardViolation above 6.
std::vector<CocategoryData<SetWorld>> enumerate_set_cocategories(std::size_t max_a2);

bool isomorphic(const CocategoryData<SetWorld>& a, const CocategoryData<SetWorld>& b);

/// Isomorphism of completions sharing top row and left column: an
/// automorphism of the corner carrying row 1 and column 1 across.
bool isomorphic(const DoubleCocategoryData<SetWorld>& a, const DoubleCocategoryData<SetWorld>& b);
bool isomorphic(const DoubleCocategoryData<CatWorld>& a, const DoubleCocategoryData<CatWorld>& b);

/// Keeps one representative per isomorphism class.
std::vector<DoubleCocategoryData<SetWorld>> up_to_isomorphism(const std::vector<DoubleCocategoryData<SetWorld>>& xs);
std::vector<DoubleCocategoryData<CatWorld>> up_to_isomorphism(const std::vector<DoubleCocategoryData<CatWorld>>& xs);

}  // namespace cocat
