#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace cocat {

/// A finite monoid given by its multiplication table.
struct FinMonoid {
  std::vector<std::string> elements;
  std::size_t unit = 0;
  std::vector<std::vector<std::size_t>> table;  // table[a][b] = ab

  std::size_t size() const { return elements.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table[a][b]; }
  bool trivial() const { return size() == 1; }
  /// Throws InvalidInput unless the table is closed, unital and associative.
  void validate() const;
  bool operator==(const FinMonoid&) const = default;
};

FinMonoid trivial_monoid();
FinMonoid cyclic_monoid(std::size_t n);
/// Z2 x Z2.
FinMonoid klein_monoid();
/// {e, x} with xx = x.
FinMonoid idempotent_monoid();
/// 1, x, ..., x^n with x^i x^j = x^min(i+j, n).
FinMonoid truncated_free_monoid(std::size_t n);

/// The named monoids exercised by the obstruction searches, trivial first.
std::vector<std::pair<std::string, FinMonoid>> monoid_catalog();

/// A letter of a coproduct word: an element of the monoid in branch `branch`.
struct Letter {
  std::size_t branch = 0;
  std::size_t element = 0;
  auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

struct CoproductWord {
  std::vector<std::shared_ptr<const FinMonoid>> bases;
  Word letters;
};

/// Deletes units and merges adjacent letters of the same branch until none remain.
CoproductWord normal_form(const CoproductWord& w);
/// The same when every branch carries `a`.
Word normal_form(const FinMonoid& a, const Word& w);
bool is_normal(const FinMonoid& a, const Word& w);

/// Product of the letters in branch `keep`, the others read as the unit.
/// Throws MixedMonoids unless every branch carries the same monoid.
std::size_t eval_retraction(const CoproductWord& w, std::size_t keep);
std::size_t eval_retraction(const FinMonoid& a, const Word& w, std::size_t keep);

std::string to_string(const FinMonoid& a, const Word& w);

enum class ComultiplicationVerdict { UniqueTrivial, None, Found };
enum class EndoVerdict { OnlyTrivial, Found };

std::string to_string(ComultiplicationVerdict v);
std::string to_string(EndoVerdict v);

struct ObstructionStats {
  std::size_t words = 0;            // normal words of length <= max_len in A+A
  std::size_t candidates = 0;       // of those, passing both counits at some element
  std::size_t short_candidates = 0; // candidates of length < 2
  std::size_t pairs = 0;            // (horizontal, vertical) pairs examined
  std::size_t consistent_pairs = 0; // pairs surviving the interchange prefix test
};

struct ComultiplicationResult {
  ComultiplicationVerdict verdict = ComultiplicationVerdict::None;
  std::string witness;
  ObstructionStats stats;
};

struct EndoResult {
  EndoVerdict verdict = EndoVerdict::OnlyTrivial;
  std::string witness;
  ObstructionStats stats;
};

/// Every normal word in A+A of length <= max_len whose two retractions are `a`.
std::vector<Word> counit_candidates(const FinMonoid& a, std::size_t element, std::size_t max_len);

/// Images of a letter of the horizontal comultiplication under the vertical
/// one (or vice versa), juxtaposed in the four-fold coproduct: branch
/// 2*column + row.
Word interchange_side(const FinMonoid& a, const Word& outer, bool outer_is_horizontal,
                      const std::vector<Word>& inner_images);

/// Looks for horizontal and vertical comultiplications A -> A+A, defined on
/// the non-unit elements, satisfying both counits and interchange in 4.A.
/// Throws SearchSpaceTooLarge for max_len > 8.
ComultiplicationResult search_comultiplication(const FinMonoid& a, std::size_t max_len = 6, bool parallel = true);

/// Looks for a non-identity endo 2-cell of a diagonal of 2x2 whose image in
/// 3x2 satisfies both counits.  Throws SearchSpaceTooLarge for max_len > 8.
EndoResult search_endo_2cell(const FinMonoid& m, std::size_t max_len = 6);

}  // namespace cocat
