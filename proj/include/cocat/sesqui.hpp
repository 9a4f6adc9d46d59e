#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cocat/functor.hpp"
#include "cocat/higher.hpp"

namespace cocat {

/// A morphism of higher presentations: a functor on the bases plus an image
/// word for every generating 2-cell.
class SesquiFunctor {
 public:
  SesquiFunctor() = default;
  SesquiFunctor(HigherPtr source, HigherPtr target, Functor base, std::vector<TwoCellWord> cells);

  static SesquiFunctor identity(const HigherPtr& p);

  const HigherPtr& source() const { return source_; }
  const HigherPtr& target() const { return target_; }
  const Functor& base() const { return base_; }
  const std::vector<TwoCellWord>& cell_map() const { return cells_; }

  TwoCellWord apply(const TwoCellWord& w) const;

  /// Empty when the data is a morphism.  `bounded` is set when some relation
  /// could be neither confirmed nor refuted in the target.
  std::optional<std::string> defect(bool* bounded = nullptr) const;
  bool valid() const { return !defect(); }

 private:
  HigherPtr source_;
  HigherPtr target_;
  Functor base_;
  std::vector<TwoCellWord> cells_;
};

SesquiFunctor then(const SesquiFunctor& first, const SesquiFunctor& second);

Truth equal(const SesquiFunctor& a, const SesquiFunctor& b, std::string* witness = nullptr);

struct HigherPushout {
  HigherPtr apex;
  SesquiFunctor left;
  SesquiFunctor right;
};

/// Pushout of higher presentations: the base pushout, with 2-cell generators
/// glued like edges and relations inherited.  Throws FlavorMismatch.
HigherPushout pushout_sesqui(const SesquiFunctor& f, const SesquiFunctor& g);

/// Map out of an apex whose injections are jointly surjective on generators.
SesquiFunctor copair(const SesquiFunctor& left, const SesquiFunctor& right,
                     const SesquiFunctor& to_left, const SesquiFunctor& to_right);

Truth is_pushout(const SesquiFunctor& f, const SesquiFunctor& g, const SesquiFunctor& left,
                 const SesquiFunctor& right, std::string* witness = nullptr);

/// Extends a base functor by sending each 2-cell generator to a shortest
/// target word between the image boundaries.  Over a locally indiscrete
/// target that word is the only choice.  Throws InvalidInput if some image
/// boundary pair is not connected.
SesquiFunctor indiscrete_lift(const Functor& f, const HigherPtr& source, const HigherPtr& target);

struct Generation {
  bool generated = true;
  bool bounded = false;
  std::string witness;  // a target generator not reached
};

/// Whether each target generator is a composite of at most `bound` whiskered
/// images of source 2-cells (and their inverses where invertible).
Generation generates_2cells(const SesquiFunctor& f, std::size_t bound = 3);

}  // namespace cocat
