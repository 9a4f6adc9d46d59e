#pragma once

#include <string>
#include <variant>
#include <vector>

#include "cocat/cocategory.hpp"
#include "cocat/tensor.hpp"

namespace cocat {

/// The arrow cocategory 1 => 2 => 3 in Cat: d < c, p < m < q.
CocategoryData<CatWorld> arrow_cocategory();

/// The cocategory 1 => 2 => 3 in Set with d, c the coproduct inclusions.
CocategoryData<SetWorld> set_cocategory();

/// Pointwise tensor of the arrow cocategory with itself, funny or cartesian.
DoubleCocategoryData<CatWorld> arrow_tensor(TensorKind kind);

/// Pointwise Gray tensor of the arrow cocategory (viewed as locally
/// discrete) with itself.
DoubleCocategoryData<HigherWorld> arrow_gray_tensor(TensorKind kind, Flavor flavor = Flavor::TwoCategory);

/// Pointwise product of the Set cocategory with itself.
DoubleCocategoryData<SetWorld> set_product();

/// The pre-double cocategory in sesquicategories whose corner entries up to
/// 2x2 are locally indiscrete, with the remaining corner and last row
/// induced by pushouts.  Carries a separating map into the free grid.
PreDoubleCocategoryData<HigherWorld> indiscrete_instance();

/// Underlying categories and functors.
DoubleCocategoryData<CatWorld> underlying(const DoubleCocategoryData<HigherWorld>& x);

/// The same data with m and p exchanged (the injections are kept).
template <class W>
CocategoryData<W> swap_m_p(CocategoryData<W> x) {
  std::swap(x.m, x.p);
  return x;
}

/// Replaces A3 by the presentation without its relation `index`, retargeting
/// p, m, q and the injections.
CocategoryData<CatWorld> drop_relation(const CocategoryData<CatWorld>& x, std::size_t index);

using StandardInstance =
    std::variant<CocategoryData<SetWorld>, CocategoryData<CatWorld>, DoubleCocategoryData<CatWorld>,
                 DoubleCocategoryData<HigherWorld>, PreDoubleCocategoryData<HigherWorld>>;

/// Names: O, S, S⋆S, S×S, S⊗lS, S⊗pS, I, with ASCII spellings SstarS, SxS,
/// SgraylS, SgraypS.  Throws UnknownName.
StandardInstance standard_instance(const std::string& name);

std::vector<std::string> standard_instance_names();

}  // namespace cocat
