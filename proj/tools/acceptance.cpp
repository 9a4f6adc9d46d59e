// One line per acceptance criterion.  Exit 0 iff every criterion passes,
// except those named with --known-deviation, which must still fail.
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "cocat/catalog.hpp"
#include "cocat/functor.hpp"
#include "cocat/instances.hpp"
#include "cocat/monoid.hpp"
#include "cocat/search.hpp"
#include "cocat/tensor.hpp"
#include "cocat/verify.hpp"

using namespace cocat;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool holds, const std::string& what) {
    ok = ok && holds;
    detail += (detail.empty() ? "" : "; ") + std::string(holds ? "" : "NOT ") + what;
  }
};

struct Criterion {
  std::string name;
  double limit_s;
  std::function<Outcome()> run;
};

bool holds(const std::string& id) { return run_check(id).verdict == Verdict::Pass; }
bool fails_with_witness(const std::string& id) {
  auto r = run_check(id);
  return r.verdict == Verdict::Fail && !r.witness.empty();
}

std::size_t diagonal_hom(const Presentation& p) {
  auto c = Category::make(p);
  return c->hom(*c->graph().find_vertex("(0,0)"), *c->graph().find_vertex("(1,1)")).size();
}

std::vector<Criterion> criteria() {
  return {
      {"cocategory-axioms", 1.0,
       [] {
         Outcome o;
         o.require(holds("cocat.S") && holds("cocat.O"), "S and O pass every axiom");
         o.require(fails_with_witness("cocat.S.swap_mp") && fails_with_witness("cocat.O.swap_mp"),
                   "swapped m/p fail with witnesses");
         o.require(fails_with_witness("cocat.SxS.drop_relation"), "dropped relation fails with a witness");
         return o;
       }},
      {"cat-double-cocategories", 1.0,
       [] {
         Outcome o;
         o.require(holds("double.SstarS") && holds("double.SxS"), "funny and cartesian squares pass");
         o.require(diagonal_hom(funny_tensor(ordinal(2), ordinal(2))) == 2, "2*2 diagonal hom = 2");
         o.require(diagonal_hom(cartesian_tensor(ordinal(2), ordinal(2))) == 1, "2x2 diagonal hom = 1");
         return o;
       }},
      {"completion-search", 60.0,
       [] {
         Outcome o;
         o.require(search_double_completions(extra_diagonals(1)).completions.empty(), "X1 has no completion");
         o.require(search_double_completions(extra_diagonals(2)).completions.empty(), "X2 has no completion");
         auto star = up_to_isomorphism(search_double_completions(extra_diagonals(0)).completions);
         auto times =
             up_to_isomorphism(search_double_completions(cartesian_tensor(ordinal(2), ordinal(2))).completions);
         o.require(star.size() == 1, "one completion over 2*2, " + std::to_string(star.size()) + " found");
         o.require(times.size() == 1, "one completion over 2x2, " + std::to_string(times.size()) + " found");
         return o;
       }},
      {"set-cocategories", 60.0,
       [] {
         Outcome o;
         auto xs = enumerate_set_cocategories(4);
         o.require(xs.size() == 1 && isomorphic(xs[0], set_cocategory()),
                   "exactly one Set cocategory with |A2| <= 4, " + std::to_string(xs.size()) + " found");
         auto doubles = up_to_isomorphism(set_double_completions(4).completions);
         o.require(doubles.size() == 1 && isomorphic(doubles[0], set_product()), "the only completion over O is OxO");
         return o;
       }},
      {"gray-tensors", 120.0,
       [] {
         Outcome o;
         auto lax = gray_tensor(TensorKind::GrayLax, ordinal(2), ordinal(2));
         auto pseudo = gray_tensor(TensorKind::GrayPseudo, ordinal(2), ordinal(2));
         o.require(lax->cells.size() == 1 && lax->none_invertible(), "2 lax 2: one non-invertible 2-cell");
         o.require(pseudo->cells.size() == 1 && pseudo->all_invertible(), "2 pseudo 2: one invertible 2-cell");
         o.require(tensor2(ordinal(2), ordinal(2))->cells.size() == 2, "2 tensor2 2: two 2-cells");
         o.require(holds("double.SgraylS") && holds("double.SgraypS"), "Gray squares pass in 2-categories");
         o.require(check_associator_extension(TensorKind::Tensor2).extensions == 0, "tensor2 associator has no extension");
         o.require(check_associator_extension(TensorKind::GrayLax).extensions >= 1, "lax associator extends");
         return o;
       }},
      {"interchange-core", 5.0,
       [] {
         Outcome o;
         auto r = run_check("interchange.I");
         o.require(r.verdict == Verdict::Fail && r.witness.find("distinct-by-normal-form") != std::string::npos,
                   "interchange of I fails with a normal-form witness");
         for (bool inv : {false, true}) {
           auto sesqui = free_grid(inv, Flavor::Sesqui);
           auto [a, b] = grid_composites(*sesqui);
           o.require(!(a == b) && twocell_equal(*sesqui, a, b).verdict == CellVerdict::DistinctByNormalForm,
                     std::string(inv ? "pseudo" : "lax") + " free grid: distinct reduced words");
           auto two = free_grid(inv, Flavor::TwoCategory);
           auto [c, d] = grid_composites(*two);
           o.require(twocell_equal(*two, c, d).equal(), std::string(inv ? "pseudo" : "lax") + " 2-category: equal");
         }
         return o;
       }},
      {"obstruction-searches", 600.0,
       [] {
         Outcome o;
         for (const auto& [name, m] : monoid_catalog()) {
           auto r = search_comultiplication(m, 6);
           auto want = m.trivial() ? ComultiplicationVerdict::UniqueTrivial : ComultiplicationVerdict::None;
           o.require(r.verdict == want, name + " " + to_string(r.verdict));
           o.require(search_endo_2cell(m, 6).verdict == EndoVerdict::OnlyTrivial, name + " endo only-trivial");
         }
         return o;
       }},
      {"endofunctor-monoids", 5.0,
       [] {
         Outcome o;
         for (const auto& name : catalog_names()) {
           auto size = endofunctor_monoid(catalog_category(name)).size();
           bool trivial_expected = name == "0" || name == "1";
           o.require((size == 1) == trivial_expected, "|End(" + name + ")| = " + std::to_string(size));
         }
         o.require(endofunctor_monoid(catalog_category("2")).size() == 3, "|End(2)| = 3");
         return o;
       }},
      {"determinism", 600.0,
       [] {
         Outcome o;
         auto first = dump(report_to_json(run_suite(default_manifest(), 4)));
         auto second = dump(report_to_json(run_suite(default_manifest(), 4)));
         o.require(first == second, "two suite runs give byte-identical reports");
         return o;
       }},
  };
}

}  // namespace

int main(int argc, char** argv) {
  std::set<std::string> known;
  for (int k = 1; k + 1 < argc; ++k) {
    if (std::string(argv[k]) == "--known-deviation") known.insert(argv[++k]);
  }
  bool ok = true;
  for (const auto& c : criteria()) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("threw: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = o.ok && secs < c.limit_s;
    std::cout << (pass ? "PASS " : "FAIL ") << c.name << " (" << secs << " s, limit " << c.limit_s << " s): "
              << o.detail;
    if (known.count(c.name)) std::cout << " [known deviation]";
    std::cout << "\n";
    ok = ok && (known.count(c.name) ? !pass : pass);
  }
  return ok ? 0 : 1;
}
