#include "cocat/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

#include "cocat/catalog.hpp"
#include "cocat/error.hpp"
#include "cocat/functor.hpp"
#include "cocat/instances.hpp"
#include "cocat/monoid.hpp"
#include "cocat/search.hpp"
#include "cocat/tensor.hpp"

namespace cocat {

const char* const kToolVersion = "0.1.0";

namespace {

CheckReport outcome(bool holds, const std::string& property, const std::string& detail) {
  CheckReport r;
  if (holds) {
    r.witness = detail;
  } else {
    r.fail(property, detail);
  }
  return r;
}

std::size_t param_size(const Params& p, const std::string& key) {
  const auto& text = p.at(key);
  try {
    std::size_t used = 0;
    auto v = std::stoul(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidInput, "parameter " + key + " must be a non-negative integer, got '" + text + "'");
  }
}

std::size_t diagonal_hom(const Presentation& p) {
  auto c = Category::make(p);
  return c->hom(*c->graph().find_vertex("(0,0)"), *c->graph().find_vertex("(1,1)")).size();
}

CheckReport hom_check(const Presentation& p, std::size_t expected) {
  auto n = diagonal_hom(p);
  return outcome(n == expected, "diagonal hom has " + std::to_string(expected) + " elements",
                 "|hom((0,0),(1,1))| = " + std::to_string(n));
}

CheckReport completion_check(std::size_t extra, bool cartesian) {
  auto corner = cartesian ? cartesian_tensor(ordinal(2), ordinal(2)) : extra_diagonals(extra);
  auto r = search_double_completions(corner);
  auto classes = up_to_isomorphism(r.completions);
  std::string detail = std::to_string(classes.size()) + " completion(s) up to isomorphism (" +
                       std::to_string(r.completions.size()) + " before identifying corner automorphisms; " +
                       std::to_string(r.boundaries) + " boundaries, " + std::to_string(r.comultiplications) +
                       " comultiplication pairs)";
  if (extra > 0) return outcome(!classes.empty(), "a completion exists", detail);
  bool matches = classes.size() == 1 &&
                 isomorphic(classes[0], arrow_tensor(cartesian ? TensorKind::Cartesian : TensorKind::Funny));
  return outcome(matches, "exactly one completion, the pointwise tensor", detail);
}

CheckReport set_cocategory_check(const Params& p) {
  auto xs = enumerate_set_cocategories(param_size(p, "max_a2"));
  std::size_t distinct_ends = 0;
  bool cokernel_pairs = true;
  for (const auto& x : xs) {
    // A1 = 1: the equaliser of d, c is all of A1 or empty, and A is its cokernel pair.
    if (x.d == x.c) {
      cokernel_pairs = cokernel_pairs && x.a2 == 1 && x.a3 == 1;
    } else {
      ++distinct_ends;
      cokernel_pairs = cokernel_pairs && isomorphic(x, set_cocategory());
    }
  }
  std::string detail = std::to_string(xs.size()) + " classes; " + std::to_string(distinct_ends) +
                       " with d != c, isomorphic to O; the other is the trivial cocategory on 1";
  return outcome(cokernel_pairs && distinct_ends == 1, "every cocategory is the cokernel pair of its equaliser",
                 detail);
}

CheckReport set_double_check(const Params& p) {
  auto r = set_double_completions(param_size(p, "max_corner"));
  auto classes = up_to_isomorphism(r.completions);
  bool unique = classes.size() == 1 && isomorphic(classes[0], set_product());
  return outcome(unique, "the only completion is O x O",
                 std::to_string(classes.size()) + " class(es) among " + std::to_string(r.completions.size()) +
                     " completions");
}

CheckReport gray_cells_check(TensorKind kind, std::size_t cells, bool invertible) {
  auto t = kind == TensorKind::Tensor2 ? tensor2(ordinal(2), ordinal(2)) : gray_tensor(kind, ordinal(2), ordinal(2));
  bool inv_ok = std::all_of(t->cells.begin(), t->cells.end(),
                            [&](const CellGenerator& c) { return c.invertible == invertible; });
  return outcome(t->cells.size() == cells && inv_ok,
                 std::to_string(cells) + (invertible ? " invertible" : " non-invertible") + " generating 2-cell(s)",
                 std::to_string(t->cells.size()) + " generating 2-cell(s) on 2 x 2");
}

CheckReport associator_check(TensorKind kind) {
  auto a = check_associator_extension(kind);
  std::string detail = std::to_string(a.extensions) + " extension(s) among " + std::to_string(a.assignments) +
                       " assignments";
  if (a.extensions == 0 && !a.witness.empty()) detail += "; " + a.witness;
  auto r = outcome(a.extensions > 0, "the associator extends to 2-cells", detail);
  if (a.extensions == 0 && a.bounded) r.record("relation preservation", Truth::Unknown);
  return r;
}

CheckReport free_grid_check(bool invertible, Flavor flavor) {
  auto grid = free_grid(invertible, flavor);
  auto [a, b] = grid_composites(*grid);
  auto eq = twocell_equal(*grid, a, b);
  std::string detail = to_string(eq.verdict) + ": " + to_string(*grid, a) + " vs " + to_string(*grid, b);
  CheckReport r;
  r.record("the two pastings agree", eq.equal() ? Truth::Yes : eq.distinct() ? Truth::No : Truth::Unknown, detail);
  if (eq.equal()) r.witness = to_string(eq.verdict) + " in " + std::to_string(eq.chain.size() - 1) + " move(s)";
  return r;
}

CheckReport obstruction_check(const FinMonoid& m, const Params& p) {
  auto r = search_comultiplication(m, param_size(p, "max_len"));
  std::string detail = to_string(r.verdict) + ": " + r.witness;
  return outcome(r.verdict != ComultiplicationVerdict::None, "a comultiplication satisfying interchange exists",
                 detail);
}

CheckReport endo_check(const FinMonoid& m, const Params& p) {
  auto r = search_endo_2cell(m, param_size(p, "max_len"));
  return outcome(r.verdict == EndoVerdict::OnlyTrivial, "every endo 2-cell of a diagonal is an identity",
                 to_string(r.verdict) + (r.witness.empty() ? "" : ": " + r.witness));
}

CheckReport endofunctor_check() {
  std::string detail;
  bool ok = true;
  for (const auto& name : catalog_names()) {
    auto size = endofunctor_monoid(catalog_category(name)).size();
    bool trivial = size == 1;
    ok = ok && trivial == (name == "0" || name == "1");
    if (name == "2") ok = ok && size == 3;
    detail += name + ":" + std::to_string(size) + " ";
  }
  detail.pop_back();
  return outcome(ok, "only 0 and 1 have a single endofunctor", "|End| " + detail);
}

std::vector<CheckSpec> build_registry() {
  const Params bound6{{"max_len", "6"}};
  std::vector<CheckSpec> xs = {
      {"cocat.S", "arrow cocategory 1 => 2 => 3 in Cat", Verdict::Pass, {},
       [](const Params&) { return check_cocategory(arrow_cocategory()); }},
      {"cocat.O", "cocategory O in Set", Verdict::Pass, {},
       [](const Params&) { return check_cocategory(set_cocategory()); }},
      {"cocat.S.swap_mp", "arrow cocategory with m and p exchanged", Verdict::Fail, {},
       [](const Params&) { return check_cocategory(swap_m_p(arrow_cocategory())); }},
      {"cocat.O.swap_mp", "cocategory O with m and p exchanged", Verdict::Fail, {},
       [](const Params&) { return check_cocategory(swap_m_p(set_cocategory())); }},
      {"cocat.SxS.drop_relation", "last row of S x S with a commuting square removed", Verdict::Fail, {},
       [](const Params&) { return check_cocategory(drop_relation(arrow_tensor(TensorKind::Cartesian).rows[2], 0)); }},
      {"hom.2star2", "funny square: two morphisms (0,0) -> (1,1)", Verdict::Pass, {},
       [](const Params&) { return hom_check(funny_tensor(ordinal(2), ordinal(2)), 2); }},
      {"hom.2times2", "commuting square: one morphism (0,0) -> (1,1)", Verdict::Pass, {},
       [](const Params&) { return hom_check(cartesian_tensor(ordinal(2), ordinal(2)), 1); }},
      {"double.SstarS", "double cocategories in Cat: the funny square", Verdict::Pass, {},
       [](const Params&) { return check_double_cocategory(arrow_tensor(TensorKind::Funny)); }},
      {"double.SxS", "double cocategories in Cat: the cartesian square", Verdict::Pass, {},
       [](const Params&) { return check_double_cocategory(arrow_tensor(TensorKind::Cartesian)); }},
      {"double.OxO", "double cocategories in Set: O x O", Verdict::Pass, {},
       [](const Params&) { return check_double_cocategory(set_product()); }},
      {"double.SgraylS", "lax Gray square of 2-categories", Verdict::Pass, {},
       [](const Params&) { return check_double_cocategory(arrow_gray_tensor(TensorKind::GrayLax)); }},
      {"double.SgraypS", "pseudo Gray square of 2-categories", Verdict::Pass, {},
       [](const Params&) { return check_double_cocategory(arrow_gray_tensor(TensorKind::GrayPseudo)); }},
      {"double.SgraylS.sesqui", "lax Gray square without interchange", Verdict::Fail, {},
       [](const Params&) { return check_double_cocategory(arrow_gray_tensor(TensorKind::GrayLax, Flavor::Sesqui)); }},
      {"double.I", "locally indiscrete pre-double cocategory I", Verdict::Fail, {},
       [](const Params&) { return check_double_cocategory(indiscrete_instance().data); }},
      {"interchange.I", "locally indiscrete pre-double cocategory I: interchange", Verdict::Fail, {},
       [](const Params&) { return check_interchange(indiscrete_instance()); }},
      {"interchange.I1", "underlying categories of I form S star S", Verdict::Pass, {},
       [](const Params&) { return check_double_cocategory(underlying(indiscrete_instance().data)); }},
      {"freegrid.lax.sesqui", "free lax grid, sesquicategory: pasting orders", Verdict::Fail, {},
       [](const Params&) { return free_grid_check(false, Flavor::Sesqui); }},
      {"freegrid.pseudo.sesqui", "free pseudo grid, sesquicategory: pasting orders", Verdict::Fail, {},
       [](const Params&) { return free_grid_check(true, Flavor::Sesqui); }},
      {"freegrid.lax.2cat", "free lax grid, 2-category: pasting orders", Verdict::Pass, {},
       [](const Params&) { return free_grid_check(false, Flavor::TwoCategory); }},
      {"freegrid.pseudo.2cat", "free pseudo grid, 2-category: pasting orders", Verdict::Pass, {},
       [](const Params&) { return free_grid_check(true, Flavor::TwoCategory); }},
      {"search.X1", "completions of S with one extra diagonal", Verdict::Fail, {},
       [](const Params&) { return completion_check(1, false); }},
      {"search.X2", "completions of S with two extra diagonals", Verdict::Fail, {},
       [](const Params&) { return completion_check(2, false); }},
      {"search.star", "completions of S over the funny square", Verdict::Pass, {},
       [](const Params&) { return completion_check(0, false); }},
      {"search.times", "completions of S over the commuting square", Verdict::Pass, {},
       [](const Params&) { return completion_check(0, true); }},
      {"setcocat.O", "cocategories in Set are cokernel pairs of their equalisers", Verdict::Pass,
       {{"max_a2", "4"}}, set_cocategory_check},
      {"setcocat.double", "double cocategories in Set over O: O x O", Verdict::Pass, {{"max_corner", "4"}},
       set_double_check},
      {"tensor.2l2", "lax Gray tensor 2 x 2: one non-invertible 2-cell", Verdict::Pass, {},
       [](const Params&) { return gray_cells_check(TensorKind::GrayLax, 1, false); }},
      {"tensor.2p2", "pseudo Gray tensor 2 x 2: one invertible 2-cell", Verdict::Pass, {},
       [](const Params&) { return gray_cells_check(TensorKind::GrayPseudo, 1, true); }},
      {"tensor.2t2", "cokernel pair tensor 2 x 2: two 2-cells", Verdict::Pass, {},
       [](const Params&) { return gray_cells_check(TensorKind::Tensor2, 2, false); }},
      {"assoc.funny", "associator of the funny tensor", Verdict::Pass, {},
       [](const Params&) { return associator_check(TensorKind::Funny); }},
      {"assoc.lax", "associator of the lax Gray tensor", Verdict::Pass, {},
       [](const Params&) { return associator_check(TensorKind::GrayLax); }},
      {"assoc.pseudo", "associator of the pseudo Gray tensor", Verdict::Pass, {},
       [](const Params&) { return associator_check(TensorKind::GrayPseudo); }},
      {"assoc.oplax", "associator of the oplax Gray tensor", Verdict::Pass, {},
       [](const Params&) { return associator_check(TensorKind::GrayOplax); }},
      {"assoc.tensor2", "associator of the cokernel pair tensor", Verdict::Fail, {},
       [](const Params&) { return associator_check(TensorKind::Tensor2); }},
      {"endofunctors.catalog", "endofunctors of small categories", Verdict::Pass, {},
       [](const Params&) { return endofunctor_check(); }},
  };
  for (const auto& [name, monoid] : monoid_catalog()) {
    const Verdict expected = monoid.trivial() ? Verdict::Pass : Verdict::Fail;
    xs.push_back({"obstruction." + name, "comultiplication on the hom monoid " + name, expected, bound6,
                  [m = monoid](const Params& p) { return obstruction_check(m, p); }});
    xs.push_back({"endo2cell." + name, "endo 2-cells of a diagonal valued in " + name, Verdict::Pass, bound6,
                  [m = monoid](const Params& p) { return endo_check(m, p); }});
  }
  std::sort(xs.begin(), xs.end(), [](const CheckSpec& a, const CheckSpec& b) { return a.id < b.id; });
  return xs;
}

}  // namespace

const std::vector<CheckSpec>& check_registry() {
  static const std::vector<CheckSpec> registry = build_registry();
  return registry;
}

const CheckSpec& find_check(const std::string& id) {
  const auto& xs = check_registry();
  auto it = std::find_if(xs.begin(), xs.end(), [&](const CheckSpec& c) { return c.id == id; });
  if (it == xs.end()) throw Error(ErrorKind::UnknownCheck, "no check with ID '" + id + "'");
  return *it;
}

CheckReport run_check(const std::string& id, const Params& params) {
  const auto& spec = find_check(id);
  Params merged = spec.defaults;
  for (const auto& [k, v] : params) {
    if (!merged.count(k)) throw Error(ErrorKind::InvalidInput, "check " + id + " takes no parameter '" + k + "'");
    merged[k] = v;
  }
  CheckReport r = spec.run(merged);
  r.id = spec.id;
  r.citation = spec.citation;
  return r;
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "pass") return Verdict::Pass;
  if (s == "fail") return Verdict::Fail;
  if (s == "bounded") return Verdict::Bounded;
  throw Error(ErrorKind::InvalidInput, "unknown verdict '" + s + "'");
}

SuiteManifest default_manifest() {
  SuiteManifest m;
  for (const auto& c : check_registry()) m.entries.push_back({c.id, c.expected, c.defaults});
  return m;
}

Json manifest_to_json(const SuiteManifest& m) {
  Json checks = Json::array();
  for (const auto& e : m.entries) {
    Json params = Json::object();
    for (const auto& [k, v] : e.params) params[k] = v;
    checks.push_back(Json{{"id", e.id}, {"expected", to_string(e.expected)}, {"params", params}});
  }
  return Json{{"checks", checks}};
}

SuiteManifest manifest_from_json(const Json& j) {
  SuiteManifest m;
  try {
    for (const auto& c : j.at("checks")) {
      ManifestEntry e;
      e.id = c.at("id").get<std::string>();
      const auto& spec = find_check(e.id);
      e.expected = c.contains("expected") ? verdict_from_string(c.at("expected").get<std::string>()) : spec.expected;
      e.params = spec.defaults;
      if (c.contains("params")) {
        for (const auto& [k, v] : c.at("params").items()) {
          if (!spec.defaults.count(k)) throw Error(ErrorKind::ManifestError, e.id + " takes no parameter '" + k + "'");
          e.params[k] = v.is_string() ? v.get<std::string>() : v.dump();
        }
      }
      m.entries.push_back(std::move(e));
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ManifestError, std::string("malformed manifest: ") + e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ManifestError) throw;
    throw Error(ErrorKind::ManifestError, e.what());
  }
  return m;
}

std::string manifest_hash(const SuiteManifest& m) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : dump(manifest_to_json(m))) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

std::size_t SuiteReport::met() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const SuiteEntry& e) { return e.met(); }));
}

SuiteReport run_suite(const SuiteManifest& m, std::size_t jobs) {
  SuiteReport report{kToolVersion, manifest_hash(m), std::vector<SuiteEntry>(m.entries.size())};
  std::vector<std::exception_ptr> errors(m.entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < m.entries.size(); k = next++) {
      const auto& e = m.entries[k];
      auto start = std::chrono::steady_clock::now();
      try {
        report.entries[k].report = run_check(e.id, e.params);
      } catch (...) {
        errors[k] = std::current_exception();
      }
      report.entries[k].expected = e.expected;
      report.entries[k].elapsed_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
  };
  std::vector<std::jthread> pool;
  for (std::size_t t = 1; t < std::max<std::size_t>(jobs, 1); ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  for (const auto& err : errors) {
    if (!err) continue;
    try {
      std::rethrow_exception(err);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::SearchSpaceTooLarge || e.kind() == ErrorKind::GuardViolation) {
        throw Error(ErrorKind::GuardViolation, e.what());
      }
      throw;
    }
  }
  std::stable_sort(report.entries.begin(), report.entries.end(),
                   [](const SuiteEntry& a, const SuiteEntry& b) { return a.report.id < b.report.id; });
  return report;
}

Json check_report_to_json(const CheckReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back(Json{{"axiom", f.axiom}, {"witness", f.witness}});
  return Json{{"id", r.id},         {"citation", r.citation}, {"verdict", to_string(r.verdict)},
              {"witness", r.witness}, {"failures", failures},   {"undecided", r.undecided}};
}

Json report_to_json(const SuiteReport& r) {
  Json checks = Json::array();
  for (const auto& e : r.entries) {
    Json j = check_report_to_json(e.report);
    j["expected"] = to_string(e.expected);
    j["met"] = e.met();
    checks.push_back(std::move(j));
  }
  return Json{{"tool", "cocat"},
              {"version", r.version},
              {"manifest_hash", r.manifest_hash},
              {"summary", Json{{"checks", r.entries.size()}, {"met", r.met()}, {"mismatched", r.entries.size() - r.met()}}},
              {"checks", checks}};
}

Json timing_to_json(const SuiteReport& r) {
  Json times = Json::object();
  for (const auto& e : r.entries) times[e.report.id] = e.elapsed_ms;
  return Json{{"manifest_hash", r.manifest_hash}, {"elapsed_ms", times}};
}

}  // namespace cocat
