#include <fstream>
#include <sstream>

#include "cocat/error.hpp"
#include "cocat/verify.hpp"
#include "doctest.h"

using namespace cocat;

namespace {

SuiteManifest only(std::initializer_list<std::string> ids) {
  SuiteManifest m;
  for (const auto& id : ids) m.entries.push_back({id, find_check(id).expected, find_check(id).defaults});
  return m;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("registry is sorted and every ID resolves") {
  const auto& xs = check_registry();
  REQUIRE_FALSE(xs.empty());
  for (std::size_t k = 1; k < xs.size(); ++k) CHECK(xs[k - 1].id < xs[k].id);
  for (const auto& c : xs) {
    CHECK(&find_check(c.id) == &c);
    CHECK_FALSE(c.citation.empty());
  }
  CHECK(kind_of([] { find_check("no.such.check"); }) == ErrorKind::UnknownCheck);
}

TEST_CASE("every citation appears in the shipped table") {
  std::ifstream in(COCAT_SOURCE_DIR "/docs/citations.md");
  REQUIRE(in);
  std::stringstream text;
  text << in.rdbuf();
  for (const auto& c : check_registry()) {
    CAPTURE(c.id);
    CHECK(text.str().find("| `" + c.id + "` | " + c.citation + " |") != std::string::npos);
  }
}

TEST_CASE("single checks") {
  auto r = run_check("interchange.I");
  CHECK(r.verdict == Verdict::Fail);
  CHECK(r.witness.find("distinct-by-normal-form") != std::string::npos);
  CHECK(r.citation == find_check("interchange.I").citation);
  CHECK(run_check("double.SxS").verdict == Verdict::Pass);
  CHECK(run_check("search.X1").witness.find(": 0 completion(s)") != std::string::npos);
  CHECK(run_check("obstruction.Z2", {{"max_len", "4"}}).verdict == Verdict::Fail);
  CHECK(kind_of([] { run_check("obstruction.Z2", {{"depth", "4"}}); }) == ErrorKind::InvalidInput);
  CHECK(kind_of([] { run_check("obstruction.Z2", {{"max_len", "four"}}); }) == ErrorKind::InvalidInput);
}

TEST_CASE("the default manifest meets every expectation") {
  auto report = run_suite(default_manifest(), 4);
  CHECK(report.entries.size() == check_registry().size());
  for (const auto& e : report.entries) {
    CAPTURE(e.report.id);
    CHECK(e.met());
  }
  CHECK(report.all_met());
}

TEST_CASE("reports are byte-identical across runs and job counts") {
  auto m = only({"cocat.S", "double.I", "search.star", "obstruction.Z3", "assoc.tensor2"});
  auto a = dump(report_to_json(run_suite(m, 1)));
  auto b = dump(report_to_json(run_suite(m, 3)));
  CHECK(a == b);
  CHECK(a.find("elapsed") == std::string::npos);
  CHECK(timing_to_json(run_suite(m)).at("elapsed_ms").size() == 5);
}

TEST_CASE("an inverted expectation is a mismatch") {
  auto m = only({"double.SstarS"});
  m.entries[0].expected = Verdict::Fail;
  auto report = run_suite(m);
  CHECK_FALSE(report.all_met());
  CHECK(report_to_json(report)["summary"]["mismatched"] == 1);
}

TEST_CASE("an empty manifest gives an empty report") {
  auto report = run_suite(SuiteManifest{});
  CHECK(report.entries.empty());
  CHECK(report.all_met());
  CHECK(report_to_json(report)["checks"].empty());
}

TEST_CASE("manifest files") {
  auto m = default_manifest();
  auto back = manifest_from_json(manifest_to_json(m));
  CHECK(manifest_hash(back) == manifest_hash(m));
  CHECK(manifest_hash(m).rfind("fnv1a64:", 0) == 0);
  CHECK(manifest_hash(only({"cocat.S"})) != manifest_hash(only({"cocat.O"})));

  Json defaults = {{"checks", {{{"id", "obstruction.Z2"}}}}};
  auto d = manifest_from_json(defaults);
  CHECK(d.entries[0].expected == Verdict::Fail);
  CHECK(d.entries[0].params.at("max_len") == "6");
  Json numeric = {{"checks", {{{"id", "obstruction.Z2"}, {"params", {{"max_len", 5}}}}}}};
  CHECK(manifest_from_json(numeric).entries[0].params.at("max_len") == "5");

  for (const Json& bad : {Json{{"checks", {{{"id", "nope"}}}}}, Json{{"entries", Json::array()}},
                          Json{{"checks", {{{"id", "cocat.S"}, {"expected", "maybe"}}}}},
                          Json{{"checks", {{{"id", "cocat.S"}, {"params", {{"k", "1"}}}}}}}}) {
    CAPTURE(bad.dump());
    CHECK(kind_of([&] { manifest_from_json(bad); }) == ErrorKind::ManifestError);
  }
}

TEST_CASE("guard violations surface from the suite") {
  SuiteManifest m{{{"obstruction.Z2", Verdict::Fail, {{"max_len", "9"}}}}};
  if (!guard_override()) CHECK(kind_of([&] { run_suite(m); }) == ErrorKind::GuardViolation);
}
