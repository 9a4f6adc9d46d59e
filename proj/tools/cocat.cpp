#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "cocat/error.hpp"
#include "cocat/io.hpp"
#include "cocat/monoid.hpp"
#include "cocat/tensor.hpp"
#include "cocat/verify.hpp"

using namespace cocat;

namespace {

constexpr int kMismatch = 1;
constexpr int kUsage = 2;

void print_entry(const CheckReport& r, Verdict expected) {
  const bool met = r.verdict == expected;
  std::cout << (met ? "ok       " : "MISMATCH ") << r.id << "  " << to_string(r.verdict) << " (expected "
            << to_string(expected) << ")";
  if (!r.witness.empty()) std::cout << "\n         " << r.witness;
  std::cout << "\n";
}

int verify_all(const std::string& out, std::size_t jobs, const std::string& manifest_path) {
  auto manifest = manifest_path.empty() ? default_manifest() : manifest_from_json(read_json_file(manifest_path));
  auto report = run_suite(manifest, jobs);
  for (const auto& e : report.entries) print_entry(e.report, e.expected);
  std::cout << report.met() << "/" << report.entries.size() << " expectations met (" << report.manifest_hash << ")\n";
  if (!out.empty()) {
    write_text_file(out, dump(report_to_json(report)));
    write_text_file(out + ".timing.json", dump(timing_to_json(report)));
  }
  return report.all_met() ? 0 : kMismatch;
}

int verify_check(const std::string& id, const std::vector<std::string>& raw) {
  Params params;
  for (const auto& kv : raw) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw Error(ErrorKind::InvalidInput, "expected k=v, got '" + kv + "'");
    params[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  auto r = run_check(id, params);
  print_entry(r, find_check(id).expected);
  if (r.failures.size() > 1)
    for (const auto& f : r.failures) std::cout << "  failed: " << f.axiom << ": " << f.witness << "\n";
  for (const auto& u : r.undecided) std::cout << "  undecided: " << u << "\n";
  return r.verdict == find_check(id).expected ? 0 : kMismatch;
}

int verify_list() {
  for (const auto& c : check_registry()) {
    std::cout << c.id << "  [" << to_string(c.expected) << "]  " << c.citation;
    for (const auto& [k, v] : c.defaults) std::cout << "  " << k << "=" << v;
    std::cout << "\n";
  }
  return 0;
}

int run_tensor(const std::string& kind_name, const std::string& a_path, const std::string& b_path,
               const std::string& out) {
  const auto kind = tensor_kind_from_string(kind_name);
  const auto a = read_json_file(a_path);
  const auto b = read_json_file(b_path);
  Json result;
  if (a.contains("twocells") || b.contains("twocells")) {
    result = higher_to_json(*tensor_higher(kind, higher_from_json(a), higher_from_json(b)));
  } else if (kind == TensorKind::Funny) {
    result = presentation_to_json(funny_tensor(presentation_from_json(a), presentation_from_json(b)));
  } else if (kind == TensorKind::Cartesian) {
    result = presentation_to_json(cartesian_tensor(presentation_from_json(a), presentation_from_json(b)));
  } else {
    result = higher_to_json(*tensor(kind, presentation_from_json(a), presentation_from_json(b)));
  }
  write_text_file(out, dump(result));
  std::cout << "wrote " << out << "\n";
  return 0;
}

int run_obstruction(const std::string& path, std::size_t max_len) {
  const auto m = monoid_from_json(read_json_file(path));
  const auto r = search_comultiplication(m, max_len);
  std::cout << "comultiplication: " << to_string(r.verdict) << "\n";
  if (!r.witness.empty()) std::cout << "  " << r.witness << "\n";
  std::cout << "  words " << r.stats.words << ", candidates " << r.stats.candidates << ", pairs " << r.stats.pairs
            << ", consistent pairs " << r.stats.consistent_pairs << "\n";
  const auto e = search_endo_2cell(m, max_len);
  std::cout << "endo 2-cells: " << to_string(e.verdict) << "\n";
  if (!e.witness.empty()) std::cout << "  " << e.witness << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite checks for cocategories, double cocategories and tensor products of categories"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Run registered checks");
  verify->require_subcommand(1);
  std::string out, manifest;
  std::size_t jobs = 1;
  auto* all = verify->add_subcommand("all", "Run every check in the manifest");
  all->add_option("--out", out, "Write the canonical JSON report here (timings go to <out>.timing.json)");
  all->add_option("--jobs", jobs, "Checks run concurrently")->check(CLI::PositiveNumber);
  all->add_option("--manifest", manifest, "Manifest JSON (default: every registered check)")->check(CLI::ExistingFile);
  std::string id;
  std::vector<std::string> params;
  auto* check = verify->add_subcommand("check", "Run one check");
  check->add_option("id", id, "Check ID")->required();
  check->add_option("--param", params, "Parameter override k=v");
  auto* list = verify->add_subcommand("list", "List registered checks");

  std::string kind, a_path, b_path, tensor_out;
  auto* tensor_cmd = app.add_subcommand("tensor", "Tensor two presentations");
  tensor_cmd->add_option("--kind", kind, "funny, cartesian, gray_lax, gray_pseudo, gray_oplax or tensor2")->required();
  tensor_cmd->add_option("a", a_path)->required()->check(CLI::ExistingFile);
  tensor_cmd->add_option("b", b_path)->required()->check(CLI::ExistingFile);
  tensor_cmd->add_option("-o,--out", tensor_out)->required();

  std::string monoid_path;
  std::size_t max_len = 6;
  auto* obstruction = app.add_subcommand("obstruction", "Search comultiplications on a finite monoid");
  obstruction->add_option("--monoid", monoid_path)->required()->check(CLI::ExistingFile);
  obstruction->add_option("--max-len", max_len, "Longest word considered");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*all) return verify_all(out, jobs, manifest);
    if (*check) return verify_check(id, params);
    if (*list) return verify_list();
    if (*tensor_cmd) return run_tensor(kind, a_path, b_path, tensor_out);
    if (*obstruction) return run_obstruction(monoid_path, max_len);
  } catch (const Error& e) {
    std::cerr << "cocat: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
