#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cocat/cocategory.hpp"
#include "cocat/io.hpp"

namespace cocat {

using Params = std::map<std::string, std::string>;

struct CheckSpec {
  std::string id;
  std::string citation;
  Verdict expected = Verdict::Pass;
  Params defaults;  // the accepted parameters and their default values
  std::function<CheckReport(const Params&)> run;
};

/// Every registered check, sorted by ID.
const std::vector<CheckSpec>& check_registry();
/// Throws UnknownCheck.
const CheckSpec& find_check(const std::string& id);

/// Runs one check with `params` over its defaults.  Throws UnknownCheck, and
/// InvalidInput for an unknown or malformed parameter.
CheckReport run_check(const std::string& id, const Params& params = {});

struct ManifestEntry {
  std::string id;
  Verdict expected = Verdict::Pass;
  Params params;
};

struct SuiteManifest {
  std::vector<ManifestEntry> entries;
};

/// Every registered check with its expected verdict and default parameters.
SuiteManifest default_manifest();
Json manifest_to_json(const SuiteManifest& m);
/// Throws ManifestError for unknown IDs, verdicts or parameters.
SuiteManifest manifest_from_json(const Json& j);
/// FNV-1a (64 bit) of the canonical manifest text, as "fnv1a64:<hex>".
std::string manifest_hash(const SuiteManifest& m);

struct SuiteEntry {
  CheckReport report;
  Verdict expected = Verdict::Pass;
  double elapsed_ms = 0;
  bool met() const { return report.verdict == expected; }
};

struct SuiteReport {
  std::string version;
  std::string manifest_hash;
  std::vector<SuiteEntry> entries;  // sorted by check ID
  std::size_t met() const;
  bool all_met() const { return met() == entries.size(); }
};

/// Runs the manifest's checks on up to `jobs` threads.  Guard violations
/// inside a check surface as GuardViolation.
SuiteReport run_suite(const SuiteManifest& m, std::size_t jobs = 1);

/// The canonical report: no timings, fixed order, byte-identical across runs.
Json report_to_json(const SuiteReport& r);
/// Elapsed times per check, kept apart from the canonical report.
Json timing_to_json(const SuiteReport& r);

Json check_report_to_json(const CheckReport& r);
Verdict verdict_from_string(const std::string& s);

extern const char* const kToolVersion;

}  // namespace cocat
