#include "cocat/error.hpp"

#include <cstdlib>

namespace cocat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::CycleWithoutBound: return "CycleWithoutBound";
    case ErrorKind::NonMono: return "NonMono";
    case ErrorKind::BoundaryMismatch: return "BoundaryMismatch";
    case ErrorKind::FlavorMismatch: return "FlavorMismatch";
    case ErrorKind::NotFree: return "NotFree";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::MixedMonoids: return "MixedMonoids";
    case ErrorKind::NoComparison: return "NoComparison";
    case ErrorKind::UnknownCheck: return "UnknownCheck";
    case ErrorKind::ManifestError: return "ManifestError";
    case ErrorKind::GuardViolation: return "GuardViolation";
  }
  return "Error";
}

bool guard_override() {
  const char* v = std::getenv("COCAT_GUARD_OVERRIDE");
  return v != nullptr && std::string_view(v) == "1";
}

void enforce_guard(bool within_limit, ErrorKind kind, const std::string& what) {
  if (!within_limit && !guard_override()) {
    throw Error(kind, what);
  }
}

}  // namespace cocat
