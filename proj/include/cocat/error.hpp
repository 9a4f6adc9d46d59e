#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cocat {

enum class ErrorKind {
  InvalidInput,
  CycleWithoutBound,
  NonMono,
  BoundaryMismatch,
  FlavorMismatch,
  NotFree,
  UnknownName,
  SearchSpaceTooLarge,
  MixedMonoids,
  NoComparison,
  UnknownCheck,
  ManifestError,
  GuardViolation,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// True when COCAT_GUARD_OVERRIDE=1 is set; size guards are then skipped.
bool guard_override();

/// Throws SearchSpaceTooLarge (or GuardViolation) unless the override is set.
void enforce_guard(bool within_limit, ErrorKind kind, const std::string& what);

}  // namespace cocat
