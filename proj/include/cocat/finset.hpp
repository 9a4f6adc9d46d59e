#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace cocat {

/// A function between finite sets {0..source-1} -> {0..target-1}.
struct FinMap {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> values;

  static FinMap identity(std::size_t n);
  static FinMap constant(std::size_t source, std::size_t target, std::size_t value);

  std::size_t operator()(std::size_t x) const { return values.at(x); }
  bool total() const;
  bool injective() const;
  bool operator==(const FinMap&) const = default;
};

/// Diagrammatic composite: `first` then `second`.
FinMap then(const FinMap& first, const FinMap& second);

std::string to_string(const FinMap& f);

struct SetPushout {
  std::size_t apex = 0;
  FinMap left;
  FinMap right;
};

/// Pushout of B <-f- A -g-> C.  Elements of B come first, then the elements
/// of C not identified with one of B.
SetPushout pushout_set(const FinMap& f, const FinMap& g);

/// Map out of an apex whose injections `left`, `right` are jointly surjective.
FinMap copair(const FinMap& left, const FinMap& right, const FinMap& to_left, const FinMap& to_right);

/// Whether (left, right) exhibits its common target as a pushout of (f, g).
bool is_pushout(const FinMap& f, const FinMap& g, const FinMap& left, const FinMap& right,
                std::string* witness = nullptr);

}  // namespace cocat
