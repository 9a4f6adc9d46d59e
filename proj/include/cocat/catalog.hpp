#pragma once

#include <string>
#include <vector>

#include "cocat/presentation.hpp"

namespace cocat {

/// The ordinal n as a free category: objects "0".."n-1" and one generator
/// per consecutive pair.  Generators are named "f", "g", "h", ... in order.
Presentation ordinal(std::size_t n);

/// n objects, no arrows.
Presentation discrete(std::size_t n);

/// Two objects with mutually inverse arrows u and v.  Cyclic, so it needs a
/// bound when turned into a Category.
Presentation walking_iso();

/// One object "*" with a generator "g" subject to g^n = id.
Presentation cyclic_group(std::size_t n);

/// Small catalog categories by name: "0", "1", "2", "3", "discrete2",
/// "walking_iso", "Z2".  Throws UnknownName.
CategoryPtr catalog_category(const std::string& name);

std::vector<std::string> catalog_names();

}  // namespace cocat
