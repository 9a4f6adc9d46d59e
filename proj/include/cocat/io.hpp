#pragma once

#include <string>

#include "json.hpp"
#include "cocat/higher.hpp"
#include "cocat/monoid.hpp"
#include "cocat/presentation.hpp"

namespace cocat {

using Json = nlohmann::ordered_json;

Json presentation_to_json(const Presentation& p);
/// Throws InvalidInput on malformed documents.
Presentation presentation_from_json(const Json& j);

/// The presentation fields of the base plus `flavor`, `twocells` and
/// `twocell_relations`.
Json higher_to_json(const HigherPresentation& hp);
HigherPtr higher_from_json(const Json& j);

Json twocell_word_to_json(const HigherPresentation& hp, const TwoCellWord& w);
TwoCellWord twocell_word_from_json(const HigherPresentation& hp, const Json& j);

/// `elements`, `unit` and a row-major `table` of element names (indices are
/// accepted on input).
Json monoid_to_json(const FinMonoid& m);
FinMonoid monoid_from_json(const Json& j);

Json path_to_json(const Graph& g, const Path& p);
Path path_from_json(const Graph& g, const Json& j);

/// Canonical text: two-space indentation and a trailing newline.
std::string dump(const Json& j);
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace cocat
