#pragma once

// Shared machinery for the presentation-level pushouts.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cocat/functor.hpp"

namespace cocat {

struct Glued {
  Graph graph;
  std::vector<VertexId> left_vertices;
  std::vector<VertexId> right_vertices;
  std::vector<EdgeId> left_edges;
  std::vector<EdgeId> right_edges;
};

/// Disjoint union of b and c with the given vertex and edge identifications.
/// Each class is named after its first member (b before c, in id order).
Glued glue(const Graph& b, const Graph& c,
           const std::vector<std::pair<VertexId, VertexId>>& same_vertices,
           const std::vector<std::pair<EdgeId, EdgeId>>& same_edges);

/// `label`, primed until `taken` rejects it.
std::string fresh_label(const std::string& label,
                        const std::function<bool(const std::string&)>& taken);

Path relabel(const Path& p, const std::vector<VertexId>& vertices, const std::vector<EdgeId>& edges);

/// The functor sending each generator to a single generator of the target.
Functor inclusion(const CategoryPtr& source, const CategoryPtr& target,
                  const std::vector<VertexId>& vertices, const std::vector<EdgeId>& edges);

}  // namespace cocat
