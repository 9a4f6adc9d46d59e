#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace cocat {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  std::string name;
  VertexId src;
  VertexId tgt;
};

/// A finite directed multigraph with named vertices and edges.
class Graph {
 public:
  VertexId add_vertex(const std::string& label);
  EdgeId add_edge(const std::string& name, VertexId src, VertexId tgt);
  EdgeId add_edge(const std::string& name, const std::string& src, const std::string& tgt);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& vertex(VertexId v) const { return vertices_.at(v); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::optional<VertexId> find_vertex(const std::string& label) const;
  std::optional<EdgeId> find_edge(const std::string& name) const;
  VertexId vertex_id(const std::string& label) const;
  EdgeId edge_id(const std::string& name) const;

  std::vector<EdgeId> out_edges(VertexId v) const;
  std::vector<EdgeId> in_edges(VertexId v) const;

  bool is_acyclic() const;
  /// Length of the longest directed path; only meaningful for acyclic graphs.
  std::size_t longest_path() const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
};

inline bool operator==(const Edge& a, const Edge& b) {
  return a.name == b.name && a.src == b.src && a.tgt == b.tgt;
}

/// A composable sequence of edges, read left to right (first edge first).
/// The empty sequence is the identity at `start`.
struct Path {
  VertexId start = 0;
  VertexId finish = 0;
  std::vector<EdgeId> edges;

  static Path identity(VertexId v) { return Path{v, v, {}}; }
  static Path of_edge(const Graph& g, EdgeId e) {
    return Path{g.edge(e).src, g.edge(e).tgt, {e}};
  }

  std::size_t length() const { return edges.size(); }
  bool empty() const { return edges.empty(); }

  auto operator<=>(const Path&) const = default;
  bool operator==(const Path&) const = default;
};

/// Diagrammatic composite: `a` then `b`.  Throws InvalidInput unless a.finish == b.start.
Path concat(const Path& a, const Path& b);

/// Sub-path of `p` covering edges [from, to).
Path subpath(const Graph& g, const Path& p, std::size_t from, std::size_t to);

/// Checks the edge chain is composable and the endpoints are right.
bool well_formed(const Graph& g, const Path& p);

Path make_path(const Graph& g, const std::string& start, const std::vector<std::string>& edges);

std::string to_string(const Graph& g, const Path& p);

/// Paths of length <= bound from every vertex, grouped by nothing; ordered by
/// length then lexicographically by edge id.
std::vector<Path> enumerate_paths(const Graph& g, std::size_t bound);

/// Number of directed paths a -> b in an acyclic graph (dynamic programming).
std::uint64_t count_paths(const Graph& g, VertexId a, VertexId b);

}  // namespace cocat
