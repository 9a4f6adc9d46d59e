#include "cocat/graph.hpp"

#include <algorithm>
#include <functional>

#include "cocat/error.hpp"

namespace cocat {

VertexId Graph::add_vertex(const std::string& label) {
  if (vertex_index_.contains(label)) {
    throw Error(ErrorKind::InvalidInput, "duplicate vertex label '" + label + "'");
  }
  auto id = static_cast<VertexId>(vertices_.size());
  vertices_.push_back(label);
  vertex_index_.emplace(label, id);
  return id;
}

EdgeId Graph::add_edge(const std::string& name, VertexId src, VertexId tgt) {
  if (edge_index_.contains(name)) {
    throw Error(ErrorKind::InvalidInput, "duplicate edge label '" + name + "'");
  }
  if (src >= vertices_.size() || tgt >= vertices_.size()) {
    throw Error(ErrorKind::InvalidInput, "edge '" + name + "' has an undeclared endpoint");
  }
  auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back(Edge{name, src, tgt});
  edge_index_.emplace(name, id);
  return id;
}

EdgeId Graph::add_edge(const std::string& name, const std::string& src, const std::string& tgt) {
  return add_edge(name, vertex_id(src), vertex_id(tgt));
}

std::optional<VertexId> Graph::find_vertex(const std::string& label) const {
  auto it = vertex_index_.find(label);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Graph::find_edge(const std::string& name) const {
  auto it = edge_index_.find(name);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

VertexId Graph::vertex_id(const std::string& label) const {
  auto v = find_vertex(label);
  if (!v) throw Error(ErrorKind::InvalidInput, "unknown vertex '" + label + "'");
  return *v;
}

EdgeId Graph::edge_id(const std::string& name) const {
  auto e = find_edge(name);
  if (!e) throw Error(ErrorKind::InvalidInput, "unknown edge '" + name + "'");
  return *e;
}

std::vector<EdgeId> Graph::out_edges(VertexId v) const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if (edges_[e].src == v) out.push_back(e);
  }
  return out;
}

std::vector<EdgeId> Graph::in_edges(VertexId v) const {
  std::vector<EdgeId> in;
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if (edges_[e].tgt == v) in.push_back(e);
  }
  return in;
}

bool Graph::is_acyclic() const {
  // Kahn's algorithm.
  std::vector<std::size_t> indeg(vertices_.size(), 0);
  for (const auto& e : edges_) ++indeg[e.tgt];
  std::vector<VertexId> ready;
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (indeg[v] == 0) ready.push_back(v);
  }
  std::size_t seen = 0;
  while (!ready.empty()) {
    VertexId v = ready.back();
    ready.pop_back();
    ++seen;
    for (const auto& e : edges_) {
      if (e.src == v && --indeg[e.tgt] == 0) ready.push_back(e.tgt);
    }
  }
  return seen == vertices_.size();
}

std::size_t Graph::longest_path() const {
  std::vector<std::optional<std::size_t>> memo(vertices_.size());
  std::function<std::size_t(VertexId)> longest = [&](VertexId v) -> std::size_t {
    if (memo[v]) return *memo[v];
    std::size_t best = 0;
    for (const auto& e : edges_) {
      if (e.src == v) best = std::max(best, 1 + longest(e.tgt));
    }
    memo[v] = best;
    return best;
  };
  std::size_t best = 0;
  for (VertexId v = 0; v < vertices_.size(); ++v) best = std::max(best, longest(v));
  return best;
}

bool operator==(const Graph& a, const Graph& b) {
  return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
}

Path concat(const Path& a, const Path& b) {
  if (a.finish != b.start) {
    throw Error(ErrorKind::InvalidInput, "paths are not composable");
  }
  Path out{a.start, b.finish, a.edges};
  out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
  return out;
}

Path subpath(const Graph& g, const Path& p, std::size_t from, std::size_t to) {
  Path out;
  out.start = from == 0 ? p.start : g.edge(p.edges[from - 1]).tgt;
  out.finish = out.start;
  for (std::size_t k = from; k < to; ++k) {
    out.edges.push_back(p.edges[k]);
    out.finish = g.edge(p.edges[k]).tgt;
  }
  return out;
}

bool well_formed(const Graph& g, const Path& p) {
  if (p.start >= g.vertex_count() || p.finish >= g.vertex_count()) return false;
  VertexId at = p.start;
  for (EdgeId e : p.edges) {
    if (e >= g.edge_count() || g.edge(e).src != at) return false;
    at = g.edge(e).tgt;
  }
  return at == p.finish;
}

Path make_path(const Graph& g, const std::string& start, const std::vector<std::string>& edges) {
  Path p = Path::identity(g.vertex_id(start));
  for (const auto& name : edges) {
    EdgeId e = g.edge_id(name);
    if (g.edge(e).src != p.finish) {
      throw Error(ErrorKind::InvalidInput, "edge '" + name + "' does not continue the path");
    }
    p.edges.push_back(e);
    p.finish = g.edge(e).tgt;
  }
  return p;
}

std::string to_string(const Graph& g, const Path& p) {
  if (p.empty()) return "id[" + g.vertex(p.start) + "]";
  std::string out;
  for (std::size_t k = 0; k < p.edges.size(); ++k) {
    if (k) out += ";";
    out += g.edge(p.edges[k]).name;
  }
  return out;
}

std::vector<Path> enumerate_paths(const Graph& g, std::size_t bound) {
  std::vector<Path> out;
  std::vector<Path> frontier;
  for (VertexId v = 0; v < g.vertex_count(); ++v) frontier.push_back(Path::identity(v));
  out = frontier;
  for (std::size_t len = 1; len <= bound && !frontier.empty(); ++len) {
    std::vector<Path> next;
    for (const auto& p : frontier) {
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (g.edge(e).src != p.finish) continue;
        Path q = p;
        q.edges.push_back(e);
        q.finish = g.edge(e).tgt;
        next.push_back(std::move(q));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

std::uint64_t count_paths(const Graph& g, VertexId a, VertexId b) {
  std::vector<std::optional<std::uint64_t>> memo(g.vertex_count());
  std::function<std::uint64_t(VertexId)> count = [&](VertexId v) -> std::uint64_t {
    if (memo[v]) return *memo[v];
    std::uint64_t total = v == b ? 1 : 0;
    for (const auto& e : g.edges()) {
      if (e.src == v) total += count(e.tgt);
    }
    memo[v] = total;
    return total;
  };
  return count(a);
}

}  // namespace cocat
