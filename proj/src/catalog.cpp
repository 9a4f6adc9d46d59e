#include "cocat/catalog.hpp"

#include "cocat/error.hpp"

namespace cocat {

namespace {

std::string arrow_name(std::size_t k) {
  static const std::string letters = "fghjklmn";
  return k < letters.size() ? std::string(1, letters[k]) : "f" + std::to_string(k);
}

}  // namespace

Presentation ordinal(std::size_t n) {
  Presentation p;
  for (std::size_t k = 0; k < n; ++k) p.graph.add_vertex(std::to_string(k));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    p.graph.add_edge(arrow_name(k), static_cast<VertexId>(k), static_cast<VertexId>(k + 1));
  }
  return p;
}

Presentation discrete(std::size_t n) {
  Presentation p;
  for (std::size_t k = 0; k < n; ++k) p.graph.add_vertex(std::to_string(k));
  return p;
}

Presentation walking_iso() {
  Presentation p;
  p.graph.add_vertex("0");
  p.graph.add_vertex("1");
  p.graph.add_edge("u", "0", "1");
  p.graph.add_edge("v", "1", "0");
  p.relations.push_back({make_path(p.graph, "0", {"u", "v"}), Path::identity(0)});
  p.relations.push_back({make_path(p.graph, "1", {"v", "u"}), Path::identity(1)});
  return p;
}

Presentation cyclic_group(std::size_t n) {
  Presentation p;
  p.graph.add_vertex("*");
  p.graph.add_edge("g", "*", "*");
  p.relations.push_back({make_path(p.graph, "*", std::vector<std::string>(n, "g")), Path::identity(0)});
  return p;
}

CategoryPtr catalog_category(const std::string& name) {
  if (name == "0") return Category::make(ordinal(0));
  if (name == "1") return Category::make(ordinal(1));
  if (name == "2") return Category::make(ordinal(2));
  if (name == "3") return Category::make(ordinal(3));
  if (name == "discrete2") return Category::make(discrete(2));
  if (name == "walking_iso") return Category::make(walking_iso(), 3);
  if (name == "Z2") return Category::make(cyclic_group(2), 3);
  throw Error(ErrorKind::UnknownName, "no catalog category named '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"0", "1", "discrete2", "2", "3", "walking_iso", "Z2"};
}

}  // namespace cocat
