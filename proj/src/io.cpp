#include "cocat/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cocat/error.hpp"

namespace cocat {

Json path_to_json(const Graph& g, const Path& p) {
  Json edges = Json::array();
  for (EdgeId e : p.edges) edges.push_back(g.edge(e).name);
  return Json{{"start", g.vertex(p.start)}, {"edges", edges}};
}

Path path_from_json(const Graph& g, const Json& j) {
  if (!j.is_object() || !j.contains("start") || !j.contains("edges")) {
    throw Error(ErrorKind::InvalidInput, "a path needs 'start' and 'edges'");
  }
  return make_path(g, j.at("start").get<std::string>(), j.at("edges").get<std::vector<std::string>>());
}

Json presentation_to_json(const Presentation& p) {
  Json objects = Json::array();
  for (const auto& v : p.graph.vertices()) objects.push_back(v);
  Json arrows = Json::array();
  for (const auto& e : p.graph.edges()) {
    arrows.push_back(Json{{"name", e.name}, {"src", p.graph.vertex(e.src)}, {"tgt", p.graph.vertex(e.tgt)}});
  }
  Json relations = Json::array();
  for (const auto& r : p.relations) {
    relations.push_back(Json::array({path_to_json(p.graph, r.lhs), path_to_json(p.graph, r.rhs)}));
  }
  return Json{{"objects", objects}, {"arrows", arrows}, {"relations", relations}};
}

Presentation presentation_from_json(const Json& j) {
  try {
    Presentation p;
    for (const auto& v : j.at("objects")) p.graph.add_vertex(v.get<std::string>());
    for (const auto& a : j.at("arrows")) {
      p.graph.add_edge(a.at("name").get<std::string>(), a.at("src").get<std::string>(),
                       a.at("tgt").get<std::string>());
    }
    if (j.contains("relations")) {
      for (const auto& r : j.at("relations")) {
        if (!r.is_array() || r.size() != 2) {
          throw Error(ErrorKind::InvalidInput, "a relation is a pair of paths");
        }
        p.relations.push_back({path_from_json(p.graph, r[0]), path_from_json(p.graph, r[1])});
      }
    }
    p.validate();
    return p;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed presentation: ") + e.what());
  }
}

Json twocell_word_to_json(const HigherPresentation& hp, const TwoCellWord& w) {
  Json steps = Json::array();
  for (const auto& s : w.steps) {
    steps.push_back(Json{{"pre", path_to_json(hp.graph(), s.pre)},
                         {"cell", hp.cells.at(s.cell).name},
                         {"inverse", s.inverse},
                         {"post", path_to_json(hp.graph(), s.post)}});
  }
  return Json{{"src", path_to_json(hp.graph(), w.src)}, {"tgt", path_to_json(hp.graph(), w.tgt)}, {"steps", steps}};
}

TwoCellWord twocell_word_from_json(const HigherPresentation& hp, const Json& j) {
  TwoCellWord w;
  w.src = path_from_json(hp.graph(), j.at("src"));
  w.tgt = path_from_json(hp.graph(), j.at("tgt"));
  for (const auto& s : j.at("steps")) {
    w.steps.push_back({path_from_json(hp.graph(), s.at("pre")), hp.cell_id(s.at("cell").get<std::string>()),
                       s.value("inverse", false), path_from_json(hp.graph(), s.at("post"))});
  }
  return w;
}

Json higher_to_json(const HigherPresentation& hp) {
  Json j = presentation_to_json(hp.base->presentation());
  j["flavor"] = to_string(hp.flavor);
  Json cells = Json::array();
  for (const auto& c : hp.cells) {
    cells.push_back(Json{{"name", c.name},
                         {"src", path_to_json(hp.graph(), c.src)},
                         {"tgt", path_to_json(hp.graph(), c.tgt)},
                         {"invertible", c.invertible}});
  }
  j["twocells"] = cells;
  Json relations = Json::array();
  for (const auto& r : hp.relations) {
    relations.push_back(Json::array({twocell_word_to_json(hp, r.lhs), twocell_word_to_json(hp, r.rhs)}));
  }
  j["twocell_relations"] = relations;
  return j;
}

HigherPtr higher_from_json(const Json& j) {
  try {
    HigherPresentation hp;
    hp.base = Category::make(presentation_from_json(j));
    hp.flavor = flavor_from_string(j.value("flavor", std::string("sesqui")));
    if (j.contains("twocells")) {
      for (const auto& c : j.at("twocells")) {
        hp.cells.push_back({c.at("name").get<std::string>(), path_from_json(hp.graph(), c.at("src")),
                            path_from_json(hp.graph(), c.at("tgt")), c.value("invertible", false)});
      }
    }
    if (j.contains("twocell_relations")) {
      for (const auto& r : j.at("twocell_relations")) {
        if (!r.is_array() || r.size() != 2) throw Error(ErrorKind::InvalidInput, "a 2-cell relation is a pair of words");
        hp.relations.push_back({twocell_word_from_json(hp, r[0]), twocell_word_from_json(hp, r[1])});
      }
    }
    return make_higher(std::move(hp));
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed 2-dimensional presentation: ") + e.what());
  }
}

Json monoid_to_json(const FinMonoid& m) {
  Json table = Json::array();
  for (const auto& row : m.table) {
    Json r = Json::array();
    for (auto v : row) r.push_back(m.elements.at(v));
    table.push_back(r);
  }
  return Json{{"elements", m.elements}, {"unit", m.elements.at(m.unit)}, {"table", table}};
}

FinMonoid monoid_from_json(const Json& j) {
  try {
    FinMonoid m;
    m.elements = j.at("elements").get<std::vector<std::string>>();
    auto index = [&](const Json& v) -> std::size_t {
      if (v.is_number_integer()) {
        auto k = v.get<long long>();
        if (k < 0 || static_cast<std::size_t>(k) >= m.elements.size()) {
          throw Error(ErrorKind::InvalidInput, "monoid element index out of range");
        }
        return static_cast<std::size_t>(k);
      }
      auto name = v.get<std::string>();
      auto it = std::find(m.elements.begin(), m.elements.end(), name);
      if (it == m.elements.end()) throw Error(ErrorKind::InvalidInput, "unknown monoid element '" + name + "'");
      return static_cast<std::size_t>(it - m.elements.begin());
    };
    m.unit = index(j.at("unit"));
    for (const auto& row : j.at("table")) {
      m.table.emplace_back();
      for (const auto& v : row) m.table.back().push_back(index(v));
    }
    m.validate();
    return m;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed monoid: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidInput, path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + path);
  out << text;
}

}  // namespace cocat
