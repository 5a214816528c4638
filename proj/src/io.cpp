#include "condcolor/io.hpp"

#include <nlohmann/json.hpp>

#include <istream>
#include <sstream>

namespace condcolor {

using nlohmann::json;

std::string to_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

Graph from_dimacs(std::istream& in) {
  int n = -1;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    char kind;
    ls >> kind;
    if (kind == 'p') {
      std::string format;
      std::size_t m;
      if (!(ls >> format >> n >> m) || format != "edge")
        throw ParseError("dimacs: malformed problem line: " + line);
    } else if (kind == 'e') {
      int u, v;
      if (!(ls >> u >> v)) throw ParseError("dimacs: malformed edge line: " + line);
      edges.emplace_back(u - 1, v - 1);
    } else {
      throw ParseError("dimacs: unknown line kind: " + line);
    }
  }
  if (n < 1) throw ParseError("dimacs: missing problem line");
  try {
    return Graph::from_edges(n, edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("dimacs: ") + e.what());
  }
}

std::string graph_to_json(const Graph& g, const std::optional<FamilySpec>& spec) {
  json j;
  if (spec) {
    j["family"] = family_name(spec->family);
    j["params"] = json::object();
    for (const auto& [key, value] : spec_params(*spec)) j["params"][key] = value;
  } else {
    j["family"] = nullptr;
    j["params"] = json::object();
  }
  j["n"] = g.vertex_count();
  j["edges"] = json::array();
  for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j.dump(2);
}

Graph graph_from_json(std::istream& in) {
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(std::string("graph json: ") + e.what());
  }
  if (!j.contains("n") || !j.contains("edges")) throw ParseError("graph json: need n and edges");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw ParseError("graph json: edge must be [u, v]");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  try {
    return Graph::from_edges(j["n"].get<int>(), edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("graph json: ") + e.what());
  }
}

std::string to_dot(const Graph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (static_cast<std::size_t>(v) < g.labels.size())
      out << " [label=\"" << g.labels[static_cast<std::size_t>(v)] << "\"]";
    out << ";\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string coloring_to_json(const Coloring& c) {
  json j;
  j["k"] = c.k;
  j["colors"] = c.colors;
  return j.dump(2);
}

Coloring coloring_from_json(std::istream& in) {
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(std::string("coloring json: ") + e.what());
  }
  if (!j.contains("k") || !j.contains("colors")) throw ParseError("coloring json: need k and colors");
  Coloring c;
  c.k = j["k"].get<int>();
  c.colors = j["colors"].get<std::vector<int>>();
  if (c.k < 1) throw ParseError("coloring json: k >= 1 required");
  return c;
}

std::string verdict_to_json(const Verdict& v) {
  json j;
  j["valid"] = v.valid();
  j["violations"] = json::array();
  for (const auto& p : v.proper)
    j["violations"].push_back(
        {{"kind", "proper"}, {"u", p.u}, {"v", p.v}, {"color", p.shared_color}});
  for (const auto& d : v.deficits)
    j["violations"].push_back({{"kind", "neighborhood_deficit"},
                               {"v", d.v},
                               {"distinct_found", d.distinct_found},
                               {"required", d.required}});
  if (v.gap)
    j["violations"].push_back(
        {{"kind", "surjectivity_gap"}, {"missing", std::vector<int>(v.gap->missing.begin(), v.gap->missing.end())}});
  return j.dump(2);
}

}  // namespace condcolor
