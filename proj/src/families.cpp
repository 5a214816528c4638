#include "condcolor/families.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace condcolor {

namespace {

std::vector<std::string> numbered_labels(int n) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) out.push_back("v" + std::to_string(i));
  return out;
}

}  // namespace

Graph path(int n) {
  if (n < 1) throw std::invalid_argument("path: n >= 1 required");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  Graph g = Graph::from_edges(n, edges);
  g.labels = numbered_labels(n);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n >= 3 required");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  Graph g = Graph::from_edges(n, edges);
  g.labels = numbered_labels(n);
  return g;
}

Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete: n >= 1 required");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  Graph g = Graph::from_edges(n, edges);
  g.labels = numbered_labels(n);
  return g;
}

Graph wheel(int n) { return web(1, n); }

Graph power(const Graph& g, int p) {
  if (p < 1) throw std::invalid_argument("power: p >= 1 required");
  if (!g.is_connected()) throw std::invalid_argument("power: graph must be connected");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    auto dist = bfs_distances(g, u);  // truncation not needed at desk scale
    for (VertexId v = u + 1; v < g.vertex_count(); ++v)
      if (dist[static_cast<std::size_t>(v)] >= 1 && dist[static_cast<std::size_t>(v)] <= p)
        edges.emplace_back(u, v);
  }
  Graph out = Graph::from_edges(g.vertex_count(), edges);
  out.labels = g.labels;
  out.coords = g.coords;
  return out;
}

Graph cycle_square(int n) {
  if (n < 3) throw std::invalid_argument("cycle_square: n >= 3 required");
  return power(cycle(n), 2);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int gn = g.vertex_count(), hn = h.vertex_count();
  auto id = [hn](int i, int j) { return i * hn + j; };
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < gn; ++i)
    for (auto [j, j2] : h.edges()) edges.emplace_back(id(i, j), id(i, j2));
  for (auto [i, i2] : g.edges())
    for (int j = 0; j < hn; ++j) edges.emplace_back(id(i, j), id(i2, j));
  Graph out = Graph::from_edges(gn * hn, edges);
  out.coords.reserve(static_cast<std::size_t>(gn * hn));
  out.labels.reserve(static_cast<std::size_t>(gn * hn));
  for (int i = 0; i < gn; ++i)
    for (int j = 0; j < hn; ++j) {
      out.coords.emplace_back(i, j);
      out.labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  return out;
}

Graph strong_product(const Graph& g, const Graph& h) {
  const int gn = g.vertex_count(), hn = h.vertex_count();
  Graph out = cartesian_product(g, h);
  auto id = [hn](int i, int j) { return i * hn + j; };
  std::vector<std::pair<VertexId, VertexId>> edges = out.edges();
  // diagonal edges: both coordinates move along an edge
  for (auto [i, i2] : g.edges())
    for (auto [j, j2] : h.edges()) {
      edges.emplace_back(id(i, j), id(i2, j2));
      edges.emplace_back(id(i, j2), id(i2, j));
    }
  Graph full = Graph::from_edges(gn * hn, edges);
  full.coords = std::move(out.coords);
  full.labels = std::move(out.labels);
  return full;
}

Graph web(int t, int n) {
  if (t < 1 || n < 3) throw std::invalid_argument("web: t >= 1 and n >= 3 required");
  auto ring_vertex = [n](int s, int i) { return (s - 1) * n + i; };  // s >= 1, i in 1..n
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 1; i <= n; ++i) edges.emplace_back(0, ring_vertex(1, i));
  for (int s = 1; s <= t; ++s)
    for (int i = 1; i <= n; ++i) edges.emplace_back(ring_vertex(s, i), ring_vertex(s, i % n + 1));
  for (int s = 1; s < t; ++s)
    for (int i = 1; i <= n; ++i) edges.emplace_back(ring_vertex(s, i), ring_vertex(s + 1, i));
  Graph g = Graph::from_edges(1 + t * n, edges);
  g.labels.push_back("v0,0");
  g.coords.emplace_back(0, 0);
  for (int s = 1; s <= t; ++s)
    for (int i = 1; i <= n; ++i) {
      g.labels.push_back("v" + std::to_string(s) + "," + std::to_string(i));
      g.coords.emplace_back(s, i);
    }
  return g;
}

Graph build(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::path:
      return path(spec.n);
    case Family::cycle:
      return cycle(spec.n);
    case Family::complete:
      return complete(spec.n);
    case Family::wheel:
      return wheel(spec.n);
    case Family::cycle_square:
      return cycle_square(spec.n);
    case Family::grid2n:
      if (spec.n < 2) throw std::invalid_argument("grid2n: n >= 2 required");
      return cartesian_product(path(2), path(spec.n));
    case Family::strong_grid:
      if (spec.n < 2 || spec.m < 2) throw std::invalid_argument("strong_grid: n, m >= 2 required");
      return strong_product(path(spec.n), path(spec.m));
    case Family::web:
      return web(spec.t, spec.n);
    case Family::power_of: {
      Family base = spec.base.value_or(Family::cycle);
      if (base != Family::path && base != Family::cycle)
        throw std::invalid_argument("power_of: base must be path or cycle");
      Graph g = base == Family::path ? path(spec.n) : cycle(spec.n);
      return power(g, spec.p);
    }
  }
  throw std::invalid_argument("unknown family");
}

namespace {
const std::array<std::pair<Family, std::string>, 9> kFamilyNames = {{
    {Family::path, "path"},
    {Family::cycle, "cycle"},
    {Family::complete, "complete"},
    {Family::wheel, "wheel"},
    {Family::cycle_square, "cycle-square"},
    {Family::grid2n, "grid2n"},
    {Family::strong_grid, "strong-grid"},
    {Family::web, "web"},
    {Family::power_of, "power"},
}};
}  // namespace

const std::string& family_name(Family f) {
  for (const auto& [fam, name] : kFamilyNames)
    if (fam == f) return name;
  throw std::invalid_argument("unknown family");
}

std::optional<Family> parse_family(const std::string& name) {
  for (const auto& [fam, fname] : kFamilyNames)
    if (fname == name) return fam;
  return std::nullopt;
}

std::map<std::string, int> spec_params(const FamilySpec& spec) {
  std::map<std::string, int> out;
  switch (spec.family) {
    case Family::strong_grid:
      out["n"] = spec.n;
      out["m"] = spec.m;
      break;
    case Family::web:
      out["t"] = spec.t;
      out["n"] = spec.n;
      break;
    case Family::power_of:
      out["n"] = spec.n;
      out["p"] = spec.p;
      break;
    default:
      out["n"] = spec.n;
      break;
  }
  return out;
}

}  // namespace condcolor
