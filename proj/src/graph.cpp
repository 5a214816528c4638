#include "condcolor/graph.hpp"

#include <algorithm>
#include <queue>

namespace condcolor {

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (const auto& nbrs : adj) total += nbrs.size();
  return total / 2;
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
  check_vertex(v);
  return adj[static_cast<std::size_t>(v)];
}

int Graph::degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }

int Graph::max_degree() const {
  int best = 0;
  for (const auto& nbrs : adj) best = std::max(best, static_cast<int>(nbrs.size()));
  return best;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& nbrs = adj[static_cast<std::size_t>(u)];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

bool Graph::is_connected() const {
  if (adj.empty()) return false;
  auto dist = bfs_distances(*this, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(edge_count());
  for (VertexId u = 0; u < vertex_count(); ++u)
    for (VertexId v : adj[static_cast<std::size_t>(u)])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  Graph g;
  g.adj.assign(static_cast<std::size_t>(n), {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop rejected");
    g.adj[static_cast<std::size_t>(u)].push_back(v);
    g.adj[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nbrs : g.adj) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
  }
  return g;
}

std::vector<int> bfs_distances(const Graph& g, VertexId source) {
  g.check_vertex(source);
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::queue<VertexId> queue;
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push(source);
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop();
    for (VertexId v : g.adj[static_cast<std::size_t>(u)]) {
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push(v);
      }
    }
  }
  return dist;
}

}  // namespace condcolor
