#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace condcolor {

using VertexId = int;

// Undirected simple graph over vertices 0..n-1. Adjacency lists are sorted
// ascending, symmetric, loop-free. Instances are built by the family
// builders in families.hpp and treated as immutable afterwards.
struct Graph {
  std::vector<std::vector<VertexId>> adj;

  // Optional family metadata. labels[v] is the paper-facing name of v
  // (1-based family labels); coords[v] is the (row, col) or (ring, pos)
  // pair for product/web families. Both empty when not applicable.
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> coords;

  int vertex_count() const { return static_cast<int>(adj.size()); }
  std::size_t edge_count() const;

  const std::vector<VertexId>& neighbors(VertexId v) const;
  int degree(VertexId v) const;
  int max_degree() const;
  bool has_edge(VertexId u, VertexId v) const;
  bool is_connected() const;

  // Sorted (u, v) pairs with u < v, lexicographic order.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  // Builds from an edge list; sorts and deduplicates, rejects loops and
  // out-of-range endpoints.
  static Graph from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& edges);

  void check_vertex(VertexId v) const {
    if (v < 0 || v >= vertex_count())
      throw std::invalid_argument("vertex index out of range: " + std::to_string(v));
  }
};

// BFS distances from source; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, VertexId source);

}  // namespace condcolor
