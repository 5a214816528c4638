#include "condcolor/solver.hpp"

#include <algorithm>
#include <numeric>

namespace condcolor {

int lai_lower_bound(const Graph& g, int r) {
  if (g.vertex_count() < 1 || r < 1) throw std::invalid_argument("lai_lower_bound: r >= 1, nonempty graph");
  return std::min(r, g.max_degree()) + 1;
}

namespace {

// N(b) \ {excl} subset of N(a)? Lists are sorted. Note b's neighbors may
// include a vertex w with w == a; membership is tested against adj[a]
// which never contains a itself, so self-membership fails the check.
bool outside_neighborhood_contained(const Graph& g, VertexId b, VertexId excl, VertexId a) {
  for (VertexId w : g.neighbors(b)) {
    if (w == excl) continue;
    if (!g.has_edge(a, w)) return false;
  }
  return true;
}

bool lemma1_pair_qualifies(const Graph& g, VertexId u, VertexId v) {
  for (VertexId u2 : g.neighbors(u)) {
    if (u2 == v) continue;
    if (!outside_neighborhood_contained(g, v, u, u2)) return false;
  }
  for (VertexId v2 : g.neighbors(v)) {
    if (v2 == u) continue;
    if (!outside_neighborhood_contained(g, u, v, v2)) return false;
  }
  return true;
}

}  // namespace

BoundReport lemma1_scan(const Graph& g, int r) {
  if (r > g.max_degree())
    throw std::invalid_argument("lemma1_scan: hypothesis requires r <= max degree");
  BoundReport report;
  report.lai_bound = lai_lower_bound(g, r);
  for (auto [u, v] : g.edges()) {
    if (g.degree(u) > r || g.degree(v) > r) continue;
    if (!lemma1_pair_qualifies(g, u, v)) continue;
    int bound = g.degree(u) + g.degree(v);
    if (bound > report.lemma1_bound) {
      report.lemma1_bound = bound;
      report.lemma1_witness = {u, v};
    }
  }
  return report;
}

int greedy_clique_bound(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<VertexId> by_degree(static_cast<std::size_t>(n));
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&g](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
  int best = 0;
  for (VertexId seed : by_degree) {
    std::vector<VertexId> clique{seed};
    for (VertexId cand : by_degree) {
      if (cand == seed) continue;
      bool joined = std::all_of(clique.begin(), clique.end(),
                                [&](VertexId c) { return g.has_edge(c, cand); });
      if (joined) clique.push_back(cand);
    }
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return best;
}

namespace {

struct Searcher {
  const Graph& g;
  int r;
  int k;
  std::uint64_t budget;
  std::uint64_t& nodes;
  bool exhausted = false;

  std::vector<VertexId> order;
  std::vector<int> colors;          // 0 = uncolored
  std::vector<int> uncolored_nbrs;  // per vertex

  Searcher(const Graph& graph, int r_, int k_, std::uint64_t budget_, std::uint64_t& nodes_,
           const std::vector<VertexId>& order_)
      : g(graph), r(r_), k(k_), budget(budget_), nodes(nodes_), order(order_) {
    colors.assign(static_cast<std::size_t>(g.vertex_count()), 0);
    uncolored_nbrs.resize(static_cast<std::size_t>(g.vertex_count()));
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      uncolored_nbrs[static_cast<std::size_t>(v)] = g.degree(v);
  }

  int distinct_colored_neighbor_colors(VertexId v) const {
    std::uint64_t seen = 0;
    int count = 0;
    for (VertexId u : g.neighbors(v)) {
      int c = colors[static_cast<std::size_t>(u)];
      if (c && !(seen & (1ull << c))) {
        seen |= 1ull << c;
        ++count;
      }
    }
    return count;
  }

  // A partial assignment stays viable at w only while
  // distinct-so-far + uncolored neighbors can still reach min(r, d(w)).
  bool viable(VertexId w) const {
    int need = std::min(r, g.degree(w));
    return distinct_colored_neighbor_colors(w) + uncolored_nbrs[static_cast<std::size_t>(w)] >= need;
  }

  bool extend(std::size_t idx, int max_used) {
    if (idx == order.size()) return true;
    VertexId v = order[idx];
    int limit = std::min(k, max_used + 1);
    for (int c = 1; c <= limit; ++c) {
      if (++nodes > budget) {
        exhausted = true;
        return false;
      }
      bool conflict = false;
      for (VertexId u : g.neighbors(v))
        if (colors[static_cast<std::size_t>(u)] == c) {
          conflict = true;
          break;
        }
      if (conflict) continue;

      colors[static_cast<std::size_t>(v)] = c;
      for (VertexId u : g.neighbors(v)) --uncolored_nbrs[static_cast<std::size_t>(u)];
      bool ok = viable(v);
      for (VertexId u : g.neighbors(v))
        if (ok && !viable(u)) ok = false;
      if (ok && extend(idx + 1, std::max(max_used, c))) return true;
      for (VertexId u : g.neighbors(v)) ++uncolored_nbrs[static_cast<std::size_t>(u)];
      colors[static_cast<std::size_t>(v)] = 0;
      if (exhausted) return false;
    }
    return false;
  }
};

std::vector<VertexId> solve_order(const Graph& g) {
  VertexId root = 0;
  for (VertexId v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) > g.degree(root)) root = v;
  std::vector<VertexId> order;
  order.reserve(static_cast<std::size_t>(g.vertex_count()));
  std::vector<char> placed(static_cast<std::size_t>(g.vertex_count()), 0);
  order.push_back(root);
  placed[static_cast<std::size_t>(root)] = 1;
  for (std::size_t head = 0; head < order.size(); ++head)
    for (VertexId u : g.neighbors(order[head]))
      if (!placed[static_cast<std::size_t>(u)]) {
        placed[static_cast<std::size_t>(u)] = 1;
        order.push_back(u);
      }
  return order;
}

}  // namespace

SolveResult chi_r_exact(const Graph& g, int r, std::uint64_t node_budget) {
  if (r < 1) throw std::invalid_argument("chi_r_exact: r >= 1 required");
  if (!g.is_connected()) throw std::invalid_argument("chi_r_exact: graph must be connected");
  if (g.vertex_count() > 60)
    throw std::invalid_argument("chi_r_exact: graph too large for exact search (limit 60 vertices)");
  auto start = std::chrono::steady_clock::now();

  SolveResult result;
  result.lower_bounds.push_back({"lai", lai_lower_bound(g, r)});
  result.lower_bounds.push_back({"greedy_clique", greedy_clique_bound(g)});
  if (r <= g.max_degree()) {
    auto bounds = lemma1_scan(g, r);
    if (bounds.lemma1_bound > 0) result.lower_bounds.push_back({"lemma1", bounds.lemma1_bound});
  }

  const int n = g.vertex_count();
  int start_k = 1;
  for (const auto& b : result.lower_bounds) start_k = std::max(start_k, b.value);
  if (n == 1) start_k = 1;

  auto order = solve_order(g);
  for (int k = std::min(start_k, n); k <= n; ++k) {
    Searcher searcher(g, r, k, node_budget, result.nodes_explored, order);
    if (searcher.extend(0, 0)) {
      result.status = SolveStatus::solved;
      result.chi = k;
      Coloring witness;
      witness.k = k;
      witness.colors = searcher.colors;
      result.witness = compact(witness);
      result.elapsed =
          std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
      return result;
    }
    if (searcher.exhausted) {
      result.status = SolveStatus::budget_exhausted;
      result.chi = k;  // every smaller k was refuted exhaustively
      result.elapsed =
          std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
      return result;
    }
  }
  throw std::logic_error("chi_r_exact: no coloring found up to k = n (unreachable)");
}

namespace {

bool oracle_extend(const Graph& g, int r, int k, std::vector<int>& colors, VertexId v) {
  const int n = g.vertex_count();
  if (v == n) {
    for (VertexId w = 0; w < n; ++w) {
      unsigned seen = 0;
      int distinct = 0;
      for (VertexId u : g.neighbors(w)) {
        int c = colors[static_cast<std::size_t>(u)];
        if (!(seen & (1u << c))) {
          seen |= 1u << c;
          ++distinct;
        }
      }
      if (distinct < std::min(r, g.degree(w))) return false;
    }
    return true;
  }
  for (int c = 1; c <= k; ++c) {
    bool clash = false;
    for (VertexId u : g.neighbors(v))
      if (u < v && colors[static_cast<std::size_t>(u)] == c) {
        clash = true;
        break;
      }
    if (clash) continue;
    colors[static_cast<std::size_t>(v)] = c;
    if (oracle_extend(g, r, k, colors, v + 1)) return true;
  }
  colors[static_cast<std::size_t>(v)] = 0;
  return false;
}

}  // namespace

int chi_r_oracle(const Graph& g, int r) {
  if (g.vertex_count() > 10)
    throw std::invalid_argument("chi_r_oracle: refuses graphs with more than 10 vertices");
  if (r < 1) throw std::invalid_argument("chi_r_oracle: r >= 1 required");
  for (int k = 1; k <= g.vertex_count(); ++k) {
    std::vector<int> colors(static_cast<std::size_t>(g.vertex_count()), 0);
    if (oracle_extend(g, r, k, colors, 0)) return k;
  }
  throw std::logic_error("chi_r_oracle: no coloring found up to k = n (unreachable)");
}

int chromatic_number(const Graph& g, std::uint64_t node_budget) {
  return chi_r_exact(g, 1, node_budget).chi;
}

}  // namespace condcolor
