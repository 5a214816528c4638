#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "condcolor/coloring.hpp"
#include "condcolor/graph.hpp"

namespace condcolor {

struct BoundEntry {
  std::string name;
  int value;
};

struct BoundReport {
  int lai_bound = 0;  // min(r, Delta) + 1
  std::optional<int> chromatic_lb;
  int lemma1_bound = 0;  // 0 when no adjacent pair qualifies
  std::optional<std::pair<VertexId, VertexId>> lemma1_witness;
};

enum class SolveStatus { solved, budget_exhausted };

struct SolveResult {
  SolveStatus status = SolveStatus::solved;
  int chi = 0;  // on budget_exhausted: best proved lower bound
  Coloring witness;
  std::vector<BoundEntry> lower_bounds;
  std::uint64_t nodes_explored = 0;
  std::chrono::microseconds elapsed{0};
};

// min(r, Delta(g)) + 1.
int lai_lower_bound(const Graph& g, int r);

// Scans adjacent pairs (u,v) with d(u), d(v) <= r whose outside
// neighborhoods are mutually dominated; max d(u)+d(v) over qualifying
// pairs. Requires r <= Delta(g).
BoundReport lemma1_scan(const Graph& g, int r);

// Greedily grown clique; its size lower-bounds chi and hence chi_r.
int greedy_clique_bound(const Graph& g);

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

// Exact chi_r by iterative deepening on k with backtracking. Deterministic:
// vertices in BFS order from the lowest-index max-degree vertex, lowest
// color first, first new color only after all used ones.
SolveResult chi_r_exact(const Graph& g, int r, std::uint64_t node_budget = kDefaultNodeBudget);

// Independent brute-force cross-check; refuses more than 10 vertices.
int chi_r_oracle(const Graph& g, int r);

// chi(G) = chi_1(G).
int chromatic_number(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace condcolor
