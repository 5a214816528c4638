#pragma once

#include <map>
#include <string>

#include "condcolor/graph.hpp"

namespace condcolor {

// Graph family builders. Internal vertex indices are 0-based; the paper's
// 1-based labels v_1..v_n map as internal = label - 1. Every builder
// returns a connected graph.

Graph path(int n);      // n >= 1
Graph cycle(int n);     // n >= 3
Graph complete(int n);  // n >= 1
Graph wheel(int n);     // n >= 3; hub is vertex 0, rim cycle follows

// p-th power: same vertices, edge (u,v) iff 1 <= dist(u,v) <= p.
Graph power(const Graph& g, int p);

// power(cycle(n), 2) with the circular labeling v_1..v_n.
Graph cycle_square(int n);

// Row-major on the first operand's index: vertex (i, j) -> i*|h| + j.
Graph cartesian_product(const Graph& g, const Graph& h);
Graph strong_product(const Graph& g, const Graph& h);

// (t,n)-web: hub v_{0,0} = 0; ring vertex v_{s,i} (1<=s<=t, 1<=i<=n) is
// internal (s-1)*n + i. Hub joined to ring 1, each ring is an n-cycle,
// consecutive rings matched by spokes.
Graph web(int t, int n);  // t >= 1, n >= 3

enum class Family {
  path,
  cycle,
  complete,
  wheel,
  cycle_square,
  grid2n,       // P_2 box P_n
  strong_grid,  // P_n strong P_m
  web,
  power_of,     // p-th power of a base family instance
};

struct FamilySpec {
  Family family;
  int n = 0;
  int m = 0;
  int t = 0;
  int p = 0;
  // Base family for power_of (path or cycle).
  std::optional<Family> base;
};

Graph build(const FamilySpec& spec);

const std::string& family_name(Family f);
std::optional<Family> parse_family(const std::string& name);

// Human-readable parameter map, e.g. {"n": 10} or {"t": 2, "n": 4}.
std::map<std::string, int> spec_params(const FamilySpec& spec);

}  // namespace condcolor
