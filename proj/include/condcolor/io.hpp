#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "condcolor/coloring.hpp"
#include "condcolor/families.hpp"
#include "condcolor/graph.hpp"

namespace condcolor {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// DIMACS .col: "p edge n m" header, "e u v" lines, 1-based, u < v.
std::string to_dimacs(const Graph& g);
Graph from_dimacs(std::istream& in);

// { "family": string|null, "params": object, "n": int, "edges": [[u,v],...] }
// 0-based, edges sorted lexicographically.
std::string graph_to_json(const Graph& g, const std::optional<FamilySpec>& spec = std::nullopt);
Graph graph_from_json(std::istream& in);

// Undirected DOT; vertex labels from the graph's label map when present.
std::string to_dot(const Graph& g);

// { "k": int, "colors": [int,...] }
std::string coloring_to_json(const Coloring& c);
Coloring coloring_from_json(std::istream& in);

// { "valid": bool, "violations": [{"kind": ...}, ...] }
std::string verdict_to_json(const Verdict& v);

}  // namespace condcolor
