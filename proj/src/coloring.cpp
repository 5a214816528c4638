#include "condcolor/coloring.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace condcolor {

namespace {

void check_cover(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != g.vertex_count())
    throw std::invalid_argument("coloring length does not match vertex count");
  for (int col : c.colors)
    if (col < 1) throw std::invalid_argument("colors must be >= 1");
}

}  // namespace

Verdict verify_proper(const Graph& g, const Coloring& c) {
  check_cover(g, c);
  Verdict verdict;
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    for (VertexId v : g.neighbors(u))
      if (u < v && c.color(u) == c.color(v))
        verdict.proper.push_back({u, v, c.color(u)});
  return verdict;
}

Verdict verify_conditional(const Graph& g, const Coloring& c, const CondParams& p,
                           bool strict_surjective) {
  check_cover(g, c);
  for (int col : c.colors)
    if (col > p.k) throw std::invalid_argument("color exceeds palette size k");

  Verdict verdict = verify_proper(g, c);
  std::vector<char> seen(static_cast<std::size_t>(p.k) + 1, 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto& nbrs = g.neighbors(v);
    std::fill(seen.begin(), seen.end(), 0);
    int distinct = 0;
    for (VertexId u : nbrs)
      if (!seen[static_cast<std::size_t>(c.color(u))]) {
        seen[static_cast<std::size_t>(c.color(u))] = 1;
        ++distinct;
      }
    // min(r, 0) = 0 on isolated vertices: trivially satisfied
    int required = std::min(p.r, static_cast<int>(nbrs.size()));
    if (distinct < required) verdict.deficits.push_back({v, distinct, required});
  }

  if (strict_surjective) {
    SurjectivityGap gap;
    std::vector<char> used(static_cast<std::size_t>(p.k) + 1, 0);
    for (int col : c.colors) used[static_cast<std::size_t>(col)] = 1;
    for (int col = 1; col <= p.k; ++col)
      if (!used[static_cast<std::size_t>(col)]) gap.missing.insert(col);
    if (!gap.missing.empty()) verdict.gap = std::move(gap);
  }
  return verdict;
}

int distinct_colors_used(const Coloring& c) {
  std::vector<int> sorted = c.colors;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

Coloring compact(const Coloring& c) {
  std::map<int, int> remap;
  Coloring out;
  out.colors.reserve(c.colors.size());
  for (int col : c.colors) {
    auto [it, fresh] = remap.try_emplace(col, static_cast<int>(remap.size()) + 1);
    (void)fresh;
    out.colors.push_back(it->second);
  }
  out.k = static_cast<int>(remap.size());
  if (out.k == 0) out.k = 1;
  return out;
}

}  // namespace condcolor
