#pragma once

#include <optional>
#include <set>
#include <vector>

#include "condcolor/graph.hpp"

namespace condcolor {

// Total color assignment, colors in 1..k.
struct Coloring {
  int k = 1;
  std::vector<int> colors;  // indexed by VertexId

  int color(VertexId v) const { return colors[static_cast<std::size_t>(v)]; }
};

struct CondParams {
  int r = 1;
  int k = 1;
};

struct ProperViolation {
  VertexId u, v;
  int shared_color;
};

struct NeighborhoodDeficit {
  VertexId v;
  int distinct_found;
  int required;  // min(r, d(v))
};

struct SurjectivityGap {
  std::set<int> missing;
};

struct Verdict {
  std::vector<ProperViolation> proper;
  std::vector<NeighborhoodDeficit> deficits;
  std::optional<SurjectivityGap> gap;

  bool valid() const { return proper.empty() && deficits.empty() && !gap; }
  std::size_t violation_count() const {
    return proper.size() + deficits.size() + (gap ? 1 : 0);
  }
};

// (C1) only: lists every monochromatic edge (u < v).
Verdict verify_proper(const Graph& g, const Coloring& c);

// (C1) + (C2): every vertex must see min(r, d(v)) distinct neighbor colors.
// With strict_surjective, additionally reports colors of 1..k left unused.
Verdict verify_conditional(const Graph& g, const Coloring& c, const CondParams& p,
                           bool strict_surjective = false);

int distinct_colors_used(const Coloring& c);

// Renumbers colors onto 1..#distinct preserving first-use order.
Coloring compact(const Coloring& c);

}  // namespace condcolor
