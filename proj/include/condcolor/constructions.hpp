#pragma once

#include <string>

#include "condcolor/coloring.hpp"
#include "condcolor/graph.hpp"

namespace condcolor {

// A closed-form coloring together with the (k, r) pair it claims to satisfy
// and the theorem case that produced it.
struct ClaimedColoring {
  Coloring coloring;
  int claimed_k;
  int claimed_r;
  std::string source;
};

// The requested (family, r) regime has no closed-form coloring; callers
// should fall back to the exact solver.
struct UnsupportedCase : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The instance is explicitly excluded (cycle squares n = 13, 14, 19 at r=4).
struct ExcludedCase : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// P_2 box P_n: top row repeats 1,2,3,4, bottom row 3,4,1,2. Valid for every
// r >= 2, so claimed_r is the maximum degree.
ClaimedColoring grid2n_coloring(int n);  // n >= 2

// C_n^2 colorings. Supported regimes:
//   r=3, n >= 4, n !≡ 3 (mod 4), excluding n = 5, 6 (k = 4);
//   r=4, n > 9, n ≡ 0 (mod 5)   (k = 5);
//   r=4, n > 9, n !≡ 0 (mod 5), n not in {13, 14, 19}   (k = 6).
ClaimedColoring cycle_square_coloring(int n, int r);

// 3 if n ≡ 0 (mod 3), else 4; equals chi_2(C_n^2) for n >= 6.
int cycle_square_chromatic(int n);

// P_n strong P_m (rows 0..n-1, cols 0..m-1):
//   r <= 3: color(row, col) = row%2 + 2*(col%2) + 1, k = 4;
//   r = Delta: color(row, col) = col%3 + 3*(row%3) + 1, k = Delta+1
//             (rainbow 1..4 when n = m = 2).
ClaimedColoring strong_grid_coloring(int n, int m, int r);

// Dynamic (4,2)-coloring of the (t,n)-web. Hub gets 4, rings get periodic
// sequences by residue of n mod 4. One family deviates from the published
// sequences (see errata_json()).
ClaimedColoring web_dynamic_coloring(int t, int n);

// Machine-readable record of every ring sequence that had to be phase
// adjusted to pass verification. JSON text, list of
// {family, params, case, deviation_description, verified}.
std::string errata_json();

}  // namespace condcolor
