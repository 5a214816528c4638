// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Each criterion pins the published chromatic values and
// closed-form colorings at exact tolerance.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "condcolor/constructions.hpp"
#include "condcolor/families.hpp"
#include "condcolor/solver.hpp"
#include "condcolor/sweep.hpp"

using namespace condcolor;

namespace {

int failures = 0;

struct Criterion {
  std::string name;
  bool ok = true;
  std::vector<std::string> problems;

  void note(const std::string& detail) { problems.push_back(detail); }

  void expect(bool cond, const std::string& detail) {
    if (!cond) {
      ok = false;
      problems.push_back(detail);
    }
  }

  void finish(std::chrono::steady_clock::time_point start) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    std::printf("%s %s (%lld ms)\n", ok ? "PASS" : "FAIL", name.c_str(),
                static_cast<long long>(ms));
    for (const auto& p : problems) std::printf("      %s\n", p.c_str());
    if (!ok) ++failures;
  }
};

int solve_chi(const Graph& g, int r, std::uint64_t budget = kDefaultNodeBudget) {
  SolveResult res = chi_r_exact(g, r, budget);
  return res.status == SolveStatus::solved ? res.chi : -1;
}

bool construction_valid(const Graph& g, const ClaimedColoring& c, int r) {
  return verify_conditional(g, c.coloring, {r, c.claimed_k}).valid();
}

void criterion1_prop1() {
  auto start = std::chrono::steady_clock::now();
  Criterion c{"criterion 1: chi_r(P_2 box P_n) = 4"};
  for (int n = 2; n <= 7; ++n)
    for (int r = 2; r <= 3; ++r) {
      Graph g = cartesian_product(path(2), path(n));
      int chi = solve_chi(g, r);
      c.expect(chi == 4, "solver chi_" + std::to_string(r) + "(G(2," + std::to_string(n) +
                             ")) = " + std::to_string(chi) + ", expected 4");
    }
  for (int n = 2; n <= 500; ++n) {
    Graph g = cartesian_product(path(2), path(n));
    ClaimedColoring coloring = grid2n_coloring(n);
    for (int r = 2; r <= 3; ++r)
      c.expect(verify_conditional(g, coloring.coloring, {r, 4}).valid(),
               "construction invalid at n=" + std::to_string(n) + ", r=" + std::to_string(r));
  }
  c.finish(start);
}

void criterion2_thm1() {
  auto start = std::chrono::steady_clock::now();
  Criterion c{"criterion 2: chi_r(C_n^2) matches the five-case formula, n in 3..12"};
  for (int n = 3; n <= 12; ++n)
    for (int r = 2; r <= 4; ++r) {
      auto claimed = claimed_chi({Family::cycle_square, n}, r);
      if (!claimed) continue;  // no claim (r=3 with n = 3 mod 4)
      int chi = solve_chi(cycle_square(n), r);
      c.expect(chi == *claimed, "chi_" + std::to_string(r) + "(C_" + std::to_string(n) +
                                    "^2) = " + std::to_string(chi) + ", claimed " +
                                    std::to_string(*claimed) +
                                    (n == 6 && r == 3 ? " (known defect: the octahedron needs 5)"
                                                      : ""));
    }
  for (int n = 4; n <= 200; ++n)
    for (int r = 3; r <= 4; ++r) {
      if (!construction_exists({Family::cycle_square, n}, r)) continue;
      c.expect(construction_valid(cycle_square(n), cycle_square_coloring(n, r), r),
               "construction invalid at n=" + std::to_string(n) + ", r=" + std::to_string(r));
    }
  c.finish(start);
}

void criterion3_exclusion_probe() {
  auto start = std::chrono::steady_clock::now();
  Criterion c{"criterion 3: n = 13, 14, 19 probed as unclaimed rows"};
  SweepOptions opts;
  opts.r_values = {4};
  opts.solver_cap = 14;
  SweepReport report = run_sweep(Theorem::thm1, {13, 14, 19}, {}, opts);
  c.expect(report.rows.size() == 3, "expected 3 rows");
  for (const auto& row : report.rows) {
    c.expect(!row.claimed_chi.has_value(), "row n=" + std::to_string(row.spec.n) +
                                               " should carry no claim");
    if (row.spec.n == 19) {
      c.expect(row.agreement == Agreement::skipped,
               "n=19 should be skipped at solver cap 14");
    } else {
      c.expect(row.agreement == Agreement::unclaimed_probe && row.solver_chi.has_value(),
               "n=" + std::to_string(row.spec.n) + " should be an unclaimed probe");
      if (row.solver_chi)
        c.note("recorded: chi_4(C_" + std::to_string(row.spec.n) + "^2) = " +
               std::to_string(*row.solver_chi));
    }
  }
  c.finish(start);
}

void criterion4_thm2() {
  auto start = std::chrono::steady_clock::now();
  Criterion c{"criterion 4: chi_r(P_n strong P_m) = 4 (r<=3) and Delta+1 (r=Delta)"};
  for (int n = 2; n <= 12; ++n)
    for (int m = n; m <= 12; ++m) {
      Graph g = strong_product(path(n), path(m));
      int max_deg = g.max_degree();
      for (int r = 2; r <= 3; ++r)
        c.expect(construction_valid(g, strong_grid_coloring(n, m, r), r),
                 "parity tile invalid at " + std::to_string(n) + "x" + std::to_string(m) +
                     ", r=" + std::to_string(r));
      ClaimedColoring top = strong_grid_coloring(n, m, max_deg);
      c.expect(top.claimed_k == max_deg + 1, "k != Delta+1 at " + std::to_string(n) + "x" +
                                                 std::to_string(m));
      c.expect(construction_valid(g, top, max_deg),
               "max-degree tile invalid at " + std::to_string(n) + "x" + std::to_string(m));
    }

  // golden cells from the published figures
  const int fig2[2][11] = {{1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2},
                           {4, 5, 6, 4, 5, 6, 4, 5, 6, 4, 5}};
  ClaimedColoring c2 = strong_grid_coloring(2, 11, 5);
  for (int row = 0; row < 2; ++row)
    for (int col = 0; col < 11; ++col)
      c.expect(c2.coloring.color(row * 11 + col) == fig2[row][col],
               "2x11 cell (" + std::to_string(row) + "," + std::to_string(col) + ") mismatch");

  const int fig3[5][11] = {{1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2},
                           {4, 5, 6, 4, 5, 6, 4, 5, 6, 4, 5},
                           {7, 8, 9, 7, 8, 9, 7, 8, 9, 7, 8},
                           {1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2},
                           {4, 5, 6, 4, 5, 6, 4, 5, 6, 4, 5}};
  ClaimedColoring c3 = strong_grid_coloring(5, 11, 8);
  for (int row = 0; row < 5; ++row)
    for (int col = 0; col < 11; ++col)
      c.expect(c3.coloring.color(row * 11 + col) == fig3[row][col],
               "5x11 cell (" + std::to_string(row) + "," + std::to_string(col) + ") mismatch");

  int chi22 = solve_chi(strong_product(path(2), path(2)), 3);
  c.expect(chi22 == 4, "chi_3(P_2 strong P_2) = " + std::to_string(chi22) + ", expected 4");
  int chi23 = solve_chi(strong_product(path(2), path(3)), 5);
  c.expect(chi23 == 6, "chi_5(P_2 strong P_3) = " + std::to_string(chi23) + ", expected 6");
  c.finish(start);
}

void criterion5_thm3() {
  auto start = std::chrono::steady_clock::now();
  Criterion c{"criterion 5: web dynamic colorings verify and chi_2 = 4"};
  for (int t = 1; t <= 5; ++t)
    for (int n = 3; n <= 24; ++n)
      c.expect(construction_valid(web(t, n), web_dynamic_coloring(t, n), 2),
               "web(" + std::to_string(t) + "," + std::to_string(n) + ") coloring invalid");
  for (auto [t, n] : {std::pair{1, 4}, {1, 5}, {2, 3}, {2, 4}}) {
    int chi = solve_chi(web(t, n), 2);
    c.expect(chi == 4, "chi_2(web(" + std::to_string(t) + "," + std::to_string(n) +
                           ")) = " + std::to_string(chi) + ", expected 4" +
                           (t == 1 && n % 2 == 0
                                ? " (known defect: hub + alternating rim 3-colors even wheels)"
                                : ""));
  }
  c.finish(start);
}

std::vector<Graph> oracle_instances() {
  std::vector<Graph> zoo;
  for (int n = 2; n <= 9; ++n) zoo.push_back(path(n));
  for (int n = 3; n <= 9; ++n) zoo.push_back(cycle(n));
  for (int n = 3; n <= 9; ++n) zoo.push_back(cycle_square(n));
  for (int n = 2; n <= 4; ++n) zoo.push_back(cartesian_product(path(2), path(n)));
  for (int n = 2; n <= 4; ++n) zoo.push_back(strong_product(path(2), path(n)));
  for (int n = 3; n <= 8; ++n) zoo.push_back(web(1, n));
  zoo.push_back(web(2, 3));
  zoo.push_back(web(2, 4));
  return zoo;
}

void criterion6_oracle_equivalence() {
  auto start = std::chrono::steady_clock::now();
  Criterion c{"criterion 6: exact solver equals brute-force oracle (<= 9 vertices)"};
  for (const Graph& g : oracle_instances())
    for (int r = 1; r <= 4; ++r) {
      int fast = solve_chi(g, r);
      int slow = chi_r_oracle(g, r);
      c.expect(fast == slow, "n=" + std::to_string(g.vertex_count()) + " r=" +
                                 std::to_string(r) + ": solver " + std::to_string(fast) +
                                 " vs oracle " + std::to_string(slow));
    }
  c.finish(start);
}

void criterion7_lemma1_soundness() {
  auto start = std::chrono::steady_clock::now();
  Criterion c{"criterion 7: Lemma 1 bound is sound and exact on grid corners"};
  for (const Graph& g : oracle_instances())
    for (int r = 1; r <= 4; ++r) {
      if (r > g.max_degree()) continue;
      BoundReport bounds = lemma1_scan(g, r);
      if (bounds.lemma1_bound == 0) continue;
      int chi = solve_chi(g, r);
      c.expect(bounds.lemma1_bound <= chi,
               "lemma1 bound " + std::to_string(bounds.lemma1_bound) + " exceeds chi " +
                   std::to_string(chi) + " on n=" + std::to_string(g.vertex_count()) +
                   ", r=" + std::to_string(r));
    }
  for (int n = 2; n <= 7; ++n) {
    Graph g = cartesian_product(path(2), path(n));
    BoundReport bounds = lemma1_scan(g, 2);
    c.expect(bounds.lemma1_bound == 4,
             "grid2n n=" + std::to_string(n) + ": bound " + std::to_string(bounds.lemma1_bound));
    bool corner_pair = bounds.lemma1_witness && g.degree(bounds.lemma1_witness->first) == 2 &&
                       g.degree(bounds.lemma1_witness->second) == 2;
    c.expect(corner_pair, "grid2n n=" + std::to_string(n) + ": witness is not a degree-2 pair");
  }
  c.finish(start);
}

void criterion8_non_monotonicity() {
  auto start = std::chrono::steady_clock::now();
  Criterion c{"criterion 8: chi_2(C_5) = 5 > chi_2(W(1,5)) = 4"};
  int chi_c5 = solve_chi(cycle(5), 2);
  int chi_w15 = solve_chi(web(1, 5), 2);
  c.expect(chi_c5 == 5, "chi_2(C_5) = " + std::to_string(chi_c5));
  c.expect(chi_w15 == 4, "chi_2(W(1,5)) = " + std::to_string(chi_w15));
  c.finish(start);
}

}  // namespace

int main() {
  criterion1_prop1();
  criterion2_thm1();
  criterion3_exclusion_probe();
  criterion4_thm2();
  criterion5_thm3();
  criterion6_oracle_equivalence();
  criterion7_lemma1_soundness();
  criterion8_non_monotonicity();
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures;
}
