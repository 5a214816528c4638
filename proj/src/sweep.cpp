#include "condcolor/sweep.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

#include "condcolor/constructions.hpp"

namespace condcolor {

const char* agreement_name(Agreement a) {
  switch (a) {
    case Agreement::confirmed:
      return "confirmed";
    case Agreement::construction_failed:
      return "construction-failed";
    case Agreement::solver_disagrees:
      return "solver-disagrees";
    case Agreement::unclaimed_probe:
      return "unclaimed-probe";
    case Agreement::skipped:
      return "skipped";
  }
  return "?";
}

int SweepReport::count(Agreement a) const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(),
                                        [a](const SweepRow& r) { return r.agreement == a; }));
}

bool SweepReport::all_claims_hold() const {
  return count(Agreement::construction_failed) == 0 && count(Agreement::solver_disagrees) == 0;
}

namespace {

ClaimedColoring construct_for(const FamilySpec& spec, int r) {
  switch (spec.family) {
    case Family::grid2n:
      return grid2n_coloring(spec.n);
    case Family::cycle_square:
      return cycle_square_coloring(spec.n, r);
    case Family::strong_grid:
      return strong_grid_coloring(spec.n, spec.m, r);
    case Family::web:
      return web_dynamic_coloring(spec.t, spec.n);
    default:
      throw UnsupportedCase("no construction for this family");
  }
}

SweepRow make_row(const FamilySpec& spec, int r, const SweepOptions& opts) {
  SweepRow row;
  row.spec = spec;
  row.r = r;
  row.claimed_chi = claimed_chi(spec, r);

  Graph g = build(spec);

  if (construction_exists(spec, r)) {
    ClaimedColoring claimed = construct_for(spec, r);
    Verdict verdict = verify_conditional(g, claimed.coloring, {r, claimed.claimed_k});
    row.constructed_ok = verdict.valid();
    if (!verdict.valid())
      row.note = claimed.source + ": " + std::to_string(verdict.violation_count()) + " violation(s)";
  }

  if (g.vertex_count() <= opts.solver_cap) {
    SolveResult solved = chi_r_exact(g, r, opts.node_budget);
    if (solved.status == SolveStatus::solved)
      row.solver_chi = solved.chi;
    else
      row.note = "budget exhausted at k=" + std::to_string(solved.chi);
  }

  if (row.claimed_chi) {
    if (row.constructed_ok && !*row.constructed_ok)
      row.agreement = Agreement::construction_failed;
    else if (row.solver_chi)
      row.agreement = *row.claimed_chi == *row.solver_chi ? Agreement::confirmed
                                                          : Agreement::solver_disagrees;
    else
      row.agreement = Agreement::skipped;
  } else {
    row.agreement = row.solver_chi ? Agreement::unclaimed_probe : Agreement::skipped;
  }
  return row;
}

}  // namespace

SweepReport run_sweep(Theorem theorem, const std::vector<int>& ns, const std::vector<int>& ts,
                      const SweepOptions& opts) {
  SweepReport report;
  std::vector<int> sorted_ns = ns;
  std::sort(sorted_ns.begin(), sorted_ns.end());
  std::vector<int> sorted_ts = ts;
  std::sort(sorted_ts.begin(), sorted_ts.end());

  switch (theorem) {
    case Theorem::prop1: {
      std::vector<int> rs = opts.r_values.empty() ? std::vector<int>{2, 3} : opts.r_values;
      for (int n : sorted_ns)
        for (int r : rs) report.rows.push_back(make_row({Family::grid2n, n}, r, opts));
      break;
    }
    case Theorem::thm1: {
      std::vector<int> rs = opts.r_values.empty() ? std::vector<int>{2, 3, 4} : opts.r_values;
      for (int n : sorted_ns)
        for (int r : rs) report.rows.push_back(make_row({Family::cycle_square, n}, r, opts));
      break;
    }
    case Theorem::thm2: {
      for (int n : sorted_ns)
        for (int m : sorted_ns) {
          if (m < n) continue;
          FamilySpec spec{Family::strong_grid, n, m};
          std::vector<int> rs = opts.r_values;
          if (rs.empty()) {
            int max_deg = (n == 2 && m == 2) ? 3 : (n == 2 ? 5 : 8);
            rs = {2, 3, max_deg};
          }
          for (int r : rs) report.rows.push_back(make_row(spec, r, opts));
        }
      break;
    }
    case Theorem::thm3: {
      std::vector<int> rs = opts.r_values.empty() ? std::vector<int>{2} : opts.r_values;
      std::vector<int> ring_counts = sorted_ts.empty() ? std::vector<int>{1} : sorted_ts;
      for (int t : ring_counts)
        for (int n : sorted_ns) {
          FamilySpec spec{Family::web};
          spec.t = t;
          spec.n = n;
          for (int r : rs) report.rows.push_back(make_row(spec, r, opts));
        }
      break;
    }
  }
  return report;
}

std::string sweep_report_to_json(const SweepReport& report) {
  nlohmann::json j;
  j["rows"] = nlohmann::json::array();
  for (const auto& row : report.rows) {
    nlohmann::json item;
    item["family"] = family_name(row.spec.family);
    item["params"] = nlohmann::json::object();
    for (const auto& [key, value] : spec_params(row.spec)) item["params"][key] = value;
    item["r"] = row.r;
    item["claimed_chi"] = row.claimed_chi ? nlohmann::json(*row.claimed_chi) : nlohmann::json();
    item["constructed_ok"] =
        row.constructed_ok ? nlohmann::json(*row.constructed_ok) : nlohmann::json();
    item["solver_chi"] = row.solver_chi ? nlohmann::json(*row.solver_chi) : nlohmann::json();
    item["agreement"] = agreement_name(row.agreement);
    if (!row.note.empty()) item["note"] = row.note;
    j["rows"].push_back(item);
  }
  j["summary"] = {
      {"confirmed", report.count(Agreement::confirmed)},
      {"construction-failed", report.count(Agreement::construction_failed)},
      {"solver-disagrees", report.count(Agreement::solver_disagrees)},
      {"unclaimed-probe", report.count(Agreement::unclaimed_probe)},
      {"skipped", report.count(Agreement::skipped)},
  };
  return j.dump(2);
}

}  // namespace condcolor
